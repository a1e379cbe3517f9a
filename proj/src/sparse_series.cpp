#include "ramlab/detail/sparse_series.hpp"

#include <algorithm>

#include "ramlab/error.hpp"

namespace ramlab::detail {

Terms normalized(const FiniteField& k, Terms terms, std::int64_t max_exp) {
  std::sort(terms.begin(), terms.end(), [](const Term& x, const Term& y) { return x.exp < y.exp; });
  Terms out;
  out.reserve(terms.size());
  for (const Term& t : terms) {
    if (t.exp < 0) throw Error(ErrorCode::kInvalidArgument, "negative exponent");
    if (t.exp > max_exp) break;
    if (!out.empty() && out.back().exp == t.exp) {
      out.back().coeff = k.add(out.back().coeff, t.coeff);
      if (out.back().coeff == 0) out.pop_back();
    } else if (t.coeff != 0) {
      out.push_back(t);
    }
  }
  return out;
}

Terms truncated(const Terms& a, std::int64_t max_exp) {
  Terms out;
  for (const Term& t : a) {
    if (t.exp > max_exp) break;
    out.push_back(t);
  }
  return out;
}

Terms add(const FiniteField& k, const Terms& a, const Terms& b) {
  Terms out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].exp < b[j].exp)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].exp < a[i].exp) {
      out.push_back(b[j++]);
    } else {
      const Fq c = k.add(a[i].coeff, b[j].coeff);
      if (c != 0) out.push_back({a[i].exp, c});
      ++i;
      ++j;
    }
  }
  return out;
}

Terms neg(const FiniteField& k, const Terms& a) {
  Terms out = a;
  for (Term& t : out) t.coeff = k.neg(t.coeff);
  return out;
}

Terms sub(const FiniteField& k, const Terms& a, const Terms& b) { return add(k, a, neg(k, b)); }

Terms scale(const FiniteField& k, const Terms& a, Fq c) {
  if (c == 0) return {};
  Terms out = a;
  for (Term& t : out) t.coeff = k.mul(t.coeff, c);
  return out;
}

Terms mul(const FiniteField& k, const Terms& a, const Terms& b, std::int64_t max_exp) {
  if (a.empty() || b.empty() || max_exp < 0) return {};
  const std::int64_t lo = a.front().exp + b.front().exp;
  if (lo > max_exp) return {};
  std::vector<Fq> dense(static_cast<std::size_t>(max_exp - lo + 1), 0);
  for (const Term& x : a) {
    if (x.exp + b.front().exp > max_exp) break;
    for (const Term& y : b) {
      const std::int64_t e = x.exp + y.exp;
      if (e > max_exp) break;
      Fq& slot = dense[static_cast<std::size_t>(e - lo)];
      slot = k.add(slot, k.mul(x.coeff, y.coeff));
    }
  }
  Terms out;
  for (std::size_t idx = 0; idx < dense.size(); ++idx) {
    if (dense[idx] != 0) out.push_back({lo + static_cast<std::int64_t>(idx), dense[idx]});
  }
  return out;
}

Terms pow(const FiniteField& k, const Terms& a, std::uint64_t n, std::int64_t max_exp) {
  Terms result{{0, 1}};
  if (max_exp < 0) return {};
  Terms base = a;
  while (n != 0) {
    if (n & 1U) result = mul(k, result, base, max_exp);
    n >>= 1U;
    if (n != 0) base = mul(k, base, base, max_exp);
  }
  return result;
}

Terms shift(const Terms& a, std::int64_t by, std::int64_t max_exp) {
  Terms out;
  for (const Term& t : a) {
    const std::int64_t e = t.exp + by;
    if (e < 0) throw Error(ErrorCode::kInvalidArgument, "shift below exponent zero");
    if (e > max_exp) break;
    out.push_back({e, t.coeff});
  }
  return out;
}

Terms frobenius(const FiniteField& k, const Terms& a, std::int64_t max_exp) {
  const std::int64_t p = k.characteristic();
  Terms out;
  for (const Term& t : a) {
    const std::int64_t e = t.exp * p;
    if (e > max_exp) break;
    out.push_back({e, k.frobenius(t.coeff)});
  }
  return out;
}

Terms one_plus_t_power_minus_one(const FiniteField& k, std::uint64_t u, std::int64_t max_exp) {
  const std::uint64_t p = k.characteristic();
  Terms result{{0, 1}};
  std::int64_t place = 1;  // p^j
  while (u != 0 && place <= max_exp) {
    const std::uint64_t digit = u % p;
    u /= p;
    if (digit != 0) {
      // (1 + t^{p^j})^digit, binomial coefficients C(digit, r) are units mod p.
      Terms factor;
      std::uint64_t binom = 1;
      for (std::uint64_t r = 0; r <= digit; ++r) {
        if (r > 0) {
          binom = binom * ((digit - r + 1) % p) % p;
          binom = binom * k.inv(static_cast<Fq>(r % p)) % p;
        }
        const std::int64_t e = static_cast<std::int64_t>(r) * place;
        if (e > max_exp) break;
        factor.push_back({e, static_cast<Fq>(binom)});
      }
      result = mul(k, result, factor, max_exp);
    }
    if (place > max_exp / static_cast<std::int64_t>(p)) break;
    place *= static_cast<std::int64_t>(p);
  }
  return sub(k, result, Terms{{0, 1}});
}

Terms substitute(const FiniteField& k, const Terms& a, const Terms& image, std::int64_t max_exp) {
  if (!image.empty() && image.front().exp == 0) {
    throw Error(ErrorCode::kInvalidArgument, "substitution image must have zero constant term");
  }
  Terms out;
  Terms power{{0, 1}};
  std::int64_t current = 0;
  for (const Term& t : a) {
    while (current < t.exp) {
      power = mul(k, power, image, max_exp);
      ++current;
      if (power.empty()) break;
    }
    if (power.empty()) break;
    out = add(k, out, scale(k, power, t.coeff));
  }
  return out;
}

Terms twist_coefficients(const FiniteField& k, const Terms& a, std::int64_t s) {
  if (k.degree() == 1) return a;
  Terms out = a;
  for (Term& t : out) t.coeff = k.frobenius(t.coeff, s);
  return out;
}

Fq coeff_at(const Terms& a, std::int64_t exp) {
  auto it = std::lower_bound(a.begin(), a.end(), exp, [](const Term& t, std::int64_t e) { return t.exp < e; });
  return (it != a.end() && it->exp == exp) ? it->coeff : 0;
}

std::string format_terms(const FiniteField& k, const Terms& a, std::string_view var) {
  if (a.empty()) return "0";
  std::string out;
  for (const auto& t : a) {
    if (!out.empty()) out += " + ";
    if (t.exp == 0) {
      out += k.format(t.coeff);
      continue;
    }
    if (t.coeff != 1) out += k.format(t.coeff) + "*";
    out += var;
    if (t.exp != 1) out += "^" + std::to_string(t.exp);
  }
  return out;
}

}  // namespace ramlab::detail
