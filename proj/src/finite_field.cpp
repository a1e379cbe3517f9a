#include "ramlab/finite_field.hpp"

#include <cctype>
#include <map>
#include <mutex>

#include "ramlab/error.hpp"
#include "ramlab/rational.hpp"

namespace ramlab {

struct FiniteField::Tables {
  FiniteFieldParams params;
  std::uint32_t q = 0;
  std::vector<std::uint32_t> modulus;
  // Discrete exp/log tables with respect to a generator of F_q^x (f > 1 only).
  std::vector<Fq> exp;
  std::vector<std::uint32_t> log;
};

namespace {

using Digits = std::vector<std::uint32_t>;

Digits to_digits(std::uint32_t a, std::uint32_t p, std::uint32_t f) {
  Digits d(f, 0);
  for (std::uint32_t k = 0; k < f; ++k) {
    d[k] = a % p;
    a /= p;
  }
  return d;
}

std::uint32_t from_digits_raw(const Digits& d, std::uint32_t p) {
  std::uint32_t v = 0;
  for (std::size_t k = d.size(); k-- > 0;) v = v * p + d[k];
  return v;
}

// Product of two residues mod (modulus, p), both given as f digits.
Digits mulmod_poly(const Digits& a, const Digits& b, const Digits& modulus, std::uint32_t p) {
  const std::size_t f = modulus.size() - 1;
  std::vector<std::uint64_t> prod(2 * f, 0);
  for (std::size_t i = 0; i < f; ++i) {
    for (std::size_t j = 0; j < f; ++j) prod[i + j] = (prod[i + j] + std::uint64_t(a[i]) * b[j]) % p;
  }
  for (std::size_t k = 2 * f - 1; k-- > f;) {
    const std::uint64_t c = prod[k];
    if (c == 0) continue;
    // t^k = t^{k-f} * t^f and t^f = -sum modulus[j] t^j
    for (std::size_t j = 0; j < f; ++j) {
      prod[k - f + j] = (prod[k - f + j] + (p - modulus[j]) % p * c) % p;
    }
    prod[k] = 0;
  }
  // also fold the degree-f coefficient
  if (prod[f] != 0) {
    const std::uint64_t c = prod[f];
    for (std::size_t j = 0; j < f; ++j) prod[j] = (prod[j] + (p - modulus[j]) % p * c) % p;
    prod[f] = 0;
  }
  Digits out(f);
  for (std::size_t k = 0; k < f; ++k) out[k] = static_cast<std::uint32_t>(prod[k]);
  return out;
}

// Remainder of a by b over F_p (b monic), coefficients lowest first.
Digits poly_rem(Digits a, const Digits& b, std::uint32_t p) {
  const std::size_t db = b.size() - 1;
  while (a.size() > db) {
    const std::uint32_t c = a.back();
    if (c != 0) {
      const std::size_t shift = a.size() - 1 - db;
      for (std::size_t j = 0; j <= db; ++j) {
        a[shift + j] = static_cast<std::uint32_t>((a[shift + j] + std::uint64_t(p - c) * b[j]) % p);
      }
    }
    a.pop_back();
  }
  return a;
}

bool is_irreducible(const Digits& poly, std::uint32_t p) {
  const std::size_t deg = poly.size() - 1;
  for (std::size_t d = 1; d <= deg / 2; ++d) {
    std::uint64_t count = 1;
    for (std::size_t k = 0; k < d; ++k) count *= p;
    for (std::uint64_t code = 0; code < count; ++code) {
      Digits divisor(d + 1);
      std::uint64_t c = code;
      for (std::size_t k = 0; k < d; ++k) {
        divisor[k] = static_cast<std::uint32_t>(c % p);
        c /= p;
      }
      divisor[d] = 1;
      Digits r = poly_rem(poly, divisor, p);
      bool zero = true;
      for (auto x : r) zero = zero && x == 0;
      if (zero) return false;
    }
  }
  return true;
}

Digits first_irreducible(std::uint32_t p, std::uint32_t f) {
  std::uint64_t count = 1;
  for (std::uint32_t k = 0; k < f; ++k) count *= p;
  for (std::uint64_t code = 0; code < count; ++code) {
    Digits poly(f + 1);
    std::uint64_t c = code;
    for (std::uint32_t k = 0; k < f; ++k) {
      poly[k] = static_cast<std::uint32_t>(c % p);
      c /= p;
    }
    poly[f] = 1;
    if (poly[0] == 0) continue;
    if (is_irreducible(poly, p)) return poly;
  }
  throw Error(ErrorCode::kInvalidArgument, "no irreducible polynomial found");
}

std::shared_ptr<const FiniteField::Tables> build_tables(FiniteFieldParams params);

}  // namespace

namespace {

std::shared_ptr<const FiniteField::Tables> build_tables(FiniteFieldParams params) {
  auto t = std::make_shared<FiniteField::Tables>();
  t->params = params;
  const std::uint32_t p = params.p;
  const std::uint32_t f = params.f;
  std::uint64_t q = 1;
  for (std::uint32_t k = 0; k < f; ++k) q *= p;
  t->q = static_cast<std::uint32_t>(q);
  if (f == 1) {
    t->modulus = {0, 1};
    return t;
  }
  t->modulus = first_irreducible(p, f);
  // Find a generator of the multiplicative group and tabulate its powers.
  std::vector<std::uint32_t> prime_factors;
  std::uint64_t rest = q - 1;
  for (std::uint64_t r = 2; r * r <= rest; ++r) {
    if (rest % r == 0) {
      prime_factors.push_back(static_cast<std::uint32_t>(r));
      while (rest % r == 0) rest /= r;
    }
  }
  if (rest > 1) prime_factors.push_back(static_cast<std::uint32_t>(rest));
  for (std::uint32_t candidate = 2; candidate < q; ++candidate) {
    std::vector<Fq> exp(q - 1);
    Digits g = to_digits(candidate, p, f);
    Digits cur = to_digits(1, p, f);
    bool ok = true;
    for (std::uint64_t k = 0; k < q - 1; ++k) {
      exp[k] = from_digits_raw(cur, p);
      if (k > 0 && exp[k] == 1) {
        ok = false;
        break;
      }
      cur = mulmod_poly(cur, g, t->modulus, p);
    }
    if (!ok) continue;
    t->exp = std::move(exp);
    t->log.assign(q, 0);
    for (std::uint32_t k = 0; k < q - 1; ++k) t->log[t->exp[k]] = k;
    return t;
  }
  throw Error(ErrorCode::kInvalidArgument, "no multiplicative generator found");
}

}  // namespace

FiniteField::FiniteField(FiniteFieldParams params) {
  if (!is_prime(params.p)) throw Error(ErrorCode::kInvalidArgument, "p=" + std::to_string(params.p) + " is not prime");
  if (params.f < 1) throw Error(ErrorCode::kInvalidArgument, "f must be >= 1");
  if (params.f > 1) {
    std::uint64_t q = 1;
    for (std::uint32_t k = 0; k < params.f; ++k) {
      q *= params.p;
      if (q > 65536) throw Error(ErrorCode::kInvalidArgument, "p^f larger than 65536 is not supported for f > 1");
    }
  }
  // Tables are immutable once built; a small cache avoids rebuilding the
  // exp/log tables for every element.
  static std::mutex mutex;
  static std::map<std::pair<std::uint32_t, std::uint32_t>, std::shared_ptr<const Tables>> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto& slot = cache[{params.p, params.f}];
  if (!slot) slot = build_tables(params);
  tables_ = slot;
}

const FiniteFieldParams& FiniteField::params() const { return tables_->params; }
std::uint32_t FiniteField::order() const { return tables_->q; }
const std::vector<std::uint32_t>& FiniteField::modulus() const { return tables_->modulus; }

Fq FiniteField::from_int(std::int64_t v) const {
  const std::int64_t p = characteristic();
  std::int64_t r = v % p;
  if (r < 0) r += p;
  return static_cast<Fq>(r);
}

Fq FiniteField::add(Fq a, Fq b) const {
  const std::uint32_t p = characteristic();
  if (degree() == 1) {
    const std::uint32_t s = a + b;
    return s >= p ? s - p : s;
  }
  Fq out = 0;
  std::uint32_t scale = 1;
  for (std::uint32_t k = 0; k < degree(); ++k) {
    const std::uint32_t da = a % p;
    const std::uint32_t db = b % p;
    a /= p;
    b /= p;
    out += ((da + db) % p) * scale;
    scale *= p;
  }
  return out;
}

Fq FiniteField::neg(Fq a) const {
  const std::uint32_t p = characteristic();
  if (degree() == 1) return a == 0 ? 0 : p - a;
  Fq out = 0;
  std::uint32_t scale = 1;
  for (std::uint32_t k = 0; k < degree(); ++k) {
    const std::uint32_t da = a % p;
    a /= p;
    out += ((p - da) % p) * scale;
    scale *= p;
  }
  return out;
}

Fq FiniteField::sub(Fq a, Fq b) const { return add(a, neg(b)); }

Fq FiniteField::mul(Fq a, Fq b) const {
  if (a == 0 || b == 0) return 0;
  if (degree() == 1) return static_cast<Fq>((std::uint64_t(a) * b) % characteristic());
  const auto& t = *tables_;
  return t.exp[(t.log[a] + t.log[b]) % (t.q - 1)];
}

Fq FiniteField::inv(Fq a) const {
  if (a == 0) throw Error(ErrorCode::kInvalidArgument, "inverse of zero in F_q");
  if (degree() == 1) return pow(a, characteristic() - 2);
  const auto& t = *tables_;
  return t.exp[(t.q - 1 - t.log[a]) % (t.q - 1)];
}

Fq FiniteField::pow(Fq a, std::uint64_t e) const {
  Fq result = 1;
  Fq base = a;
  while (e != 0) {
    if (e & 1U) result = mul(result, base);
    base = mul(base, base);
    e >>= 1U;
  }
  return result;
}

Fq FiniteField::frobenius(Fq a, std::int64_t s) const {
  const std::int64_t f = degree();
  std::int64_t k = s % f;
  if (k < 0) k += f;
  for (std::int64_t j = 0; j < k; ++j) a = pow(a, characteristic());
  return a;
}

std::vector<std::uint32_t> FiniteField::digits(Fq a) const { return to_digits(a, characteristic(), degree()); }

Fq FiniteField::from_digits(const std::vector<std::uint32_t>& d) const {
  if (d.size() != degree()) throw Error(ErrorCode::kInvalidArgument, "digit vector has wrong length");
  Digits reduced(d.size());
  for (std::size_t k = 0; k < d.size(); ++k) reduced[k] = d[k] % characteristic();
  return from_digits_raw(reduced, characteristic());
}

std::string FiniteField::format(Fq a) const {
  if (degree() == 1) return std::to_string(a);
  std::string out = "(";
  const auto d = digits(a);
  for (std::size_t k = 0; k < d.size(); ++k) {
    if (k) out += ",";
    out += std::to_string(d[k]);
  }
  return out + ")";
}

Fq FiniteField::parse(std::string_view text) const {
  auto parse_int = [&](std::string_view s) -> std::int64_t {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    if (s.empty()) throw Error(ErrorCode::kParseError, "empty coefficient");
    bool negative = false;
    if (s.front() == '-' || s.front() == '+') {
      negative = s.front() == '-';
      s.remove_prefix(1);
    }
    if (s.empty() || s.size() > 18) throw Error(ErrorCode::kParseError, "bad coefficient '" + std::string(text) + "'");
    std::int64_t v = 0;
    for (char ch : s) {
      if (!std::isdigit(static_cast<unsigned char>(ch))) {
        throw Error(ErrorCode::kParseError, "bad coefficient '" + std::string(text) + "'");
      }
      v = v * 10 + (ch - '0');
    }
    return negative ? -v : v;
  };
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (!text.empty() && text.front() == '(') {
    if (text.back() != ')') throw Error(ErrorCode::kParseError, "unterminated tuple '" + std::string(text) + "'");
    std::string_view body = text.substr(1, text.size() - 2);
    Digits d;
    std::size_t start = 0;
    while (true) {
      const std::size_t comma = body.find(',', start);
      d.push_back(static_cast<std::uint32_t>(from_int(parse_int(body.substr(start, comma - start)))));
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
    if (d.size() != degree()) {
      throw Error(ErrorCode::kParseError, "tuple '" + std::string(text) + "' needs " + std::to_string(degree()) + " entries");
    }
    return from_digits(d);
  }
  return from_int(parse_int(text));
}

}  // namespace ramlab
