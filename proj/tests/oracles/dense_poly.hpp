#pragma once

// Dense polynomial arithmetic over a prime field F_p, written independently
// of the library's sparse engine and used only as a test oracle.

#include <algorithm>
#include <cstdint>
#include <vector>

#include "ramlab/qring.hpp"

namespace oracle {

using Dense = std::vector<std::int64_t>;

inline Dense trimmed(Dense a, std::size_t trunc) {
  a.resize(trunc, 0);
  return a;
}

inline Dense schoolbook_mul(const Dense& a, const Dense& b, std::int64_t p, std::size_t trunc) {
  Dense out(trunc, 0);
  for (std::size_t i = 0; i < a.size() && i < trunc; ++i) {
    for (std::size_t j = 0; j < b.size() && i + j < trunc; ++j) out[i + j] = (out[i + j] + a[i] * b[j]) % p;
  }
  return out;
}

inline Dense add(const Dense& a, const Dense& b, std::int64_t p) {
  Dense out(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < out.size(); ++i) {
    const std::int64_t x = i < a.size() ? a[i] : 0;
    const std::int64_t y = i < b.size() ? b[i] : 0;
    out[i] = (x + y) % p;
  }
  return out;
}

// (1 + x)^u - 1 by iterating Pascal's rule u times.
inline Dense binomial_minus_one(std::uint64_t u, std::int64_t p, std::size_t trunc) {
  Dense row(trunc, 0);
  row[0] = 1;
  for (std::uint64_t n = 0; n < u; ++n) {
    for (std::size_t k = trunc; k-- > 1;) row[k] = (row[k] + row[k - 1]) % p;
  }
  row[0] = 0;
  return row;
}

// a(image) by Horner's rule.
inline Dense substitute(const Dense& a, const Dense& image, std::int64_t p, std::size_t trunc) {
  Dense out(trunc, 0);
  for (std::size_t k = a.size(); k-- > 0;) {
    out = schoolbook_mul(out, image, p, trunc);
    out[0] = (out[0] + a[k]) % p;
  }
  return out;
}

inline Dense from_qpoly(const ramlab::QPoly& a) {
  Dense out(static_cast<std::size_t>(a.trunc()), 0);
  for (const auto& t : a.terms()) out[static_cast<std::size_t>(t.exp)] = t.coeff;
  return out;
}

inline ramlab::QPoly to_qpoly(const Dense& a, const ramlab::FiniteField& field, std::int64_t trunc) {
  ramlab::detail::Terms terms;
  for (std::size_t i = 0; i < a.size() && static_cast<std::int64_t>(i) < trunc; ++i) {
    const std::int64_t c = ((a[i] % field.characteristic()) + field.characteristic()) % field.characteristic();
    if (c != 0) terms.push_back({static_cast<std::int64_t>(i), static_cast<ramlab::Fq>(c)});
  }
  return ramlab::QPoly::from_terms(field, trunc, std::move(terms));
}

}  // namespace oracle
