#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "ramlab/finite_field.hpp"

// Sparse truncated power series over F_q: the arithmetic engine behind both
// QPoly (variable q-1) and ValuedTrunc (a fractional-valuation uniformizer).
// Terms are sorted by exponent and never hold a zero coefficient. Every
// operation takes the largest exponent it is allowed to keep.
namespace ramlab::detail {

struct Term {
  std::int64_t exp;
  Fq coeff;

  friend bool operator==(const Term&, const Term&) = default;
};

using Terms = std::vector<Term>;

Terms normalized(const FiniteField& k, Terms terms, std::int64_t max_exp);
Terms truncated(const Terms& a, std::int64_t max_exp);

Terms add(const FiniteField& k, const Terms& a, const Terms& b);
Terms sub(const FiniteField& k, const Terms& a, const Terms& b);
Terms neg(const FiniteField& k, const Terms& a);
Terms scale(const FiniteField& k, const Terms& a, Fq c);
Terms mul(const FiniteField& k, const Terms& a, const Terms& b, std::int64_t max_exp);
Terms pow(const FiniteField& k, const Terms& a, std::uint64_t n, std::int64_t max_exp);
Terms shift(const Terms& a, std::int64_t by, std::int64_t max_exp);

// c t^e -> c^p t^{pe}
Terms frobenius(const FiniteField& k, const Terms& a, std::int64_t max_exp);

// (1 + t)^u - 1 in characteristic p, via the base-p digits of u.
Terms one_plus_t_power_minus_one(const FiniteField& k, std::uint64_t u, std::int64_t max_exp);

// a(image) where image has zero constant term.
Terms substitute(const FiniteField& k, const Terms& a, const Terms& image, std::int64_t max_exp);

// Coefficients c -> c^{p^s}.
Terms twist_coefficients(const FiniteField& k, const Terms& a, std::int64_t s);

Fq coeff_at(const Terms& a, std::int64_t exp);

// "2 + x + 3*x^4" in the variable var; "0" for no terms.
std::string format_terms(const FiniteField& k, const Terms& a, std::string_view var);

}  // namespace ramlab::detail
