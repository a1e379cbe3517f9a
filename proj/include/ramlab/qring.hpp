#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "ramlab/detail/sparse_series.hpp"
#include "ramlab/finite_field.hpp"
#include "ramlab/matrix.hpp"

namespace ramlab {

// Element of k[[x]]/(x^N) with x = q - 1: the mod-p Wach coefficient ring.
// Two QPolys combine only when field and truncation agree (ParamMismatch
// otherwise); nothing silently changes precision.
class QPoly {
 public:
  QPoly(FiniteField field, std::int64_t trunc);

  static QPoly constant(const FiniteField& field, std::int64_t trunc, Fq c);
  static QPoly x_power(const FiniteField& field, std::int64_t trunc, std::int64_t e, Fq c = 1);
  // q = 1 + x
  static QPoly q(const FiniteField& field, std::int64_t trunc);
  static QPoly from_terms(const FiniteField& field, std::int64_t trunc, detail::Terms terms);

  const FiniteField& field() const { return field_; }
  std::int64_t trunc() const { return trunc_; }
  const detail::Terms& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  Fq coeff(std::int64_t e) const { return detail::coeff_at(terms_, e); }
  // Lowest exponent with a nonzero coefficient; nullopt for zero.
  std::optional<std::int64_t> order() const;

  QPoly zero_like() const { return QPoly(field_, trunc_); }
  QPoly one_like() const { return constant(field_, trunc_, 1); }

  QPoly operator+(const QPoly& other) const;
  QPoly operator-(const QPoly& other) const;
  QPoly operator-() const;
  QPoly operator*(const QPoly& other) const;
  QPoly scaled(Fq c) const;
  QPoly pow(std::uint64_t n) const;

  // Same element, viewed at a lower truncation n <= trunc().
  QPoly truncated(std::int64_t n) const;
  // Inverse of a unit (nonzero constant term); InvalidArgument otherwise.
  QPoly inverse_unit() const;

  friend bool operator==(const QPoly& a, const QPoly& b);

 private:
  void require_compatible(const QPoly& other) const;

  FiniteField field_;
  std::int64_t trunc_;
  detail::Terms terms_;
};

using QMatrix = Matrix<QPoly>;

// phi(q) = q^p: c x^e -> c^p x^{pe}.
QPoly frobenius_q(const QPoly& a);

// q -> q^u, i.e. x -> (1 + x)^u - 1. NonUnitExponent when p | u. The exponent
// is reduced mod p^T with p^T >= N, which changes nothing at truncation N.
QPoly gamma_q(const QPoly& a, std::int64_t u);

// b with b x^j = a; the result has truncation N - j. NotDivisible if a has a
// monomial of exponent below j.
QPoly try_divide(const QPoly& a, std::int64_t j);

// a x^j at the same truncation.
QPoly multiply_by_x_power(const QPoly& a, std::int64_t j);

// Body text "c*x^e + ..." ("0" for zero); the full form prefixes
// "p=<p> f=<f> N=<N>; ".
std::string format_body(const QPoly& a);
std::string to_string(const QPoly& a);

// Accepts the canonical body plus a relaxed human form: "1 + 2*x^3", "x",
// "x^2", "-1", "3*x", "1 - x", and "(1,0)*x" tuples when f > 1.
QPoly parse_qpoly_body(const FiniteField& field, std::int64_t trunc, std::string_view text);
QPoly parse_qpoly(std::string_view text);

QMatrix qmatrix_identity(const FiniteField& field, std::int64_t trunc, std::size_t n);
QMatrix frobenius_q(const QMatrix& m);
QMatrix gamma_q(const QMatrix& m, std::int64_t u);
QMatrix truncated(const QMatrix& m, std::int64_t n);
QPoly determinant(const QMatrix& m);
QMatrix adjugate(const QMatrix& m);

}  // namespace ramlab
