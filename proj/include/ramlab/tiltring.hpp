#pragma once

#include <cstdint>
#include <string>

#include "ramlab/detail/sparse_series.hpp"
#include "ramlab/finite_field.hpp"
#include "ramlab/matrix.hpp"
#include "ramlab/qring.hpp"
#include "ramlab/rational.hpp"

namespace ramlab {

enum class RingMode { kTilt, kUntilted };

// Truncated characteristic-p valued ring k[u]/(monomials of valuation > cut).
//
// tilt(N):      u = eps^{1/p^N} - 1 inside the tilt, v(u) = 1/(p^{N-1}(p-1)).
// untilted(s):  u = zeta_{p^{s+1}} - 1, v(u) = 1/(p^s(p-1)); the cut must be
//               below 1 so that p vanishes and the quotient is a k-algebra.
//
// Valuations are normalized by v(p) = 1. Monomial u^m has valuation m/D.
class RingSpec {
 public:
  static RingSpec tilt(const FiniteField& field, int depth, const Rational& cut);
  static RingSpec untilted(const FiniteField& field, int level, const Rational& cut);

  const FiniteField& field() const { return field_; }
  RingMode mode() const { return mode_; }
  // Tilt depth N or untilted level s.
  int index() const { return index_; }
  std::int64_t denom() const { return denom_; }
  const Rational& cut() const { return cut_; }
  std::int64_t max_monomial() const { return max_monomial_; }

  // Monomial index of the image of q - 1: p^{N-1} (tilt) or 1 (untilted).
  std::int64_t q_minus_one_index() const;

  RingSpec with_cut(const Rational& cut) const;
  Rational valuation_of(std::int64_t monomial) const;

  // "mode=tilt N=<N>; cut=<num>/<den>" or "mode=untilted s=<s>; cut=..."
  std::string header() const;

  friend bool operator==(const RingSpec& a, const RingSpec& b);

 private:
  RingSpec(FiniteField field, RingMode mode, int index, std::int64_t denom, Rational cut);

  FiniteField field_;
  RingMode mode_;
  int index_;
  std::int64_t denom_;
  Rational cut_;
  std::int64_t max_monomial_;
};

class ValuedTrunc {
 public:
  explicit ValuedTrunc(RingSpec spec);

  static ValuedTrunc constant(const RingSpec& spec, Fq c);
  static ValuedTrunc monomial(const RingSpec& spec, std::int64_t m, Fq c = 1);
  static ValuedTrunc from_terms(const RingSpec& spec, detail::Terms terms);

  const RingSpec& spec() const { return spec_; }
  const detail::Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Fq coeff(std::int64_t m) const { return detail::coeff_at(terms_, m); }

  ValuedTrunc zero_like() const { return ValuedTrunc(spec_); }
  ValuedTrunc one_like() const { return constant(spec_, 1); }

  ValuedTrunc operator+(const ValuedTrunc& other) const;
  ValuedTrunc operator-(const ValuedTrunc& other) const;
  ValuedTrunc operator-() const;
  ValuedTrunc operator*(const ValuedTrunc& other) const;
  ValuedTrunc scaled(Fq c) const;
  ValuedTrunc pow(std::uint64_t n) const;

  friend bool operator==(const ValuedTrunc& a, const ValuedTrunc& b);

 private:
  void require_compatible(const ValuedTrunc& other) const;

  RingSpec spec_;
  detail::Terms terms_;
};

using VMatrix = Matrix<ValuedTrunc>;

Valuation val(const ValuedTrunc& a);

// Multiplicative p-th power map. Monomials pushed past the cut are dropped.
ValuedTrunc frobenius(const ValuedTrunc& a);

// Cyclotomic Galois action: (1 + u) -> (1 + u)^g, coefficients fixed.
// NonUnitExponent when p | g.
ValuedTrunc galois_act(const ValuedTrunc& a, std::int64_t g);

// Ring map k[[q-1]] -> the valued ring sending q - 1 to eps^{1/p} - 1 (tilt) or
// zeta_{p^{s+1}} - 1 (untilted). CapacityExceeded when the truncation of a
// does not determine its image modulo the cut, i.e. when the image of
// (q-1)^N still has valuation <= cut.
ValuedTrunc embed_q(const QPoly& a, const RingSpec& spec);
VMatrix embed_q(const QMatrix& m, const RingSpec& spec);

// Projection to a smaller cut c <= cut (monomials of valuation > c dropped).
ValuedTrunc reduce_to(const ValuedTrunc& a, const Rational& c);

// The canonical lift to a larger cut: same monomials, reinterpreted.
ValuedTrunc lift_to(const ValuedTrunc& a, const Rational& c);

// Exact division by u^k; the result is known modulo valuations > cut - k/D.
// NotDivisible if a has a monomial below u^k.
ValuedTrunc try_divide_uniformizer(const ValuedTrunc& a, std::int64_t k);

// Least s >= 0 with p^s > c(p-1), i.e. (eps^{1/p} - 1)^{p^s} lies in a^{>c}.
int formality_threshold(std::uint64_t p, const Rational& c);

// "c*u^m + ..." with "0" for the zero element; to_string prefixes the header.
std::string format_body(const ValuedTrunc& a);
std::string to_string(const ValuedTrunc& a);

VMatrix reduce_to(const VMatrix& m, const Rational& c);
VMatrix frobenius(const VMatrix& m);

}  // namespace ramlab
