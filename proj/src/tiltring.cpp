#include "ramlab/tiltring.hpp"

#include <sstream>

#include "ramlab/error.hpp"

namespace ramlab {

namespace {

std::int64_t checked_pow(std::int64_t base, int e) {
  std::int64_t out = 1;
  for (int k = 0; k < e; ++k) {
    if (out > (std::int64_t{1} << 40) / base) throw Error(ErrorCode::kInvalidArgument, "ring denominator too large");
    out *= base;
  }
  return out;
}

std::int64_t monomial_capacity(const Rational& cut, std::int64_t denom) {
  const Integer m = floor_to_integer(cut * denom);
  if (m > Integer(std::int64_t{1} << 24)) throw Error(ErrorCode::kInvalidArgument, "ring cut too large for the monomial model");
  return static_cast<std::int64_t>(m);
}

}  // namespace

RingSpec::RingSpec(FiniteField field, RingMode mode, int index, std::int64_t denom, Rational cut)
    : field_(std::move(field)), mode_(mode), index_(index), denom_(denom), cut_(std::move(cut)) {
  if (cut_ < 0) throw Error(ErrorCode::kInvalidArgument, "ring cut must be nonnegative");
  if (mode_ == RingMode::kUntilted && cut_ >= 1) {
    throw Error(ErrorCode::kRegimeViolation, "untilted ring needs cut < 1 so that p = 0 (got cut=" + to_string(cut_) + ")");
  }
  max_monomial_ = monomial_capacity(cut_, denom_);
}

RingSpec RingSpec::tilt(const FiniteField& field, int depth, const Rational& cut) {
  if (depth < 1) throw Error(ErrorCode::kInvalidArgument, "tilt depth must be >= 1");
  const std::int64_t p = field.characteristic();
  return RingSpec(field, RingMode::kTilt, depth, checked_pow(p, depth - 1) * (p - 1), cut);
}

RingSpec RingSpec::untilted(const FiniteField& field, int level, const Rational& cut) {
  if (level < 0) throw Error(ErrorCode::kInvalidArgument, "untilted level must be >= 0");
  const std::int64_t p = field.characteristic();
  return RingSpec(field, RingMode::kUntilted, level, checked_pow(p, level) * (p - 1), cut);
}

std::int64_t RingSpec::q_minus_one_index() const {
  if (mode_ == RingMode::kUntilted) return 1;
  return checked_pow(field_.characteristic(), index_ - 1);
}

RingSpec RingSpec::with_cut(const Rational& cut) const { return RingSpec(field_, mode_, index_, denom_, cut); }

Rational RingSpec::valuation_of(std::int64_t monomial) const { return Rational(monomial, denom_); }

std::string RingSpec::header() const {
  std::ostringstream os;
  if (mode_ == RingMode::kTilt) {
    os << "mode=tilt N=" << index_;
  } else {
    os << "mode=untilted s=" << index_;
  }
  const Integer num = boost::multiprecision::numerator(cut_);
  const Integer den = boost::multiprecision::denominator(cut_);
  os << "; cut=" << num << "/" << den;
  return os.str();
}

bool operator==(const RingSpec& a, const RingSpec& b) {
  return a.field_ == b.field_ && a.mode_ == b.mode_ && a.index_ == b.index_ && a.cut_ == b.cut_;
}

ValuedTrunc::ValuedTrunc(RingSpec spec) : spec_(std::move(spec)) {}

ValuedTrunc ValuedTrunc::constant(const RingSpec& spec, Fq c) { return from_terms(spec, {{0, c}}); }

ValuedTrunc ValuedTrunc::monomial(const RingSpec& spec, std::int64_t m, Fq c) { return from_terms(spec, {{m, c}}); }

ValuedTrunc ValuedTrunc::from_terms(const RingSpec& spec, detail::Terms terms) {
  ValuedTrunc out(spec);
  out.terms_ = detail::normalized(spec.field(), std::move(terms), spec.max_monomial());
  return out;
}

void ValuedTrunc::require_compatible(const ValuedTrunc& other) const {
  if (!(spec_ == other.spec_)) {
    throw Error(ErrorCode::kParamMismatch, "operands live in different rings (" + spec_.header() + " vs " + other.spec_.header() + ")");
  }
}

ValuedTrunc ValuedTrunc::operator+(const ValuedTrunc& other) const {
  require_compatible(other);
  ValuedTrunc out(spec_);
  out.terms_ = detail::add(spec_.field(), terms_, other.terms_);
  return out;
}

ValuedTrunc ValuedTrunc::operator-(const ValuedTrunc& other) const {
  require_compatible(other);
  ValuedTrunc out(spec_);
  out.terms_ = detail::sub(spec_.field(), terms_, other.terms_);
  return out;
}

ValuedTrunc ValuedTrunc::operator-() const {
  ValuedTrunc out(spec_);
  out.terms_ = detail::neg(spec_.field(), terms_);
  return out;
}

ValuedTrunc ValuedTrunc::operator*(const ValuedTrunc& other) const {
  require_compatible(other);
  ValuedTrunc out(spec_);
  out.terms_ = detail::mul(spec_.field(), terms_, other.terms_, spec_.max_monomial());
  return out;
}

ValuedTrunc ValuedTrunc::scaled(Fq c) const {
  ValuedTrunc out(spec_);
  out.terms_ = detail::scale(spec_.field(), terms_, c);
  return out;
}

ValuedTrunc ValuedTrunc::pow(std::uint64_t n) const {
  ValuedTrunc out(spec_);
  out.terms_ = detail::pow(spec_.field(), terms_, n, spec_.max_monomial());
  return out;
}

bool operator==(const ValuedTrunc& a, const ValuedTrunc& b) { return a.spec_ == b.spec_ && a.terms_ == b.terms_; }

Valuation val(const ValuedTrunc& a) {
  if (a.is_zero()) return Valuation::infinity();
  return Valuation(a.spec().valuation_of(a.terms().front().exp));
}

ValuedTrunc frobenius(const ValuedTrunc& a) {
  const auto& spec = a.spec();
  return ValuedTrunc::from_terms(spec, detail::frobenius(spec.field(), a.terms(), spec.max_monomial()));
}

ValuedTrunc galois_act(const ValuedTrunc& a, std::int64_t g) {
  const auto& spec = a.spec();
  const std::int64_t p = spec.field().characteristic();
  if (g % p == 0) {
    throw Error(ErrorCode::kNonUnitExponent, "Galois exponent " + std::to_string(g) + " is divisible by p=" + std::to_string(p));
  }
  // (1+u)^{p^T} = 1 + u^{p^T} vanishes beyond the cut once p^T > max monomial.
  std::int64_t modulus = p;
  while (modulus <= spec.max_monomial()) modulus *= p;
  std::int64_t r = g % modulus;
  if (r < 0) r += modulus;
  const detail::Terms image =
      detail::one_plus_t_power_minus_one(spec.field(), static_cast<std::uint64_t>(r), spec.max_monomial());
  return ValuedTrunc::from_terms(spec, detail::substitute(spec.field(), a.terms(), image, spec.max_monomial()));
}

ValuedTrunc embed_q(const QPoly& a, const RingSpec& spec) {
  if (!(a.field() == spec.field())) throw Error(ErrorCode::kParamMismatch, "embed_q: coefficient fields differ");
  const std::int64_t idx = spec.q_minus_one_index();
  if (a.trunc() * idx <= spec.max_monomial()) {
    throw Error(ErrorCode::kCapacityExceeded,
                "QPoly truncated at N=" + std::to_string(a.trunc()) + " does not determine its image at " + spec.header() +
                    " (need N*" + std::to_string(idx) + " > " + std::to_string(spec.max_monomial()) + ")");
  }
  detail::Terms terms;
  for (const auto& t : a.terms()) {
    const std::int64_t m = t.exp * idx;
    if (m > spec.max_monomial()) break;
    terms.push_back({m, t.coeff});
  }
  return ValuedTrunc::from_terms(spec, std::move(terms));
}

VMatrix embed_q(const QMatrix& m, const RingSpec& spec) {
  VMatrix out(m.rows(), m.cols(), ValuedTrunc(spec));
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = embed_q(m(r, c), spec);
  }
  return out;
}

ValuedTrunc reduce_to(const ValuedTrunc& a, const Rational& c) {
  if (c > a.spec().cut()) {
    throw Error(ErrorCode::kInvalidArgument, "reduce_to: cut " + to_string(c) + " exceeds ring cut " + to_string(a.spec().cut()));
  }
  return ValuedTrunc::from_terms(a.spec().with_cut(c), a.terms());
}

ValuedTrunc lift_to(const ValuedTrunc& a, const Rational& c) {
  if (c < a.spec().cut()) {
    throw Error(ErrorCode::kInvalidArgument, "lift_to: cut " + to_string(c) + " is below ring cut " + to_string(a.spec().cut()));
  }
  return ValuedTrunc::from_terms(a.spec().with_cut(c), a.terms());
}

ValuedTrunc try_divide_uniformizer(const ValuedTrunc& a, std::int64_t k) {
  const RingSpec& spec = a.spec();
  if (k < 0) throw Error(ErrorCode::kInvalidArgument, "negative division exponent");
  if (!a.is_zero() && a.terms().front().exp < k) {
    throw Error(ErrorCode::kNotDivisible, "monomial u^" + std::to_string(a.terms().front().exp) + " is not divisible by u^" + std::to_string(k));
  }
  const Rational new_cut = spec.cut() - Rational(k, spec.denom());
  if (new_cut < 0) throw Error(ErrorCode::kPrecisionTooLow, "division by u^" + std::to_string(k) + " exhausts the precision");
  const RingSpec out_spec = spec.with_cut(new_cut);
  return ValuedTrunc::from_terms(out_spec, detail::shift(a.terms(), -k, out_spec.max_monomial()));
}

int formality_threshold(std::uint64_t p, const Rational& c) {
  if (c <= 0) throw Error(ErrorCode::kInvalidArgument, "formality threshold needs c > 0");
  const Rational bound = c * (p - 1);
  int s = 0;
  Integer power = 1;
  while (Rational(power) <= bound) {
    power *= p;
    ++s;
  }
  return s;
}

std::string format_body(const ValuedTrunc& a) {
  return detail::format_terms(a.spec().field(), a.terms(), "u");
}

std::string to_string(const ValuedTrunc& a) { return a.spec().header() + "; " + format_body(a); }

VMatrix reduce_to(const VMatrix& m, const Rational& c) {
  return m.map([&c](const ValuedTrunc& a) { return reduce_to(a, c); });
}

VMatrix frobenius(const VMatrix& m) {
  return m.map([](const ValuedTrunc& a) { return frobenius(a); });
}

}  // namespace ramlab
