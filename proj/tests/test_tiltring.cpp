#include "doctest.h"

#include <random>

#include "ramlab/error.hpp"
#include "ramlab/tiltring.hpp"

using namespace ramlab;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::kInvalidArgument;
}

ValuedTrunc random_element(const RingSpec& spec, std::mt19937_64& rng) {
  std::uniform_int_distribution<Fq> coeff(0, spec.field().order() - 1);
  detail::Terms terms;
  for (std::int64_t m = 0; m <= spec.max_monomial(); ++m) {
    const Fq c = coeff(rng);
    if (c != 0) terms.push_back({m, c});
  }
  return ValuedTrunc::from_terms(spec, std::move(terms));
}

QPoly random_qpoly(const FiniteField& k, std::int64_t trunc, std::mt19937_64& rng) {
  std::uniform_int_distribution<Fq> coeff(0, k.order() - 1);
  detail::Terms terms;
  for (std::int64_t e = 0; e < trunc; ++e) {
    const Fq c = coeff(rng);
    if (c != 0) terms.push_back({e, c});
  }
  return QPoly::from_terms(k, trunc, std::move(terms));
}

}  // namespace

TEST_CASE("valuations of monomials") {
  const FiniteField k(3);
  const RingSpec spec = RingSpec::tilt(k, 1, Rational(4));
  CHECK(spec.denom() == 2);
  CHECK(val(ValuedTrunc::monomial(spec, 1)) == Valuation(Rational(1, 2)));
  CHECK(val(ValuedTrunc(spec)).is_infinite());
  CHECK(val(ValuedTrunc::monomial(spec, 2)) == Valuation(Rational(1)));
  CHECK(val(ValuedTrunc::monomial(spec, 9)).is_infinite());

  const RingSpec deep = RingSpec::tilt(k, 3, Rational(1));
  CHECK(deep.denom() == 18);
  CHECK(deep.q_minus_one_index() == 9);
  const RingSpec untilted = RingSpec::untilted(k, 1, Rational(2, 3));
  CHECK(untilted.denom() == 6);
  CHECK(untilted.q_minus_one_index() == 1);
  CHECK(untilted.max_monomial() == 4);
}

TEST_CASE("ring specs validate their cut") {
  const FiniteField k(3);
  CHECK(code_of([&] { RingSpec::untilted(k, 1, Rational(1)); }) == ErrorCode::kRegimeViolation);
  CHECK(code_of([&] { RingSpec::tilt(k, 0, Rational(1)); }) == ErrorCode::kInvalidArgument);
  CHECK(code_of([&] { RingSpec::tilt(k, 1, Rational(-1)); }) == ErrorCode::kInvalidArgument);
  CHECK(RingSpec::tilt(k, 2, Rational(3, 2)).header() == "mode=tilt N=2; cut=3/2");
}

TEST_CASE("valuation is additive and ultrametric") {
  std::mt19937_64 rng(21);
  const FiniteField k(5);
  const RingSpec spec = RingSpec::tilt(k, 1, Rational(3));
  for (int trial = 0; trial < 50; ++trial) {
    const auto m1 = static_cast<std::int64_t>(rng() % 6);
    const auto m2 = static_cast<std::int64_t>(rng() % 6);
    const ValuedTrunc a = ValuedTrunc::monomial(spec, m1, 2) + ValuedTrunc::monomial(spec, m1 + 3, 1);
    const ValuedTrunc b = ValuedTrunc::monomial(spec, m2, 3);
    CHECK(val(a * b) == Valuation(spec.valuation_of(m1 + m2)));
    const ValuedTrunc x = random_element(spec, rng);
    const ValuedTrunc y = random_element(spec, rng);
    CHECK(val(x + y) >= std::min(val(x), val(y)));
  }
}

TEST_CASE("Frobenius is a ring map multiplying valuations by p") {
  std::mt19937_64 rng(22);
  const FiniteField k(3, 2);
  const RingSpec spec = RingSpec::tilt(k, 2, Rational(2));
  for (int trial = 0; trial < 30; ++trial) {
    const ValuedTrunc a = random_element(spec, rng);
    const ValuedTrunc b = random_element(spec, rng);
    CHECK(frobenius(a * b) == frobenius(a) * frobenius(b));
    CHECK(frobenius(a + b) == frobenius(a) + frobenius(b));
    CHECK(frobenius(a) == a.pow(3));
  }
  const ValuedTrunc pi = ValuedTrunc::monomial(spec, 1);
  CHECK(val(frobenius(pi)) == Valuation(Rational(3, 6)));
}

TEST_CASE("Galois action") {
  std::mt19937_64 rng(23);
  const FiniteField k(3);
  const RingSpec spec = RingSpec::tilt(k, 2, Rational(2));
  for (int trial = 0; trial < 30; ++trial) {
    const ValuedTrunc a = random_element(spec, rng);
    const ValuedTrunc b = random_element(spec, rng);
    CHECK(galois_act(a, 1) == a);
    CHECK(galois_act(a * b, 5) == galois_act(a, 5) * galois_act(b, 5));
    CHECK(galois_act(galois_act(a, 2), 4) == galois_act(a, 8));
    CHECK(val(galois_act(a, 7)) == val(a));
  }
  const ValuedTrunc pi = ValuedTrunc::monomial(spec, 1);
  CHECK(galois_act(pi, 2).coeff(1) == 2);
  CHECK(code_of([&] { galois_act(pi, 6); }) == ErrorCode::kNonUnitExponent);
}

TEST_CASE("embedding k[[q-1]] commutes with Frobenius and Gamma") {
  std::mt19937_64 rng(24);
  for (std::uint32_t p : {2u, 3u, 5u}) {
    const FiniteField k(p);
    const RingSpec spec = RingSpec::tilt(k, 2, Rational(2));
    const std::int64_t trunc = 2 * (p - 1) + 1;
    for (int trial = 0; trial < 20; ++trial) {
      const QPoly a = random_qpoly(k, trunc, rng);
      const QPoly b = random_qpoly(k, trunc, rng);
      CHECK(embed_q(a * b, spec) == embed_q(a, spec) * embed_q(b, spec));
      CHECK(embed_q(frobenius_q(a), spec) == frobenius(embed_q(a, spec)));
      std::int64_t g = 1 + static_cast<std::int64_t>(rng() % 40);
      if (g % p == 0) ++g;
      CHECK(embed_q(gamma_q(a, g), spec) == galois_act(embed_q(a, spec), g));
    }
  }
}

TEST_CASE("embedding images of q - 1") {
  const FiniteField k(3);
  const RingSpec tilt = RingSpec::tilt(k, 1, Rational(3, 2));
  const QPoly x2 = QPoly::x_power(k, 4, 2);
  CHECK(embed_q(x2, tilt) == ValuedTrunc::monomial(tilt, 2));
  const RingSpec untilted = RingSpec::untilted(k, 1, Rational(2, 3));
  CHECK(embed_q(QPoly::x_power(k, 5, 2), untilted) == ValuedTrunc::monomial(untilted, 2));
  CHECK(code_of([&] { embed_q(x2.truncated(2), RingSpec::tilt(k, 1, Rational(1))); }) == ErrorCode::kCapacityExceeded);
  CHECK(code_of([&] { embed_q(QPoly::x_power(FiniteField(5), 4, 1), tilt); }) == ErrorCode::kParamMismatch);
}

TEST_CASE("reduce, lift and divide") {
  const FiniteField k(3);
  const RingSpec spec = RingSpec::tilt(k, 1, Rational(3));
  const ValuedTrunc pi = ValuedTrunc::monomial(spec, 1);
  const ValuedTrunc x = pi + ValuedTrunc::monomial(spec, 5);
  const ValuedTrunc r = reduce_to(x, Rational(1, 2));
  CHECK(r.spec().cut() == Rational(1, 2));
  CHECK(format_body(r) == "u");
  CHECK(reduce_to(lift_to(r, Rational(3)), Rational(1, 2)) == r);
  CHECK(lift_to(r, Rational(3)) == pi);
  CHECK(code_of([&] { reduce_to(r, Rational(1)); }) == ErrorCode::kInvalidArgument);

  const ValuedTrunc q = try_divide_uniformizer(x, 1);
  CHECK(q.spec().cut() == Rational(5, 2));
  CHECK(format_body(q) == "1 + u^4");
  CHECK(code_of([&] { try_divide_uniformizer(x, 2); }) == ErrorCode::kNotDivisible);
  CHECK(to_string(pi) == "mode=tilt N=1; cut=3/1; u");
}

TEST_CASE("formality threshold") {
  CHECK(formality_threshold(3, Rational(1, 2)) == 1);
  CHECK(formality_threshold(2, Rational(2)) == 2);
  CHECK(formality_threshold(5, Rational(1, 5)) == 0);
  CHECK(formality_threshold(3, Rational(3, 2)) == 2);
}
