#include "doctest.h"

#include <random>

#include "oracles/dense_poly.hpp"
#include "ramlab/error.hpp"
#include "ramlab/qring.hpp"

using namespace ramlab;

namespace {

QPoly random_qpoly(const FiniteField& k, std::int64_t trunc, std::mt19937_64& rng, double density = 0.5) {
  std::uniform_int_distribution<Fq> coeff(1, k.order() - 1);
  std::bernoulli_distribution keep(density);
  detail::Terms terms;
  for (std::int64_t e = 0; e < trunc; ++e) {
    if (keep(rng)) terms.push_back({e, coeff(rng)});
  }
  return QPoly::from_terms(k, trunc, std::move(terms));
}

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::kInvalidArgument;
}

}  // namespace

TEST_CASE("basic examples") {
  const FiniteField f2(2);
  const QPoly x2 = QPoly::x_power(f2, 4, 1);
  CHECK((x2 + x2).is_zero());
  CHECK(x2 * x2 == QPoly::x_power(f2, 4, 2));

  const FiniteField f3(3);
  const QPoly a = parse_qpoly_body(f3, 3, "1 + x");
  const QPoly b = parse_qpoly_body(f3, 3, "1 + x + x^2");
  const oracle::Dense expected = oracle::schoolbook_mul(oracle::from_qpoly(a), oracle::from_qpoly(b), 3, 3);
  CHECK(a * b == oracle::to_qpoly(expected, f3, 3));
  CHECK(format_body(a * b) == "1 + 2*x + 2*x^2");
}

TEST_CASE("products agree with schoolbook multiplication") {
  std::mt19937_64 rng(11);
  for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
    const FiniteField k(p);
    for (int trial = 0; trial < 40; ++trial) {
      const std::int64_t n = 1 + static_cast<std::int64_t>(rng() % 20);
      const QPoly a = random_qpoly(k, n, rng);
      const QPoly b = random_qpoly(k, n, rng);
      const auto expected = oracle::schoolbook_mul(oracle::from_qpoly(a), oracle::from_qpoly(b), p, n);
      CHECK(a * b == oracle::to_qpoly(expected, k, n));
      CHECK(a + b == oracle::to_qpoly(oracle::add(oracle::from_qpoly(a), oracle::from_qpoly(b), p), k, n));
      CHECK(a - a == a.zero_like());
    }
  }
}

TEST_CASE("gamma agrees with dense substitution and is a ring map") {
  std::mt19937_64 rng(12);
  for (std::uint32_t p : {2u, 3u, 5u}) {
    const FiniteField k(p);
    for (int trial = 0; trial < 30; ++trial) {
      const std::int64_t n = 2 + static_cast<std::int64_t>(rng() % 16);
      std::int64_t u = 1 + static_cast<std::int64_t>(rng() % 60);
      if (u % p == 0) ++u;
      const QPoly a = random_qpoly(k, n, rng);
      const QPoly b = random_qpoly(k, n, rng);
      const auto image = oracle::binomial_minus_one(static_cast<std::uint64_t>(u), p, static_cast<std::size_t>(n));
      const auto expected = oracle::substitute(oracle::from_qpoly(a), image, p, static_cast<std::size_t>(n));
      CHECK(gamma_q(a, u) == oracle::to_qpoly(expected, k, n));
      CHECK(gamma_q(a * b, u) == gamma_q(a, u) * gamma_q(b, u));
      CHECK(gamma_q(a + b, u) == gamma_q(a, u) + gamma_q(b, u));
      std::int64_t v = 1 + static_cast<std::int64_t>(rng() % 30);
      if (v % p == 0) ++v;
      CHECK(gamma_q(gamma_q(a, u), v) == gamma_q(a, u * v));
      CHECK(frobenius_q(gamma_q(a, u)) == gamma_q(frobenius_q(a), u));
    }
    const QPoly a = random_qpoly(k, 9, rng);
    CHECK(gamma_q(a, 1) == a);
    CHECK(code_of([&] { gamma_q(a, static_cast<std::int64_t>(p)); }) == ErrorCode::kNonUnitExponent);
  }
}

TEST_CASE("gamma reduces large exponents without changing the result") {
  const FiniteField k(3);
  const QPoly a = parse_qpoly_body(k, 10, "1 + x + 2*x^4");
  CHECK(gamma_q(a, 2) == gamma_q(a, 2 + 3 * 3 * 3 * 100));
}

TEST_CASE("Frobenius is multiplicative and raises coefficients to the p-th power") {
  std::mt19937_64 rng(13);
  const FiniteField k(3, 2);
  for (int trial = 0; trial < 30; ++trial) {
    const QPoly a = random_qpoly(k, 12, rng);
    const QPoly b = random_qpoly(k, 12, rng);
    CHECK(frobenius_q(a * b) == frobenius_q(a) * frobenius_q(b));
    CHECK(frobenius_q(a + b) == frobenius_q(a) + frobenius_q(b));
  }
  const QPoly t = QPoly::x_power(k, 12, 2, 4);
  CHECK(frobenius_q(t) == QPoly::x_power(k, 12, 6, k.frobenius(4)));
}

TEST_CASE("division by powers of x") {
  const FiniteField k(3);
  const QPoly x3 = QPoly::x_power(k, 6, 3);
  const QPoly q = try_divide(x3, 1);
  CHECK(q.trunc() == 5);
  CHECK(q == QPoly::x_power(k, 5, 2));
  CHECK(code_of([&] { try_divide(QPoly::constant(k, 6, 1), 1); }) == ErrorCode::kNotDivisible);
  for (std::uint32_t p : {2u, 3u, 5u}) {
    const FiniteField kp(p);
    const QPoly a = QPoly::x_power(kp, 10, 1) + QPoly::x_power(kp, 10, p);
    CHECK(try_divide(a, 1) == QPoly::constant(kp, 9, 1) + QPoly::x_power(kp, 9, p - 1));
  }
  CHECK(multiply_by_x_power(QPoly::x_power(k, 6, 4), 2).is_zero());
}

TEST_CASE("inverse of units") {
  std::mt19937_64 rng(14);
  const FiniteField k(5);
  for (int trial = 0; trial < 20; ++trial) {
    QPoly a = random_qpoly(k, 15, rng);
    if (a.coeff(0) == 0) a = a + a.one_like();
    CHECK(a * a.inverse_unit() == a.one_like());
  }
  CHECK(code_of([&] { QPoly::x_power(k, 5, 1).inverse_unit(); }) == ErrorCode::kInvalidArgument);
}

TEST_CASE("incompatible operands are rejected") {
  const FiniteField k3(3);
  const FiniteField k5(5);
  CHECK(code_of([&] { return QPoly::q(k3, 4) + QPoly::q(k3, 5); }) == ErrorCode::kParamMismatch);
  CHECK(code_of([&] { return QPoly::q(k3, 4) * QPoly::q(k5, 4); }) == ErrorCode::kParamMismatch);
}

TEST_CASE("text form round trips") {
  std::mt19937_64 rng(15);
  for (const FiniteField& k : {FiniteField(3), FiniteField(2, 3)}) {
    for (int trial = 0; trial < 20; ++trial) {
      const QPoly a = random_qpoly(k, 10, rng);
      CHECK(parse_qpoly(to_string(a)) == a);
      CHECK(parse_qpoly_body(k, 10, format_body(a)) == a);
    }
  }
  const FiniteField k(3);
  CHECK(parse_qpoly_body(k, 5, "1 - x") == parse_qpoly_body(k, 5, "1 + 2*x"));
  CHECK(parse_qpoly_body(k, 5, "-1") == QPoly::constant(k, 5, 2));
  CHECK(format_body(QPoly(k, 5)) == "0");
  CHECK(code_of([&] { parse_qpoly_body(k, 5, "1 + y"); }) == ErrorCode::kParseError);
}

TEST_CASE("determinant and adjugate") {
  std::mt19937_64 rng(16);
  const FiniteField k(3);
  for (std::size_t n : {1u, 2u, 3u}) {
    QMatrix m(n, n, QPoly(k, 8));
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c = 0; c < n; ++c) m(r, c) = random_qpoly(k, 8, rng);
    }
    const QPoly det = determinant(m);
    const QMatrix product = m * adjugate(m);
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c = 0; c < n; ++c) CHECK(product(r, c) == (r == c ? det : det.zero_like()));
    }
  }
}
