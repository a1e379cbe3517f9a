#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace ramlab {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// "5/2", "-1/3", or "4" when the denominator is 1.
std::string to_string(const Rational& r);
std::string to_string(const Integer& n);

// Accepts "a", "a/b", and plain decimal/scientific integers such as "1e6"
// (the latter only where the value is integral).
Rational parse_rational(std::string_view text);

Integer ipow(const Integer& base, unsigned exponent);
Rational floor(const Rational& r);
Integer floor_to_integer(const Rational& r);

bool is_prime(std::uint64_t n);

// Smallest positive integer whose class generates (Z/p)^x.
std::uint64_t least_primitive_root(std::uint64_t p);
bool is_primitive_root(std::uint64_t u, std::uint64_t p);

// Valuations of truncated ring elements: a rational or +infinity (the zero
// element, or anything cut away by the truncation).
class Valuation {
 public:
  Valuation() = default;
  explicit Valuation(Rational value) : value_(std::move(value)) {}

  static Valuation infinity() { return Valuation(); }

  bool is_infinite() const { return !value_.has_value(); }
  const Rational& value() const;

  std::string to_string() const;

  friend bool operator==(const Valuation& a, const Valuation& b);
  friend std::weak_ordering operator<=>(const Valuation& a, const Valuation& b);

 private:
  std::optional<Rational> value_;
};

}  // namespace ramlab
