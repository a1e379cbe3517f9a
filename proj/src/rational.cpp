#include "ramlab/rational.hpp"

#include <cctype>

#include "ramlab/error.hpp"

namespace ramlab {

std::string to_string(const Integer& n) { return n.str(); }

std::string to_string(const Rational& r) {
  const Integer num = boost::multiprecision::numerator(r);
  const Integer den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

namespace {

Integer parse_integer(std::string_view text, std::string_view whole) {
  if (text.empty()) throw Error(ErrorCode::kParseError, "empty number in '" + std::string(whole) + "'");
  std::size_t pos = 0;
  bool negative = false;
  if (text[0] == '+' || text[0] == '-') {
    negative = text[0] == '-';
    pos = 1;
  }
  std::size_t exp_pos = text.find_first_of("eE");
  std::string_view mantissa = text.substr(pos, exp_pos == std::string_view::npos ? text.npos : exp_pos - pos);
  if (mantissa.empty()) throw Error(ErrorCode::kParseError, "bad number '" + std::string(whole) + "'");
  Integer value = 0;
  for (char ch : mantissa) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) {
      throw Error(ErrorCode::kParseError, "bad number '" + std::string(whole) + "'");
    }
    value = value * 10 + (ch - '0');
  }
  if (exp_pos != std::string_view::npos) {
    std::string_view exponent = text.substr(exp_pos + 1);
    if (exponent.empty() || exponent.size() > 4) {
      throw Error(ErrorCode::kParseError, "bad exponent in '" + std::string(whole) + "'");
    }
    unsigned e = 0;
    for (char ch : exponent) {
      if (!std::isdigit(static_cast<unsigned char>(ch))) {
        throw Error(ErrorCode::kParseError, "bad exponent in '" + std::string(whole) + "'");
      }
      e = e * 10 + static_cast<unsigned>(ch - '0');
    }
    value *= ipow(Integer(10), e);
  }
  return negative ? Integer(-value) : value;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const std::string_view t = trim(text);
  const std::size_t slash = t.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(t, text));
  const Integer num = parse_integer(trim(t.substr(0, slash)), text);
  const Integer den = parse_integer(trim(t.substr(slash + 1)), text);
  if (den == 0) throw Error(ErrorCode::kParseError, "zero denominator in '" + std::string(text) + "'");
  return Rational(num, den);
}

Integer ipow(const Integer& base, unsigned exponent) {
  Integer result = 1;
  Integer b = base;
  while (exponent != 0) {
    if (exponent & 1U) result *= b;
    exponent >>= 1U;
    if (exponent != 0) b *= b;
  }
  return result;
}

Integer floor_to_integer(const Rational& r) {
  const Integer num = boost::multiprecision::numerator(r);
  const Integer den = boost::multiprecision::denominator(r);
  Integer q = num / den;
  if (num < 0 && q * den != num) q -= 1;
  return q;
}

Rational floor(const Rational& r) { return Rational(floor_to_integer(r)); }

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

namespace {

std::uint64_t powmod(std::uint64_t base, std::uint64_t e, std::uint64_t m) {
  unsigned __int128 result = 1 % m;
  unsigned __int128 b = base % m;
  while (e != 0) {
    if (e & 1U) result = (result * b) % m;
    b = (b * b) % m;
    e >>= 1U;
  }
  return static_cast<std::uint64_t>(result);
}

}  // namespace

bool is_primitive_root(std::uint64_t u, std::uint64_t p) {
  if (!is_prime(p)) throw Error(ErrorCode::kInvalidArgument, "modulus " + std::to_string(p) + " is not prime");
  if (u % p == 0) return false;
  std::uint64_t order = p - 1;
  std::uint64_t rest = order;
  for (std::uint64_t r = 2; r * r <= rest; ++r) {
    if (rest % r != 0) continue;
    if (powmod(u, order / r, p) == 1) return false;
    while (rest % r == 0) rest /= r;
  }
  if (rest > 1 && powmod(u, order / rest, p) == 1) return false;
  return true;
}

std::uint64_t least_primitive_root(std::uint64_t p) {
  for (std::uint64_t u = 1; u < p + 1; ++u) {
    if (is_primitive_root(u, p)) return u;
  }
  throw Error(ErrorCode::kInvalidArgument, "no primitive root for " + std::to_string(p));
}

const Rational& Valuation::value() const {
  if (!value_) throw Error(ErrorCode::kInvalidArgument, "valuation is +infinity");
  return *value_;
}

std::string Valuation::to_string() const { return value_ ? ramlab::to_string(*value_) : "inf"; }

bool operator==(const Valuation& a, const Valuation& b) {
  if (a.is_infinite() || b.is_infinite()) return a.is_infinite() && b.is_infinite();
  return *a.value_ == *b.value_;
}

std::weak_ordering operator<=>(const Valuation& a, const Valuation& b) {
  if (a.is_infinite()) return b.is_infinite() ? std::weak_ordering::equivalent : std::weak_ordering::greater;
  if (b.is_infinite()) return std::weak_ordering::less;
  if (*a.value_ < *b.value_) return std::weak_ordering::less;
  if (*b.value_ < *a.value_) return std::weak_ordering::greater;
  return std::weak_ordering::equivalent;
}

}  // namespace ramlab
