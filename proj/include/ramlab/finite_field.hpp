#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace ramlab {

// Elements of F_{p^f} are encoded as integers in [0, p^f): the base-p digits
// are the coefficients in the polynomial basis 1, t, ..., t^{f-1} over the
// stored irreducible modulus. For f = 1 the encoding is the residue itself.
using Fq = std::uint32_t;

struct FiniteFieldParams {
  std::uint32_t p = 2;
  std::uint32_t f = 1;

  friend bool operator==(const FiniteFieldParams&, const FiniteFieldParams&) = default;
};

class FiniteField {
 public:
  // Throws InvalidArgument unless p is prime, f >= 1 and (for f > 1) p^f <= 65536.
  explicit FiniteField(FiniteFieldParams params);
  FiniteField(std::uint32_t p, std::uint32_t f = 1) : FiniteField(FiniteFieldParams{p, f}) {}

  const FiniteFieldParams& params() const;
  std::uint32_t characteristic() const { return params().p; }
  std::uint32_t degree() const { return params().f; }
  std::uint32_t order() const;

  // Monic irreducible modulus, lowest coefficient first (size f + 1). For
  // f > 1 this is the lexicographically first monic irreducible polynomial.
  const std::vector<std::uint32_t>& modulus() const;

  Fq from_int(std::int64_t v) const;
  Fq add(Fq a, Fq b) const;
  Fq sub(Fq a, Fq b) const;
  Fq neg(Fq a) const;
  Fq mul(Fq a, Fq b) const;
  Fq inv(Fq a) const;
  Fq pow(Fq a, std::uint64_t e) const;
  // a -> a^{p^s}; negative s means the inverse Frobenius power.
  Fq frobenius(Fq a, std::int64_t s = 1) const;
  bool in_prime_field(Fq a) const { return a < characteristic(); }

  std::vector<std::uint32_t> digits(Fq a) const;
  Fq from_digits(const std::vector<std::uint32_t>& digits) const;

  // Integers 0..p-1 for f = 1, "(c0,c1,...)" tuples for f > 1.
  std::string format(Fq a) const;
  Fq parse(std::string_view text) const;

  friend bool operator==(const FiniteField& a, const FiniteField& b) { return a.params() == b.params(); }

  struct Tables;

 private:
  std::shared_ptr<const Tables> tables_;
};

}  // namespace ramlab
