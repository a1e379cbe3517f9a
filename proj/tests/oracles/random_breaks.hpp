#pragma once

#include <cstdint>
#include <random>

#include "ramlab/ramify.hpp"

namespace oracle {

// A valid filtration with 0..4 breaks: orders form a divisor chain ending at 1
// and the lambdas are increasing rationals with denominators up to 6.
inline ramlab::BreakData random_breaks(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> count_dist(0, 4);
  std::uniform_int_distribution<std::int64_t> factor_dist(2, 5);
  std::uniform_int_distribution<std::int64_t> num_dist(1, 12);
  std::uniform_int_distribution<std::int64_t> den_dist(1, 6);
  const int count = count_dist(rng);
  std::vector<std::int64_t> factors;
  std::int64_t total = 1;
  for (int k = 0; k < count; ++k) {
    factors.push_back(factor_dist(rng));
    total *= factors.back();
  }
  ramlab::BreakData b;
  b.total_order = total;
  ramlab::Rational lambda(0);
  std::int64_t order = total;
  for (int k = 0; k < count; ++k) {
    lambda += ramlab::Rational(num_dist(rng), den_dist(rng));
    order /= factors[static_cast<std::size_t>(k)];
    b.breaks.push_back({lambda, order});
  }
  return b;
}

}  // namespace oracle
