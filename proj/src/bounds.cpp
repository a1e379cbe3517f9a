#include "ramlab/bounds.hpp"

#include <algorithm>
#include <sstream>

#include "ramlab/error.hpp"
#include "ramlab/ramify.hpp"

namespace ramlab {

namespace {

void check_inputs(std::uint32_t p, int i) {
  if (!is_prime(p)) throw Error(ErrorCode::kInvalidArgument, std::to_string(p) + " is not prime");
  if (i == 0) throw Error(ErrorCode::kDegenerateWeightRange, "the bounds need a weight range i >= 1");
  if (i < 0) throw Error(ErrorCode::kInvalidArgument, "i must be positive");
}

Rational threshold(std::uint32_t p, int i) { return Rational(static_cast<std::int64_t>(i) * p, p - 1); }

Rational p_power(std::uint32_t p, int e) { return Rational(ipow(Integer(p), static_cast<unsigned>(e))); }

}  // namespace

int alpha(std::uint32_t p, int i) {
  check_inputs(p, i);
  const Rational t = threshold(p, i);
  int a = 0;
  while (p_power(p, a) <= t) ++a;
  return a;
}

Rational beta(std::uint32_t p, int i) {
  const int a = alpha(p, i);
  const Rational value = threshold(p, i) / p_power(p, a) - Rational(1, p - 1);
  return std::max(Rational(0), value);
}

Rational crystalline_bound(std::uint32_t p, int i) { return 1 + Rational(alpha(p, i)) + beta(p, i); }

Rational semistable_bound(std::uint32_t p, int i) {
  const int a = alpha(p, i);
  const Rational pa = p_power(p, a);
  const Rational first = threshold(p, i) / pa - 1 / pa;
  return 1 + Rational(a) + std::max(first, Rational(1, p - 1));
}

BoundReport tate_exclusion(std::uint32_t p) {
  if (p == 2) throw Error(ErrorCode::kInvalidArgument, "the Tate-curve comparison is stated for odd p");
  BoundReport r;
  r.p = p;
  r.i = 1;
  r.alpha = alpha(p, 1);
  r.beta = beta(p, 1);
  r.crystalline = crystalline_bound(p, 1);
  r.semistable = semistable_bound(p, 1);
  r.tate_mu = 2 + Rational(1, p - 1);
  r.excluded = r.tate_mu > r.crystalline;
  try {
    r.tabulated_mu = mu(kummer_tate_breaks(p));
    r.table_agrees = (*r.tabulated_mu == r.tate_mu);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kUnsupportedPrime) throw;
  }
  return r;
}

std::vector<GridRow> bound_grid(const std::vector<std::uint32_t>& ps, int i_max) {
  std::vector<GridRow> rows;
  for (std::uint32_t p : ps) {
    for (int i = 1; i <= i_max; ++i) rows.push_back(GridRow{p, i, alpha(p, i), crystalline_bound(p, i), semistable_bound(p, i)});
  }
  return rows;
}

std::string grid_csv(const std::vector<GridRow>& rows) {
  std::ostringstream os;
  os << "p,i,alpha,crystalline_num,crystalline_den,semistable_num,semistable_den\n";
  for (const auto& r : rows) {
    os << r.p << "," << r.i << "," << r.alpha << "," << boost::multiprecision::numerator(r.crystalline) << ","
       << boost::multiprecision::denominator(r.crystalline) << "," << boost::multiprecision::numerator(r.semistable) << ","
       << boost::multiprecision::denominator(r.semistable) << "\n";
  }
  return os.str();
}

}  // namespace ramlab
