#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ramlab/rational.hpp"

namespace ramlab {

// Lower ramification filtration of a finite Galois extension, in the shifted
// numbering G_(lambda) = G_{lambda - 1}: |G_(s)| = total_order for s <= the
// first lambda, then order_j for s in (lambda_j, lambda_{j+1}].
struct Break {
  Rational lambda;
  std::int64_t order;

  friend bool operator==(const Break&, const Break&) = default;
};

struct BreakData {
  std::int64_t total_order = 1;
  std::vector<Break> breaks;

  // |G_(s)| for s > 0.
  std::int64_t order_at(const Rational& s) const;

  friend bool operator==(const BreakData&, const BreakData&) = default;
};

// InvalidArgument unless lambdas are positive and strictly increasing, orders
// strictly decrease, each divides the previous one, and the last is 1.
void validate(const BreakData& b);

// Drops breaks that do not change the group, then validates.
BreakData canonical(BreakData b);

// "order=<n>; (lambda=<num>/<den>, size=<k>); ..."
std::string to_string(const BreakData& b);
BreakData parse_break_data(std::string_view text);

// Increasing piecewise-linear function on [0, inf) with f(0) = 0, given by
// its breakpoints and the slope after the last one.
class HerbrandFn {
 public:
  HerbrandFn(std::vector<std::pair<Rational, Rational>> points, Rational final_slope);

  static HerbrandFn identity();

  Rational operator()(const Rational& t) const;

  const std::vector<std::pair<Rational, Rational>>& points() const { return points_; }
  const Rational& final_slope() const { return final_slope_; }
  // Slope on the segment just after t.
  Rational slope_after(const Rational& t) const;

  friend bool operator==(const HerbrandFn& a, const HerbrandFn& b) {
    return a.points_ == b.points_ && a.final_slope_ == b.final_slope_;
  }

 private:
  // Breakpoints always include (0, 0); collinear interior points are removed.
  std::vector<std::pair<Rational, Rational>> points_;
  Rational final_slope_;
};

// "(0, 0) (1, 1) (3, 2); slope=1/6"
std::string to_string(const HerbrandFn& f);

// phi(t) = integral_0^t ds / [G_(1) : G_(s)], with the index taken as 1 for s <= 1.
HerbrandFn phi_fn(const BreakData& b);
HerbrandFn psi_fn(const HerbrandFn& f);
// outer o inner
HerbrandFn compose(const HerbrandFn& outer, const HerbrandFn& inner);

// phi(largest lambda with a nontrivial group), 0 for the trivial filtration.
Rational mu(const BreakData& b);

// max(mu_FE, phi_FE(mu_LF)) for a tower L/F/E.
Rational tower_mu(const Rational& mu_FE, const HerbrandFn& phi_FE, const Rational& mu_LF);

// Q_p(zeta_{p^n}) / Q_p: breaks at p^j with orders p^{n-1-j}.
BreakData cyclotomic_breaks(std::uint32_t p, int n);

// Q_p(zeta_p, p^{1/p}) / Q_p for p in {2, 3, 5, 7}; UnsupportedPrime otherwise.
BreakData kummer_tate_breaks(std::uint32_t p);

// e m: the bound on mu that property (P_m) gives for ramification index e.
Rational pm_mu_bound(std::int64_t e, const Rational& m);

}  // namespace ramlab
