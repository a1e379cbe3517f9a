#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ramlab/rational.hpp"

namespace ramlab {

// Least alpha >= 0 with p^alpha > ip/(p-1). DegenerateWeightRange for i = 0.
int alpha(std::uint32_t p, int i);

// max(0, ip/(p^alpha (p-1)) - 1/(p-1))
Rational beta(std::uint32_t p, int i);

// 1 + alpha + beta
Rational crystalline_bound(std::uint32_t p, int i);

// 1 + alpha + max(ip/(p^alpha (p-1)) - 1/p^alpha, 1/(p-1))
Rational semistable_bound(std::uint32_t p, int i);

struct BoundReport {
  std::uint32_t p = 3;
  int i = 1;
  int alpha = 0;
  Rational beta;
  Rational crystalline;
  Rational semistable;
  Rational tate_mu;  // 2 + 1/(p-1)
  bool excluded = false;  // tate_mu > crystalline
  // mu of the tabulated Kummer-Tate break data, when the table covers p.
  std::optional<Rational> tabulated_mu;
  bool table_agrees = true;
};

// Weight-one comparison for the p-torsion of the Tate curve. InvalidArgument
// for p = 2.
BoundReport tate_exclusion(std::uint32_t p);

struct GridRow {
  std::uint32_t p;
  int i;
  int alpha;
  Rational crystalline;
  Rational semistable;

  Rational difference() const { return semistable - crystalline; }
};

// Rows for every p in ps and 1 <= i <= i_max, in input order.
std::vector<GridRow> bound_grid(const std::vector<std::uint32_t>& ps, int i_max);

// Header "p,i,alpha,crystalline_num,crystalline_den,semistable_num,semistable_den".
std::string grid_csv(const std::vector<GridRow>& rows);

}  // namespace ramlab
