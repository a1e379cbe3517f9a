#include "doctest.h"

#include "ramlab/bounds.hpp"
#include "ramlab/error.hpp"
#include "ramlab/ramify.hpp"

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

// Direct search for the least alpha with p^alpha (p - 1) > i p.
int alpha_by_search(std::uint32_t p, int i) {
  Integer power = 1;
  int a = 0;
  while (power * (p - 1) <= Integer(i) * p) {
    power *= p;
    ++a;
  }
  return a;
}

}  // namespace

TEST_CASE("alpha") {
  CHECK(alpha(3, 1) == 1);
  CHECK(alpha(2, 1) == 2);
  CHECK(alpha(2, 10) == 5);
  for (std::uint32_t p : {2u, 3u, 5u, 7u, 11u, 13u}) {
    for (int i = 1; i <= 60; ++i) CHECK(alpha(p, i) == alpha_by_search(p, i));
  }
  CHECK(code_of([] { alpha(3, 0); }) == ErrorCode::kDegenerateWeightRange);
  CHECK(code_of([] { crystalline_bound(3, -1); }) == ErrorCode::kInvalidArgument);
  CHECK(code_of([] { alpha(4, 1); }) == ErrorCode::kInvalidArgument);
}

TEST_CASE("crystalline and semistable bounds") {
  CHECK(crystalline_bound(3, 1) == 2);
  CHECK(crystalline_bound(2, 1) == 3);
  CHECK(crystalline_bound(3, 5) == Rational(10, 3));
  CHECK(beta(3, 5) == Rational(1, 3));
  CHECK(beta(3, 1) == 0);
  CHECK(semistable_bound(3, 1) == Rational(5, 2));
  CHECK(semistable_bound(2, 1) == 4);
  CHECK(semistable_bound(3, 5) == Rational(67, 18));
}

TEST_CASE("Tate curve exclusion") {
  const std::vector<std::pair<std::uint32_t, Rational>> expected{{3, Rational(5, 2)}, {5, Rational(9, 4)}, {7, Rational(13, 6)}};
  for (const auto& [p, mu_value] : expected) {
    const BoundReport r = tate_exclusion(p);
    CHECK(r.excluded);
    CHECK(r.tate_mu == mu_value);
    CHECK(r.crystalline == 2);
    REQUIRE(r.tabulated_mu.has_value());
    CHECK(*r.tabulated_mu == mu_value);
    CHECK(r.table_agrees);
  }
  const BoundReport large = tate_exclusion(11);
  CHECK(large.excluded);
  CHECK_FALSE(large.tabulated_mu.has_value());
  CHECK(code_of([] { tate_exclusion(2); }) == ErrorCode::kInvalidArgument);
}

TEST_CASE("grids") {
  const auto single = bound_grid({3}, 1);
  REQUIRE(single.size() == 1);
  CHECK(single[0].crystalline == crystalline_bound(3, 1));
  CHECK(single[0].semistable == semistable_bound(3, 1));
  CHECK(single[0].difference() == Rational(1, 2));
  CHECK(bound_grid({3, 5}, 0).empty());

  const auto rows = bound_grid({2, 3, 5, 7, 11, 13}, 50);
  CHECK(rows.size() == 300);
  for (const auto& row : rows) CHECK(row.crystalline <= row.semistable);
  CHECK(rows.front().p == 2);
  CHECK(rows.back().p == 13);
  CHECK(rows.back().i == 50);

  const std::string csv = grid_csv(single);
  CHECK(csv == "p,i,alpha,crystalline_num,crystalline_den,semistable_num,semistable_den\n3,1,1,2,1,5,2\n");
}
