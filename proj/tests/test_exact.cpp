#include "doctest.h"
#include "msv/exact.hpp"
#include "msv/feasibility.hpp"

using namespace msv;

TEST_CASE("primitive divides by the content and keeps the sign") {
  CHECK(primitive({4, -6, 0}) == IntVector{2, -3, 0});
  CHECK(primitive({-3}) == IntVector{-1});
  CHECK(primitive({0, 0}) == IntVector{0, 0});
}

TEST_CASE("rank and pivots") {
  const IntMatrix m{{1, 1, 0}, {0, 1, 1}, {1, 2, 1}};
  CHECK(rank(m) == 2);
  CHECK(independent_rows(m) == std::vector<std::size_t>{0, 1});
  CHECK(pivot_columns(m) == std::vector<std::size_t>{0, 1});
  CHECK(rank(IntMatrix{}) == 0);
}

TEST_CASE("vector text form") { CHECK(to_string(IntVector{0, 1, -1}) == "(0,1,-1)"); }

TEST_CASE("cone membership by linear feasibility") {
  const IntMatrix gens{{1, 0}, {1, 1}};
  CHECK(in_cone(gens, {3, 1}));
  CHECK(in_cone(gens, {0, 0}));
  CHECK_FALSE(in_cone(gens, {0, 1}));
  CHECK_FALSE(in_cone(gens, {1, -1}));
}

TEST_CASE("separating functional vanishes on the zero rows and is positive elsewhere") {
  const IntMatrix zero{{1, 0, 1}};
  const IntMatrix positive{{0, 1, 1}, {-1, 0, 1}};
  const auto w = find_separating_functional(zero, positive, 3);
  REQUIRE(w);
  CHECK(dot(*w, zero[0]) == 0);
  for (const auto& g : positive) CHECK(dot(*w, g) >= 1);
  CHECK_FALSE(find_separating_functional({{1, 0}}, {{-1, 0}, {1, 1}, {1, -1}}, 2));
}
