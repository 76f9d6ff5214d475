#include <algorithm>
#include <random>
#include <set>

#include "doctest.h"
#include "msv/double_description.hpp"
#include "msv/polyoracle.hpp"

using namespace msv;

namespace {

// Cone over a square: four rays, one non-simplicial 3-face (itself).
RationalCone square_cone() { return RationalCone(3, {{1, 0, 1}, {0, 1, 1}, {-1, 0, 1}, {0, -1, 1}}); }

std::set<IntVector> primitive_set(const IntMatrix& rows) {
  std::set<IntVector> out;
  for (const auto& r : rows) out.insert(primitive(r));
  return out;
}

void check_certificate(const RationalCone& c, const OracleFace& f) {
  for (std::size_t g = 0; g < c.generators.size(); ++g) {
    const Integer v = dot(f.certificate, c.generators[g]);
    const bool on = std::binary_search(f.zero_set.begin(), f.zero_set.end(), g);
    if (on) CHECK(v == 0);
    else CHECK(v >= 1);
  }
}

}  // namespace

TEST_CASE("cone validation") {
  CHECK_THROWS_AS(RationalCone(2, {{1, 0, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(RationalCone(2, {{0, 0}}), std::invalid_argument);
}

TEST_CASE("dimension, pointedness and extremal rays") {
  const RationalCone sq = square_cone();
  CHECK(cone_dim(sq) == 3);
  CHECK(is_pointed(sq));
  CHECK(extremal_rays(sq).size() == 4);

  const RationalCone redundant(3, {{1, 0, 1}, {0, 1, 1}, {1, 1, 2}, {2, 0, 2}});
  CHECK(extremal_rays(redundant) == std::vector<std::size_t>{0, 1});

  const RationalCone line(2, {{1, 0}, {-1, 0}, {0, 1}});
  CHECK_FALSE(is_pointed(line));
  CHECK_THROWS_AS(extremal_rays(line), NotPointedError);
}

TEST_CASE("is_face certificates") {
  const RationalCone sq = square_cone();
  const auto edge = is_face(sq, {0, 1});
  REQUIRE(edge);
  CHECK(edge->dim == 2);
  check_certificate(sq, *edge);
  CHECK_FALSE(is_face(sq, {0, 2}));  // a diagonal is not a face
  const auto apex = is_face(sq, {});
  REQUIRE(apex);
  CHECK(apex->dim == 0);
}

TEST_CASE("face lattice of the square cone") {
  const FaceLattice lattice(square_cone());
  CHECK(lattice.dim() == 3);
  CHECK(lattice.facets().size() == 4);
  const auto faces = lattice.faces_up_to(3);
  std::size_t by_dim[4] = {0, 0, 0, 0};  // the apex is not reported
  for (const auto& f : faces) {
    ++by_dim[f.dim];
    check_certificate(lattice.cone(), f);
  }
  CHECK(by_dim[0] == 0);
  CHECK(by_dim[1] == 4);
  CHECK(by_dim[2] == 4);
  CHECK(by_dim[3] == 1);
  CHECK(lattice.smallest_face({0, 2}).dim == 3);
  CHECK(lattice.smallest_face({0, 1}).dim == 2);
  CHECK_THROWS(lattice.faces_up_to(4));
  CHECK_FALSE(rigid_verdict(square_cone()));
}

TEST_CASE("rigid verdict on simplicial cones") {
  CHECK(rigid_verdict(RationalCone(3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}})));
  CHECK(rigid_verdict(RationalCone(2, {{1, 0}, {1, 1}})));
  // A 4-dimensional cone over a triangular bipyramid: every 3-face is a triangle.
  CHECK(rigid_verdict(RationalCone(4, {{1, 0, 0, 1}, {0, 1, 0, 1}, {-1, -1, 0, 1}, {0, 0, 1, 1}, {0, 0, -1, 1}})));
  // Cone over a square pyramid has a square 3-face.
  CHECK_FALSE(rigid_verdict(
      RationalCone(4, {{1, 0, 0, 1}, {0, 1, 0, 1}, {-1, 0, 0, 1}, {0, -1, 0, 1}, {0, 0, 1, 1}})));
}

TEST_CASE("double description of the positive orthant") {
  const DualDescription dd = extreme_rays_of_inequalities({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}, 3);
  CHECK(dd.rays == IntMatrix{{0, 0, 1}, {0, 1, 0}, {1, 0, 0}});
  CHECK_THROWS_AS(extreme_rays_of_inequalities({{1, 0}}, 2), std::invalid_argument);
}

TEST_CASE("double description agrees with linear feasibility on random cones") {
  std::mt19937 rng(20261018);
  std::uniform_int_distribution<int> coord(-3, 3);
  std::uniform_int_distribution<int> count(4, 9);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t dim = 3 + static_cast<std::size_t>(trial % 2);
    IntMatrix gens;
    const int k = count(rng);
    while (gens.size() < static_cast<std::size_t>(k)) {
      IntVector g(dim);
      for (std::size_t i = 0; i + 1 < dim; ++i) g[i] = coord(rng);
      g[dim - 1] = 1 + (coord(rng) + 3) / 2;  // last coordinate >= 1 keeps the cone pointed
      gens.push_back(std::move(g));
    }
    const RationalCone c(dim, gens);
    if (cone_dim(c) != dim) continue;
    CAPTURE(trial);

    IntMatrix by_lp;
    for (std::size_t i : extremal_rays(c)) by_lp.push_back(c.generators[i]);
    const RationalCone back = dual_cone(dual_cone(c));
    CHECK(primitive_set(back.generators) == primitive_set(by_lp));

    const FaceLattice lattice(c);
    for (const auto& f : lattice.faces_up_to(3)) check_certificate(c, f);
  }
}
