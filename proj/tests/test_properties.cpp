#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>

#include "doctest.h"
#include "msv/classify.hpp"
#include "msv/crosscheck.hpp"
#include "msv/polyoracle.hpp"

using namespace msv;

namespace {

template <typename F>
void for_each_permutation(int n, F&& f) {
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  do {
    f(Permutation(v));
  } while (std::next_permutation(v.begin(), v.end()));
}

// Connected bipartite graph with 3 <= m + n <= 10.
BipartiteGraph random_connected_graph(std::mt19937& rng) {
  std::uniform_int_distribution<int> total_dist(3, 10);
  std::bernoulli_distribution keep(0.55);
  for (;;) {
    const int total = total_dist(rng);
    const int m = std::uniform_int_distribution<int>(1, total - 1)(rng);
    const int n = total - m;
    std::vector<Edge> edges;
    for (int u = 1; u <= m; ++u) {
      for (int w = 1; w <= n; ++w) {
        if (keep(rng)) edges.push_back({u, w});
      }
    }
    BipartiteGraph g(m, n, std::move(edges));
    if (is_connected(g)) return g;
  }
}

}  // namespace

TEST_CASE("hook criterion and complexity agree on S_1..S_6") {
  const std::map<int, std::size_t> expected_toric{{1, 1}, {2, 2}, {3, 6}, {4, 22}, {5, 90}, {6, 394}};
  for (const auto& [n, expected] : expected_toric) {
    std::size_t toric = 0;
    for_each_permutation(n, [&](const Permutation& p) {
      const bool hooks = is_toric(p).toric;
      CHECK(hooks == (complexity(p) == 0));
      if (hooks) ++toric;
    });
    CHECK(toric == expected);
  }
}

TEST_CASE("L-components never share a row or a column") {
  for_each_permutation(6, [](const Permutation& p) {
    const auto comps = l_components(regions(rothe_diagram(p)).l);
    std::set<int> rows, cols;
    for (const auto& comp : comps) {
      std::set<int> r, c;
      for (const Cell& cell : comp) {
        r.insert(cell.row);
        c.insert(cell.col);
      }
      for (int x : r) CHECK(rows.insert(x).second);
      for (int x : c) CHECK(cols.insert(x).second);
    }
  });
}

TEST_CASE("dual cone dimension of G^π is m + n - k on S_6") {
  for_each_permutation(6, [](const Permutation& p) {
    const LGraph lg = graph_from_l(regions(rothe_diagram(p)).l);
    if (lg.graph.edges().empty()) return;
    const std::size_t k = decompose(lg.graph).size();
    CHECK(dual_cone_dim(lg.graph) == static_cast<std::size_t>(lg.graph.vertex_count()) - k);
  });
}

TEST_CASE("rays, faces and rigidity on random connected graphs") {
  std::mt19937 rng(7031);
  for (int trial = 0; trial < 50; ++trial) {
    const BipartiteGraph g = random_connected_graph(rng);
    CAPTURE(trial);
    CAPTURE(to_dot(g));
    CHECK(dual_cone_dim(g) == static_cast<std::size_t>(g.vertex_count() - 1));
    if (g.m() == 1 && g.n() == 1) continue;

    const EdgeCone cone(g);
    const RationalCone oracle = oracle_edge_cone(g);
    std::set<IntVector> gamma;
    for (const auto& r : cone.rays()) gamma.insert(r.coords);
    CHECK(gamma.size() == cone.size());
    CHECK(gamma == std::set<IntVector>(oracle.generators.begin(), oracle.generators.end()));
    for (const auto& a : cone.sets()) CHECK(component_count(associated_subgraph(g, a)) == 2);

    if (oracle.generators.size() > kMaxOracleRays) continue;
    std::map<IntVector, std::size_t> index;
    for (std::size_t i = 0; i < oracle.generators.size(); ++i) index[oracle.generators[i]] = i;
    const FaceLattice lattice(oracle);
    const std::size_t k = cone.size();
    for (std::size_t a = 0; a < k; ++a) {
      for (std::size_t b = a + 1; b < k; ++b) {
        for (std::size_t c = b + 1; c < k; ++c) {
          const std::vector<std::size_t> s{a, b, c};
          const OracleFace truth = lattice.smallest_face(
              {index.at(cone.rays()[a].coords), index.at(cone.rays()[b].coords), index.at(cone.rays()[c].coords)});
          CHECK(cone.spans_face(s).has_value() == (truth.dim == 3));
        }
      }
    }
    CHECK(rigid_by_faces(cone) == rigid_verdict(oracle));
  }
}

TEST_CASE("every toric permutation of S_5 passes the deep cross-check") {
  for_each_permutation(5, [](const Permutation& p) {
    if (!is_toric(p).toric) return;
    const auto failure = crosscheck_permutation(p, true, {});
    CHECK_MESSAGE(!failure, *failure);
  });
}

TEST_CASE("rigidity methods agree on S_6 and every seventh toric permutation of S_7") {
  std::map<std::size_t, std::size_t> by_essentials;
  for (int n : {6, 7}) {
    std::size_t seen = 0;
    for_each_permutation(n, [&](const Permutation& p) {
      if (!is_toric(p).toric) return;
      if (n == 7 && seen++ % 7 != 0) return;
      const Classification c = classify(p);
      CAPTURE(p.to_string());
      CHECK(c.consistent);
      for (const auto& comp : c.components) ++by_essentials[comp.essentials.size()];
    });
  }
  for (std::size_t e : {1u, 2u, 3u, 4u}) CHECK(by_essentials[e] > 0);
}

TEST_CASE("fast path equals general enumeration on S_7 components") {
  for_each_permutation(7, [](const Permutation& p) {
    if (!is_toric(p).toric) return;
    for (const ToricComponent& tc : toric_components(p)) {
      const BipartiteGraph& g = tc.lgraph.graph;
      CHECK(first_independent_sets_from_essentials(tc.chain, g.m(), g.n()) == first_independent_sets(g));
    }
  });
}
