#include <algorithm>

#include "doctest.h"
#include "msv/bigraph.hpp"
#include "msv/rothe.hpp"

using namespace msv;

namespace {

// K_{2,2} minus the edge (1,1).
BipartiteGraph example_graph() { return BipartiteGraph(2, 2, {{1, 2}, {2, 1}, {2, 2}}); }

std::vector<std::string> descriptions(const std::vector<IndependentSet>& sets) {
  std::vector<std::string> out;
  for (const auto& s : sets) out.push_back(describe(s));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("construction validates endpoints") {
  CHECK_THROWS_AS(BipartiteGraph(2, 2, {{3, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(BipartiteGraph(2, 2, {{1, 0}}), std::invalid_argument);
  const BipartiteGraph g = example_graph();
  CHECK(g.has_edge(1, 2));
  CHECK_FALSE(g.has_edge(1, 1));
  CHECK(g.u1_neighbors(2) == 0b11);
}

TEST_CASE("independent sets and sidedness") {
  const BipartiteGraph g = example_graph();
  CHECK(make_independent_set(g, {0b01, 0b01}).sidedness == Sidedness::TwoSided);
  CHECK(make_independent_set(g, {0b10, 0}).sidedness == Sidedness::OneSidedU1);
  CHECK(make_independent_set(g, {0, 0b10}).sidedness == Sidedness::OneSidedU2);
  CHECK_THROWS_AS(make_independent_set(g, {0b10, 0b10}), std::invalid_argument);
  CHECK_THROWS_AS(make_independent_set(g, {0, 0}), std::invalid_argument);
}

TEST_CASE("associated subgraphs") {
  const BipartiteGraph g = example_graph();
  SUBCASE("one-sided") {
    const auto a = make_independent_set(g, {0b10, 0});
    const SpanningSubgraph s = associated_subgraph(g, a);
    CHECK(s.edges() == std::vector<Edge>{{2, 1}, {2, 2}});
    CHECK(component_count(s) == 2);
  }
  SUBCASE("two-sided") {
    const auto a = make_independent_set(g, {0b01, 0b01});
    const SpanningSubgraph s = associated_subgraph(g, a);
    CHECK(s.edges() == std::vector<Edge>{{1, 2}, {2, 1}});
    CHECK(component_count(s) == 2);
  }
}

TEST_CASE("first independent sets of K_{2,2} minus an edge") {
  const auto sets = first_independent_sets(example_graph());
  CHECK(descriptions(sets) == std::vector<std::string>{"{1}⊔{1}", "{2}⊔{}", "{}⊔{2}"});
}

TEST_CASE("first independent sets of K_{2,3}") {
  const BipartiteGraph k23(2, 3, {{1, 1}, {1, 2}, {1, 3}, {2, 1}, {2, 2}, {2, 3}});
  const auto sets = first_independent_sets(k23);
  CHECK(sets.size() == 5);
  CHECK(std::none_of(sets.begin(), sets.end(),
                     [](const IndependentSet& s) { return s.sidedness == Sidedness::TwoSided; }));
}

TEST_CASE("decompose and connectivity") {
  const BipartiteGraph g(3, 3, {{1, 1}, {2, 2}, {3, 2}});
  CHECK_FALSE(is_connected(g));
  const auto parts = decompose(g);
  CHECK(parts.size() == 3);  // {1,1}, {2,3 | 2}, isolated vertex 3 of U2
  CHECK(is_connected(example_graph()));
}

TEST_CASE("graph of L for [2,4,1,3] is K_{2,2}") {
  const LGraph lg = graph_from_l(regions(rothe_diagram(Permutation({2, 4, 1, 3}))).l);
  CHECK(lg.graph.m() == 2);
  CHECK(lg.graph.n() == 2);
  CHECK(lg.graph.edges().size() == 4);
  CHECK(lg.rows == std::vector<int>{2, 3});
  CHECK(lg.cols == std::vector<int>{1, 2});
  CHECK(lg.to_local({3, 2}) == Cell{2, 2});
}

TEST_CASE("essential-cell fast path for [1,10,8,7,6,9,4,5,2,3]") {
  const Permutation p({1, 10, 8, 7, 6, 9, 4, 5, 2, 3});
  const Diagram d = rothe_diagram(p);
  const Regions r = regions(d);
  const LGraph lg = graph_from_l(r.l);
  CHECK(lg.graph.m() == 9);
  CHECK(lg.graph.n() == 8);

  std::set<Cell> ess;
  for (const Cell& c : essential_set(d)) {
    if (r.l.contains(c)) ess.insert(c);
  }
  std::vector<Cell> chain;
  for (const Cell& c : sort_essential_chain(ess)) chain.push_back(lg.to_local(c));
  CHECK(chain.size() == 5);

  const auto general = first_independent_sets(lg.graph);
  CHECK(first_independent_sets_from_essentials(chain, 9, 8) == general);
  std::vector<std::string> two_sided;
  for (const auto& s : general) {
    if (s.sidedness == Sidedness::TwoSided) two_sided.push_back(describe(s));
  }
  std::sort(two_sided.begin(), two_sided.end());
  CHECK(two_sided == std::vector<std::string>{"{4,5,6,7,8,9}⊔{7,8}", "{6,7,8,9}⊔{5,6,7,8}",
                                              "{7,8,9}⊔{4,5,6,7,8}", "{8,9}⊔{3,4,5,6,7,8}"});
  CHECK(general.size() == 9 + 8 + 4);
}

TEST_CASE("DOT output names both parts") {
  const std::string dot = to_dot(example_graph());
  CHECK(dot.find("u1_2 -- u2_1;") != std::string::npos);
  CHECK(dot.find("u2_2 [shape=box];") != std::string::npos);
  CHECK(std::count(dot.begin(), dot.end(), '-') == 6);
}
