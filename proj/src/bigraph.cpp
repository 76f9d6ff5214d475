#include "msv/bigraph.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace msv {

std::vector<int> mask_elements(VertexMask mask) {
  std::vector<int> out;
  while (mask) {
    out.push_back(std::countr_zero(mask) + 1);
    mask &= mask - 1;
  }
  return out;
}

VertexMask mask_of(const std::vector<int>& vertices) {
  VertexMask m = 0;
  for (int v : vertices) m |= bit(v);
  return m;
}

BipartiteGraph::BipartiteGraph(int m, int n, std::vector<Edge> edges)
    : m_(m), n_(n), edges_(std::move(edges)) {
  if (m < 0 || n < 0 || m > kMaxPartSize || n > kMaxPartSize) {
    throw std::invalid_argument("part sizes must lie in 0..64");
  }
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
  adj1_.assign(static_cast<std::size_t>(m), 0);
  adj2_.assign(static_cast<std::size_t>(n), 0);
  for (const Edge& e : edges_) {
    if (e.u < 1 || e.u > m || e.w < 1 || e.w > n) {
      throw std::invalid_argument("edge (" + std::to_string(e.u) + "," + std::to_string(e.w) +
                                  ") outside K_{" + std::to_string(m) + "," + std::to_string(n) +
                                  "}");
    }
    adj1_[static_cast<std::size_t>(e.u - 1)] |= bit(e.w);
    adj2_[static_cast<std::size_t>(e.w - 1)] |= bit(e.u);
  }
}

std::vector<int> BipartiteGraph::global_labels(const VertexSet& s) const {
  std::vector<int> out = mask_elements(s.u1);
  for (int w : mask_elements(s.u2)) out.push_back(m_ + w);
  return out;
}

const char* to_string(Sidedness s) {
  switch (s) {
    case Sidedness::OneSidedU1: return "one-sided-U1";
    case Sidedness::OneSidedU2: return "one-sided-U2";
    case Sidedness::TwoSided: return "two-sided";
  }
  return "?";
}

IndependentSet make_independent_set(const BipartiteGraph& g, const VertexSet& s) {
  if (s.empty()) throw std::invalid_argument("independent set must be nonempty");
  if ((s.u1 & ~g.all_u1()) || (s.u2 & ~g.all_u2())) {
    throw std::invalid_argument("vertex set not contained in V(G)");
  }
  for (int u : mask_elements(s.u1)) {
    if (g.u1_neighbors(u) & s.u2) throw std::invalid_argument("vertex set is not independent");
  }
  IndependentSet a{s, Sidedness::TwoSided};
  if (s.u2 == 0) {
    a.sidedness = Sidedness::OneSidedU1;
  } else if (s.u1 == 0) {
    a.sidedness = Sidedness::OneSidedU2;
  } else if (s.u1 == g.all_u1() || s.u2 == g.all_u2()) {
    throw std::invalid_argument("two-sided set must be proper on both sides");
  }
  return a;
}

std::vector<Edge> SpanningSubgraph::edges() const {
  std::vector<Edge> out;
  for (int u = 1; u <= m; ++u) {
    for (int w : mask_elements(rows[static_cast<std::size_t>(u - 1)])) out.push_back({u, w});
  }
  return out;
}

std::size_t SpanningSubgraph::edge_count() const {
  std::size_t c = 0;
  for (VertexMask r : rows) c += static_cast<std::size_t>(std::popcount(r));
  return c;
}

std::vector<long long> SpanningSubgraph::degree_sequence() const {
  std::vector<long long> deg(static_cast<std::size_t>(m + n), 0);
  for (int u = 1; u <= m; ++u) {
    const VertexMask r = rows[static_cast<std::size_t>(u - 1)];
    deg[static_cast<std::size_t>(u - 1)] = std::popcount(r);
    for (int w : mask_elements(r)) ++deg[static_cast<std::size_t>(m + w - 1)];
  }
  return deg;
}

SpanningSubgraph full_subgraph(const BipartiteGraph& g) {
  SpanningSubgraph s{g.m(), g.n(), {}};
  for (int u = 1; u <= g.m(); ++u) s.rows.push_back(g.u1_neighbors(u));
  return s;
}

SpanningSubgraph induced_subgraph(const BipartiteGraph& g, const VertexSet& vs) {
  SpanningSubgraph s{g.m(), g.n(), std::vector<VertexMask>(static_cast<std::size_t>(g.m()), 0)};
  for (int u : mask_elements(vs.u1)) s.rows[static_cast<std::size_t>(u - 1)] = g.u1_neighbors(u) & vs.u2;
  return s;
}

namespace {

void require_same_shape(const SpanningSubgraph& a, const SpanningSubgraph& b) {
  if (a.m != b.m || a.n != b.n) throw std::invalid_argument("spanning subgraphs of different hosts");
}

}  // namespace

SpanningSubgraph intersect(const SpanningSubgraph& a, const SpanningSubgraph& b) {
  require_same_shape(a, b);
  SpanningSubgraph s = a;
  for (std::size_t i = 0; i < s.rows.size(); ++i) s.rows[i] &= b.rows[i];
  return s;
}

SpanningSubgraph unite(const SpanningSubgraph& a, const SpanningSubgraph& b) {
  require_same_shape(a, b);
  SpanningSubgraph s = a;
  for (std::size_t i = 0; i < s.rows.size(); ++i) s.rows[i] |= b.rows[i];
  return s;
}

VertexSet neighbor_set(const BipartiteGraph& g, const VertexSet& a) {
  VertexSet out;
  for (int u : mask_elements(a.u1)) out.u2 |= g.u1_neighbors(u);
  for (int w : mask_elements(a.u2)) out.u1 |= g.u2_neighbors(w);
  return out;
}

SpanningSubgraph associated_subgraph(const BipartiteGraph& g, const IndependentSet& a) {
  // Re-validate: callers may build IndependentSet by hand.
  make_independent_set(g, a.vertices);
  const VertexSet nb = neighbor_set(g, a.vertices);
  switch (a.sidedness) {
    case Sidedness::OneSidedU1:
      return unite(induced_subgraph(g, {a.a1(), nb.u2}),
                   induced_subgraph(g, {g.all_u1() & ~a.a1(), g.all_u2() & ~nb.u2}));
    case Sidedness::OneSidedU2:
      return unite(induced_subgraph(g, {nb.u1, a.a2()}),
                   induced_subgraph(g, {g.all_u1() & ~nb.u1, g.all_u2() & ~a.a2()}));
    case Sidedness::TwoSided: {
      const VertexSet n1 = neighbor_set(g, {a.a1(), 0});
      const VertexSet n2 = neighbor_set(g, {0, a.a2()});
      return unite(induced_subgraph(g, {a.a1(), n1.u2}), induced_subgraph(g, {n2.u1, a.a2()}));
    }
  }
  throw std::logic_error("unreachable sidedness");
}

int component_count(const SpanningSubgraph& s) {
  const int total = s.m + s.n;
  std::vector<int> parent(static_cast<std::size_t>(total));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  };
  int components = total;
  for (int u = 1; u <= s.m; ++u) {
    for (int w : mask_elements(s.rows[static_cast<std::size_t>(u - 1)])) {
      const int a = find(u - 1);
      const int b = find(s.m + w - 1);
      if (a != b) {
        parent[static_cast<std::size_t>(a)] = b;
        --components;
      }
    }
  }
  return components;
}

bool is_connected(const BipartiteGraph& g) {
  return g.vertex_count() > 0 && component_count(full_subgraph(g)) == 1;
}

std::vector<GraphComponent> decompose(const BipartiteGraph& g) {
  std::vector<GraphComponent> out;
  VertexMask seen1 = 0, seen2 = 0;
  auto grow = [&](VertexSet start) {
    VertexSet comp = start;
    while (true) {
      const VertexSet nb = neighbor_set(g, comp);
      const VertexSet next{comp.u1 | nb.u1, comp.u2 | nb.u2};
      if (next == comp) break;
      comp = next;
    }
    seen1 |= comp.u1;
    seen2 |= comp.u2;
    GraphComponent c;
    c.u1 = mask_elements(comp.u1);
    c.u2 = mask_elements(comp.u2);
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < c.u1.size(); ++i) {
      for (std::size_t j = 0; j < c.u2.size(); ++j) {
        if (g.has_edge(c.u1[i], c.u2[j])) edges.push_back({static_cast<int>(i) + 1, static_cast<int>(j) + 1});
      }
    }
    c.graph = BipartiteGraph(static_cast<int>(c.u1.size()), static_cast<int>(c.u2.size()), std::move(edges));
    out.push_back(std::move(c));
  };
  // Components in order of their smallest U1 vertex, then U2-only isolated vertices.
  for (int u = 1; u <= g.m(); ++u) {
    if (!(seen1 & bit(u))) grow({bit(u), 0});
  }
  for (int w = 1; w <= g.n(); ++w) {
    if (!(seen2 & bit(w))) grow({0, bit(w)});
  }
  return out;
}

namespace {

bool has_two_components(const BipartiteGraph& g, const IndependentSet& a) {
  return component_count(associated_subgraph(g, a)) == 2;
}

// A one-sided set is maximal iff N(A) is the whole other part.
bool is_maximal(const BipartiteGraph& g, const IndependentSet& a) {
  const VertexSet nb = neighbor_set(g, a.vertices);
  return a.sidedness == Sidedness::OneSidedU1 ? nb.u2 == g.all_u2() : nb.u1 == g.all_u1();
}

bool two_sided_less(const IndependentSet& a, const IndependentSet& b) {
  const auto ea = mask_elements(a.a1()), eb = mask_elements(b.a1());
  if (ea != eb) return ea < eb;
  return mask_elements(a.a2()) < mask_elements(b.a2());
}

}  // namespace

std::vector<IndependentSet> first_independent_sets(const BipartiteGraph& g) {
  if (!is_connected(g)) throw std::invalid_argument("first_independent_sets needs a connected graph");
  std::vector<IndependentSet> out;
  if (g.m() >= 2) {
    for (int v = 1; v <= g.m(); ++v) {
      const IndependentSet a{{g.all_u1() & ~bit(v), 0}, Sidedness::OneSidedU1};
      if (is_maximal(g, a) && has_two_components(g, a)) out.push_back(a);
    }
  }
  if (g.n() >= 2) {
    for (int v = 1; v <= g.n(); ++v) {
      const IndependentSet a{{0, g.all_u2() & ~bit(v)}, Sidedness::OneSidedU2};
      if (is_maximal(g, a) && has_two_components(g, a)) out.push_back(a);
    }
  }

  // Maximal two-sided sets are the closed pairs A1 = U1 \ N(A2), A2 = U2 \ N(A1);
  // enumerate subsets of the smaller part.
  const bool by_u1 = g.m() <= g.n();
  const int side = by_u1 ? g.m() : g.n();
  if (side > 20) throw std::invalid_argument("two-sided enumeration limited to parts of size 20");
  std::vector<IndependentSet> two_sided;
  const VertexMask limit = full_mask(side);
  for (VertexMask s = 1; s < limit; ++s) {
    VertexSet cand;
    if (by_u1) {
      cand.u1 = s;
      cand.u2 = g.all_u2() & ~neighbor_set(g, {s, 0}).u2;
      if (cand.u2 == 0 || cand.u2 == g.all_u2()) continue;
      if ((g.all_u1() & ~neighbor_set(g, {0, cand.u2}).u1) != s) continue;
    } else {
      cand.u2 = s;
      cand.u1 = g.all_u1() & ~neighbor_set(g, {0, s}).u1;
      if (cand.u1 == 0 || cand.u1 == g.all_u1()) continue;
      if ((g.all_u2() & ~neighbor_set(g, {cand.u1, 0}).u2) != s) continue;
    }
    const IndependentSet a{cand, Sidedness::TwoSided};
    if (has_two_components(g, a)) two_sided.push_back(a);
  }
  std::sort(two_sided.begin(), two_sided.end(), two_sided_less);
  out.insert(out.end(), two_sided.begin(), two_sided.end());
  return out;
}

std::vector<IndependentSet> first_independent_sets_from_essentials(const std::vector<Cell>& chain,
                                                                   int m, int n) {
  if (chain.empty()) throw std::invalid_argument("essential chain is empty");
  for (std::size_t i = 0; i < chain.size(); ++i) {
    const Cell& c = chain[i];
    if (c.row < 1 || c.row > m || c.col < 1 || c.col > n) {
      throw std::invalid_argument("essential cell outside the m x n rectangle");
    }
    if (i > 0 && !(c.row < chain[i - 1].row && c.col > chain[i - 1].col)) {
      throw std::invalid_argument("essential cells do not form a Ferrers chain");
    }
  }
  if (chain.front().row != m || chain.back().col != n) {
    throw std::invalid_argument("essential chain does not reach the rectangle's boundary");
  }

  std::vector<IndependentSet> out;
  if (m >= 2) {
    for (int v = 1; v <= m; ++v) out.push_back({{full_mask(m) & ~bit(v), 0}, Sidedness::OneSidedU1});
  }
  if (n >= 2) {
    for (int v = 1; v <= n; ++v) out.push_back({{0, full_mask(n) & ~bit(v)}, Sidedness::OneSidedU2});
  }
  // C = {x_i + 1..m} ⊔ {y_{i-1} + 1..n} for consecutive essentials.
  std::vector<IndependentSet> two_sided;
  for (std::size_t i = 1; i < chain.size(); ++i) {
    const int x = chain[i].row;
    const int y_prev = chain[i - 1].col;
    const VertexMask c1 = full_mask(m) & ~full_mask(x);
    const VertexMask c2 = full_mask(n) & ~full_mask(y_prev);
    two_sided.push_back({{c1, c2}, Sidedness::TwoSided});
  }
  std::sort(two_sided.begin(), two_sided.end(), two_sided_less);
  out.insert(out.end(), two_sided.begin(), two_sided.end());
  return out;
}

Cell LGraph::to_local(const Cell& c) const {
  const auto r = std::lower_bound(rows.begin(), rows.end(), c.row);
  const auto k = std::lower_bound(cols.begin(), cols.end(), c.col);
  if (r == rows.end() || *r != c.row || k == cols.end() || *k != c.col) {
    throw std::invalid_argument("cell outside the occupied rows/columns");
  }
  return {static_cast<int>(r - rows.begin()) + 1, static_cast<int>(k - cols.begin()) + 1};
}

LGraph graph_from_l(const Diagram& l) {
  LGraph lg;
  for (const Cell& c : l.cells) {
    lg.rows.push_back(c.row);
    lg.cols.push_back(c.col);
  }
  for (auto* v : {&lg.rows, &lg.cols}) {
    std::sort(v->begin(), v->end());
    v->erase(std::unique(v->begin(), v->end()), v->end());
  }
  std::vector<Edge> edges;
  for (const Cell& c : l.cells) {
    const Cell local = lg.to_local(c);
    edges.push_back({local.row, local.col});
  }
  lg.graph = BipartiteGraph(static_cast<int>(lg.rows.size()), static_cast<int>(lg.cols.size()),
                            std::move(edges));
  return lg;
}

namespace {

std::string dot_body(int m, int n, const std::vector<Edge>& edges, const std::string& name) {
  std::ostringstream os;
  os << "graph " << name << " {\n";
  os << "  rankdir=LR;\n";
  os << "  subgraph U1 {\n    rank=same;\n";
  for (int u = 1; u <= m; ++u) os << "    u1_" << u << ";\n";
  os << "  }\n";
  os << "  subgraph U2 {\n    rank=same;\n";
  for (int w = 1; w <= n; ++w) os << "    u2_" << w << " [shape=box];\n";
  os << "  }\n";
  for (const Edge& e : edges) os << "  u1_" << e.u << " -- u2_" << e.w << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace

std::string to_dot(const BipartiteGraph& g, const std::string& name) {
  return dot_body(g.m(), g.n(), g.edges(), name);
}

std::string to_dot(const SpanningSubgraph& s, const std::string& name) {
  return dot_body(s.m, s.n, s.edges(), name);
}

std::string describe(const IndependentSet& a) {
  auto list = [](VertexMask mask) {
    std::string s = "{";
    bool first = true;
    for (int v : mask_elements(mask)) {
      if (!first) s += ",";
      s += std::to_string(v);
      first = false;
    }
    return s + "}";
  };
  return list(a.a1()) + "⊔" + list(a.a2());
}

}  // namespace msv
