#ifndef MSV_BIGRAPH_HPP
#define MSV_BIGRAPH_HPP

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "msv/rothe.hpp"

namespace msv {

/// Bit i-1 set <=> vertex i of one part is present. Parts hold at most 64 vertices.
using VertexMask = std::uint64_t;

inline constexpr int kMaxPartSize = 64;

inline VertexMask bit(int v) { return VertexMask{1} << (v - 1); }
inline VertexMask full_mask(int size) {
  return size >= 64 ? ~VertexMask{0} : (VertexMask{1} << size) - 1;
}
std::vector<int> mask_elements(VertexMask mask);
VertexMask mask_of(const std::vector<int>& vertices);

/// Edge between vertex `u` of U1 (1..m) and vertex `w` of U2 (1..n).
struct Edge {
  int u = 0;
  int w = 0;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// A subset of V(G) = U1 ⊔ U2.
struct VertexSet {
  VertexMask u1 = 0;
  VertexMask u2 = 0;

  bool empty() const { return u1 == 0 && u2 == 0; }
  friend auto operator<=>(const VertexSet&, const VertexSet&) = default;
};

/**
 * Bipartite graph G ⊆ K_{m,n} with parts U1 = {1..m} and U2 = {1..n}.
 *
 * Immutable after construction; adjacency is kept as one bit mask per vertex.
 */
class BipartiteGraph {
 public:
  BipartiteGraph() = default;
  /// Throws std::invalid_argument for out-of-range endpoints or parts above 64.
  BipartiteGraph(int m, int n, std::vector<Edge> edges);

  int m() const { return m_; }
  int n() const { return n_; }
  int vertex_count() const { return m_ + n_; }
  const std::vector<Edge>& edges() const { return edges_; }

  VertexMask u1_neighbors(int u) const { return adj1_[static_cast<std::size_t>(u - 1)]; }
  VertexMask u2_neighbors(int w) const { return adj2_[static_cast<std::size_t>(w - 1)]; }
  bool has_edge(int u, int w) const { return (u1_neighbors(u) & bit(w)) != 0; }

  VertexMask all_u1() const { return full_mask(m_); }
  VertexMask all_u2() const { return full_mask(n_); }

  /// Global vertex numbering: U1 vertex i is i, U2 vertex j is m + j.
  std::vector<int> global_labels(const VertexSet& s) const;

  friend bool operator==(const BipartiteGraph&, const BipartiteGraph&) = default;

 private:
  int m_ = 0;
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<VertexMask> adj1_;
  std::vector<VertexMask> adj2_;
};

enum class Sidedness { OneSidedU1, OneSidedU2, TwoSided };

const char* to_string(Sidedness s);

struct IndependentSet {
  VertexSet vertices;
  Sidedness sidedness = Sidedness::OneSidedU1;

  VertexMask a1() const { return vertices.u1; }
  VertexMask a2() const { return vertices.u2; }
  friend bool operator==(const IndependentSet&, const IndependentSet&) = default;
};

/// Validates independence and derives sidedness. Throws std::invalid_argument.
IndependentSet make_independent_set(const BipartiteGraph& g, const VertexSet& s);

/// Spanning subgraph: every vertex of the host is kept, edges are a subset.
struct SpanningSubgraph {
  int m = 0;
  int n = 0;
  std::vector<VertexMask> rows;  // rows[u-1] = kept U2 neighbours of u

  std::vector<Edge> edges() const;
  std::size_t edge_count() const;
  /// Degree of every vertex, U1 first: the balanced functional sum of e^i + f^j.
  std::vector<long long> degree_sequence() const;
};

SpanningSubgraph full_subgraph(const BipartiteGraph& g);
SpanningSubgraph induced_subgraph(const BipartiteGraph& g, const VertexSet& s);
SpanningSubgraph intersect(const SpanningSubgraph& a, const SpanningSubgraph& b);
SpanningSubgraph unite(const SpanningSubgraph& a, const SpanningSubgraph& b);

VertexSet neighbor_set(const BipartiteGraph& g, const VertexSet& a);

/// G{A}: the spanning subgraph splitting G along A and N(A).
SpanningSubgraph associated_subgraph(const BipartiteGraph& g, const IndependentSet& a);

/// Connected components, isolated vertices included.
int component_count(const SpanningSubgraph& s);

bool is_connected(const BipartiteGraph& g);

struct GraphComponent {
  BipartiteGraph graph;
  std::vector<int> u1;  // host label of local U1 vertex i is u1[i-1]
  std::vector<int> u2;
};

/// Splits G into its connected components (isolated vertices become K_{1,0}
/// or K_{0,1} components), ordered by smallest host vertex.
std::vector<GraphComponent> decompose(const BipartiteGraph& g);

/// First independent sets, ordered: one-sided U1 (by removed vertex), one-sided
/// U2 (by removed vertex), then two-sided by ascending U1 part. Throws
/// std::invalid_argument if g is disconnected.
std::vector<IndependentSet> first_independent_sets(const BipartiteGraph& g);

/// Fast path for the Ferrers-shaped graph of a toric permutation with connected
/// L: one-sided sets U_i \ {v} plus one two-sided set per consecutive pair of
/// essential cells. `chain` uses local coordinates, bottom-most cell first.
std::vector<IndependentSet> first_independent_sets_from_essentials(const std::vector<Cell>& chain,
                                                                   int m, int n);

/// Graph whose edges are the cells of `l`, with occupied rows and columns
/// relabelled 1..m and 1..n in increasing order.
struct LGraph {
  BipartiteGraph graph;
  std::vector<int> rows;  // original row of local U1 vertex i is rows[i-1]
  std::vector<int> cols;

  Cell to_local(const Cell& c) const;
};

LGraph graph_from_l(const Diagram& l);

std::string to_dot(const BipartiteGraph& g, const std::string& name = "G");
std::string to_dot(const SpanningSubgraph& s, const std::string& name = "G");

/// "{8,9}⊔{3,4,5,6,7,8}" in part-local labels.
std::string describe(const IndependentSet& a);

}  // namespace msv

#endif
