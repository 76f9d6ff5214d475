#ifndef MSV_EDGECONE_HPP
#define MSV_EDGECONE_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "msv/bigraph.hpp"
#include "msv/exact.hpp"
#include "msv/polyoracle.hpp"

namespace msv {

// Lattices for G ⊆ K_{m,n}:
//   M = {u in Z^{m+n} : sum over U1 = sum over U2}, holding the dual generators;
//   N = Z^{m+n} / (1,...,1,-1,...,-1), holding the rays.
// A class in N is written in normal form (e_1..e_m, f_1..f_{n-1}) by shifting
// the f_n coordinate to zero. Pairing lifts (x) to (x, 0) in Z^{m+n}.

/// (a, b) -> (a_i + b_n, b_j - b_n), j < n.
IntVector normal_form(const IntVector& lifted, int m, int n);
/// (x) -> (x, 0).
IntVector lift(const IntVector& normal);
/// Pairing of an N normal form with an M functional of length m + n.
Integer pair(const IntVector& normal, const IntVector& functional);

struct RayVector {
  IntVector coords;  // primitive normal form, length m + n - 1
  IndependentSet source;
};

struct DualGenerator {
  IntVector coords;  // e^u + f^w, length m + n
  Edge edge;
};

/// Throws std::invalid_argument unless `a` is a first independent set of g.
RayVector ray_of(const BipartiteGraph& g, const IndependentSet& a);

/// One generator per edge, in edge order.
std::vector<DualGenerator> dual_generators(const BipartiteGraph& g);

/// dim of the dual edge cone, by exact rank of its generators.
std::size_t dual_cone_dim(const BipartiteGraph& g);

/// The edge cone computed without any graph theory: the dual description of
/// the dual generators, one block of normal-form coordinates per connected
/// component (isolated vertices contribute nothing).
RationalCone oracle_edge_cone(const BipartiteGraph& g);

struct FaceDescriptor {
  int dim = 0;
  std::vector<std::size_t> defining_sets;  // indices into EdgeCone::sets()
  IntVector functional;                    // degree sequence of G[S], in M
  std::vector<std::size_t> rays_on_face;   // every ray the functional kills

  bool simplicial() const { return rays_on_face.size() == static_cast<std::size_t>(dim); }
};

struct PairVerdict {
  bool two_face = false;
  std::string reason;
};

/**
 * σ_G for a connected graph, with its extremal rays indexed by the first
 * independent sets in their canonical order.
 */
class EdgeCone {
 public:
  /// Throws std::invalid_argument if g is disconnected or K_{1,1}, where the
  /// single ray has no first independent set.
  explicit EdgeCone(BipartiteGraph g);

  const BipartiteGraph& graph() const { return graph_; }
  const std::vector<IndependentSet>& sets() const { return sets_; }
  const std::vector<RayVector>& rays() const { return rays_; }
  std::size_t size() const { return sets_.size(); }

  /// G[S] = intersection of G{A} over S.
  SpanningSubgraph face_subgraph(const std::vector<std::size_t>& s) const;

  /// Present iff G[S] has |S| + 1 components, i.e. S spans a |S|-face.
  std::optional<FaceDescriptor> spans_face(const std::vector<std::size_t>& s) const;

  /// Two-face test for G^π read off the shape of the first independent sets.
  /// Valid for G^π of a toric permutation when pair_predicate_applies.
  PairVerdict pair_predicate(std::size_t i, std::size_t j) const;

  /// All 3-faces, one per distinct ray set, in order of first discovery.
  std::vector<FaceDescriptor> three_faces() const;

 private:
  BipartiteGraph graph_;
  std::vector<IndependentSet> sets_;
  std::vector<RayVector> rays_;
  std::vector<SpanningSubgraph> associated_;
};

/// True iff the cone has a two-sided first independent set. For G^π this means
/// at least two essential cells; on complete graphs the pair rules do not hold.
bool pair_predicate_applies(const EdgeCone& cone);

/// Every 3-face has exactly three rays.
bool rigid_by_faces(const EdgeCone& cone);

/// Human-readable ray label: e_i / f_j for one-sided sets, c_k for two-sided.
std::string ray_label(const EdgeCone& cone, std::size_t index);

}  // namespace msv

#endif
