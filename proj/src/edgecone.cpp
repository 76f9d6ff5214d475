#include "msv/edgecone.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>
#include <stdexcept>

namespace msv {

IntVector normal_form(const IntVector& lifted, int m, int n) {
  if (lifted.size() != static_cast<std::size_t>(m + n) || n < 1) {
    throw std::invalid_argument("lifted vector has the wrong length");
  }
  const Integer shift = lifted.back();
  IntVector out(lifted.begin(), lifted.end() - 1);
  for (int i = 0; i < m; ++i) out[static_cast<std::size_t>(i)] += shift;
  for (int j = 0; j < n - 1; ++j) out[static_cast<std::size_t>(m + j)] -= shift;
  return out;
}

IntVector lift(const IntVector& normal) {
  IntVector out = normal;
  out.emplace_back(0);
  return out;
}

Integer pair(const IntVector& normal, const IntVector& functional) {
  if (functional.size() != normal.size() + 1) throw std::invalid_argument("pairing length mismatch");
  Integer s = 0;
  for (std::size_t k = 0; k < normal.size(); ++k) s += normal[k] * functional[k];
  return s;
}

namespace {

bool is_first_independent_set(const BipartiteGraph& g, const IndependentSet& a) {
  const IndependentSet checked = make_independent_set(g, a.vertices);
  if (checked.sidedness != a.sidedness) return false;
  // No independent superset on the other part: A is not contained in a
  // larger (two-sided) independent set.
  const VertexSet nb = neighbor_set(g, a.vertices);
  switch (a.sidedness) {
    case Sidedness::OneSidedU1:
      if (std::popcount(g.all_u1() & ~a.a1()) != 1 || nb.u2 != g.all_u2()) return false;
      break;
    case Sidedness::OneSidedU2:
      if (std::popcount(g.all_u2() & ~a.a2()) != 1 || nb.u1 != g.all_u1()) return false;
      break;
    case Sidedness::TwoSided:
      if ((g.all_u1() & ~nb.u1) != a.a1() || (g.all_u2() & ~nb.u2) != a.a2()) return false;
      break;
  }
  return component_count(associated_subgraph(g, a)) == 2;
}

}  // namespace

RayVector ray_of(const BipartiteGraph& g, const IndependentSet& a) {
  if (!is_first_independent_set(g, a)) {
    throw std::invalid_argument(describe(a) + " is not a first independent set");
  }
  const VertexSet nb = neighbor_set(g, a.vertices);
  IntVector lifted(static_cast<std::size_t>(g.vertex_count()), 0);
  for (int u = 1; u <= g.m(); ++u) {
    const VertexMask b = bit(u);
    lifted[static_cast<std::size_t>(u - 1)] = ((nb.u1 & b) ? 1 : 0) - ((a.a1() & b) ? 1 : 0);
  }
  for (int w = 1; w <= g.n(); ++w) {
    const VertexMask b = bit(w);
    lifted[static_cast<std::size_t>(g.m() + w - 1)] =
        ((nb.u2 & b) ? 1 : 0) - ((a.a2() & b) ? 1 : 0);
  }
  return {primitive(normal_form(lifted, g.m(), g.n())), a};
}

std::vector<DualGenerator> dual_generators(const BipartiteGraph& g) {
  std::vector<DualGenerator> out;
  for (const Edge& e : g.edges()) {
    IntVector u(static_cast<std::size_t>(g.vertex_count()), 0);
    u[static_cast<std::size_t>(e.u - 1)] = 1;
    u[static_cast<std::size_t>(g.m() + e.w - 1)] = 1;
    out.push_back({std::move(u), e});
  }
  return out;
}

std::size_t dual_cone_dim(const BipartiteGraph& g) {
  IntMatrix rows;
  for (auto& d : dual_generators(g)) rows.push_back(std::move(d.coords));
  return rank(std::move(rows));
}

RationalCone oracle_edge_cone(const BipartiteGraph& g) {
  std::vector<GraphComponent> parts;
  for (auto& c : decompose(g)) {
    if (!c.graph.edges().empty()) parts.push_back(std::move(c));
  }
  std::size_t dim = 0;
  for (const auto& c : parts) dim += static_cast<std::size_t>(c.graph.vertex_count() - 1);

  IntMatrix inequalities;
  std::size_t offset = 0;
  for (const auto& c : parts) {
    for (const auto& d : dual_generators(c.graph)) {
      IntVector row(dim, 0);
      // Pair against normal forms: the f_n entry of the functional never contributes.
      for (std::size_t k = 0; k + 1 < d.coords.size(); ++k) row[offset + k] = d.coords[k];
      inequalities.push_back(std::move(row));
    }
    offset += static_cast<std::size_t>(c.graph.vertex_count() - 1);
  }
  if (dim == 0) return RationalCone(0, {});
  DualDescription dd = extreme_rays_of_inequalities(inequalities, dim);
  return RationalCone(dim, std::move(dd.rays));
}

EdgeCone::EdgeCone(BipartiteGraph g) : graph_(std::move(g)) {
  if (graph_.m() == 1 && graph_.n() == 1) {
    throw std::invalid_argument("K_{1,1} has no first independent sets");
  }
  sets_ = first_independent_sets(graph_);
  for (const auto& a : sets_) {
    rays_.push_back(ray_of(graph_, a));
    associated_.push_back(associated_subgraph(graph_, a));
  }
}

SpanningSubgraph EdgeCone::face_subgraph(const std::vector<std::size_t>& s) const {
  SpanningSubgraph out = full_subgraph(graph_);
  for (std::size_t i : s) out = intersect(out, associated_.at(i));
  return out;
}

std::optional<FaceDescriptor> EdgeCone::spans_face(const std::vector<std::size_t>& s) const {
  if (s.empty()) throw std::invalid_argument("spans_face needs a nonempty set");
  if (std::set<std::size_t>(s.begin(), s.end()).size() != s.size()) {
    throw std::invalid_argument("spans_face needs distinct sets");
  }
  const SpanningSubgraph sub = face_subgraph(s);
  if (component_count(sub) != static_cast<int>(s.size()) + 1) return std::nullopt;

  FaceDescriptor face;
  face.dim = static_cast<int>(s.size());
  face.defining_sets = s;
  std::sort(face.defining_sets.begin(), face.defining_sets.end());
  face.functional = to_int_vector(sub.degree_sequence());
  for (std::size_t r = 0; r < rays_.size(); ++r) {
    if (pair(rays_[r].coords, face.functional) == 0) face.rays_on_face.push_back(r);
  }
  return face;
}

namespace {

int removed_vertex(VertexMask full, VertexMask part) { return std::countr_zero(full & ~part) + 1; }

}  // namespace

PairVerdict EdgeCone::pair_predicate(std::size_t i, std::size_t j) const {
  if (i == j) throw std::invalid_argument("pair_predicate needs two distinct sets");
  const IndependentSet* x = &sets_.at(i);
  const IndependentSet* y = &sets_.at(j);
  // Canonical order: U1 one-sided, U2 one-sided, two-sided.
  if (static_cast<int>(x->sidedness) > static_cast<int>(y->sidedness)) std::swap(x, y);

  std::vector<const IndependentSet*> two_sided;
  for (const auto& s : sets_) {
    if (s.sidedness == Sidedness::TwoSided) two_sided.push_back(&s);
  }
  const VertexMask all1 = graph_.all_u1(), all2 = graph_.all_u2();

  if (x->sidedness == Sidedness::TwoSided) return {true, "two two-sided sets"};
  if (x->sidedness != y->sidedness && y->sidedness != Sidedness::TwoSided) {
    return {true, "one-sided sets on opposite parts"};
  }

  const bool on_u1 = x->sidedness == Sidedness::OneSidedU1;
  auto side = [&](const IndependentSet& s) { return on_u1 ? s.a1() : s.a2(); };
  const VertexMask all = on_u1 ? all1 : all2;
  const int v = removed_vertex(all, side(*x));
  const std::string part = on_u1 ? "U1" : "U2";

  if (y->sidedness == x->sidedness) {
    const int v2 = removed_vertex(all, side(*y));
    const VertexMask target = all & ~bit(v) & ~bit(v2);
    const int other_size = on_u1 ? graph_.n() : graph_.m();
    for (const auto* c : two_sided) {
      const VertexMask c_other = on_u1 ? c->a2() : c->a1();
      if (side(*c) == target && std::popcount(c_other) <= other_size - 2) {
        return {false, "two-sided set " + describe(*c) + " misses exactly " + part + " vertices " +
                           std::to_string(std::min(v, v2)) + "," + std::to_string(std::max(v, v2))};
      }
    }
    return {true, "no two-sided set misses exactly the two removed vertices"};
  }

  // One-sided against two-sided.
  const VertexMask c_side = side(*y);
  if (c_side == bit(v)) {
    return {false, "two-sided part equals the removed vertex " + std::to_string(v)};
  }
  for (const auto* other : two_sided) {
    if (other == y) continue;
    if ((c_side & ~side(*other)) == bit(v)) {
      return {false, "two-sided parts differ from " + describe(*other) + " exactly in vertex " +
                         std::to_string(v)};
    }
  }
  return {true, "removed vertex is not isolated by the two-sided sets"};
}

std::vector<FaceDescriptor> EdgeCone::three_faces() const {
  std::vector<FaceDescriptor> out;
  std::set<std::vector<std::size_t>> seen;
  const std::size_t k = sets_.size();
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = a + 1; b < k; ++b) {
      for (std::size_t c = b + 1; c < k; ++c) {
        auto face = spans_face({a, b, c});
        if (face && seen.insert(face->rays_on_face).second) out.push_back(std::move(*face));
      }
    }
  }
  return out;
}

bool pair_predicate_applies(const EdgeCone& cone) {
  return std::any_of(cone.sets().begin(), cone.sets().end(),
                     [](const IndependentSet& s) { return s.sidedness == Sidedness::TwoSided; });
}

bool rigid_by_faces(const EdgeCone& cone) {
  const auto faces = cone.three_faces();
  return std::all_of(faces.begin(), faces.end(), [](const FaceDescriptor& f) { return f.simplicial(); });
}

std::string ray_label(const EdgeCone& cone, std::size_t index) {
  const IndependentSet& a = cone.sets().at(index);
  switch (a.sidedness) {
    case Sidedness::OneSidedU1:
      return "e" + std::to_string(removed_vertex(cone.graph().all_u1(), a.a1()));
    case Sidedness::OneSidedU2:
      return "f" + std::to_string(removed_vertex(cone.graph().all_u2(), a.a2()));
    case Sidedness::TwoSided: {
      std::size_t k = 0;
      for (std::size_t i = 0; i <= index; ++i) {
        if (cone.sets()[i].sidedness == Sidedness::TwoSided) ++k;
      }
      return "c" + std::to_string(k);
    }
  }
  return "?";
}

}  // namespace msv
