#include "msv/polyoracle.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>

#include "msv/feasibility.hpp"

namespace msv {

RationalCone::RationalCone(std::size_t dim, IntMatrix gens)
    : ambient_dim(dim), generators(std::move(gens)) {
  for (const auto& g : generators) {
    if (g.size() != ambient_dim) throw std::invalid_argument("generator length mismatch");
    if (is_zero(g)) throw std::invalid_argument("zero generator");
  }
}

std::size_t cone_dim(const RationalCone& c) { return rank(c.generators); }

bool is_pointed(const RationalCone& c) {
  return find_separating_functional({}, c.generators, c.ambient_dim).has_value();
}

std::vector<std::size_t> extremal_rays(const RationalCone& c) {
  if (!is_pointed(c)) throw NotPointedError("cone contains a line");
  // One representative per direction.
  std::map<IntVector, std::size_t> first;
  std::vector<std::size_t> reps;
  for (std::size_t i = 0; i < c.generators.size(); ++i) {
    if (first.emplace(primitive(c.generators[i]), i).second) reps.push_back(i);
  }
  std::vector<std::size_t> out;
  for (std::size_t i : reps) {
    IntMatrix others;
    for (std::size_t j : reps) {
      if (j != i) others.push_back(c.generators[j]);
    }
    if (!in_cone(others, c.generators[i])) out.push_back(i);
  }
  return out;
}

std::optional<OracleFace> is_face(const RationalCone& c, const std::vector<std::size_t>& subset) {
  std::vector<bool> on(c.generators.size(), false);
  for (std::size_t i : subset) on.at(i) = true;
  IntMatrix zero_rows, positive_rows;
  for (std::size_t i = 0; i < c.generators.size(); ++i) {
    (on[i] ? zero_rows : positive_rows).push_back(c.generators[i]);
  }
  auto w = find_separating_functional(zero_rows, positive_rows, c.ambient_dim);
  if (!w) return std::nullopt;

  OracleFace face;
  for (std::size_t i = 0; i < c.generators.size(); ++i) {
    if (on[i]) face.zero_set.push_back(i);
  }
  face.dim = rank(zero_rows);
  face.certificate = std::move(*w);
  if (!zero_rows.empty()) {
    for (std::size_t k : extremal_rays(RationalCone(c.ambient_dim, zero_rows))) {
      face.rays.push_back(face.zero_set[k]);
    }
  }
  return face;
}

RationalCone dual_cone(const RationalCone& c) {
  DualDescription dd = extreme_rays_of_inequalities(c.generators, c.ambient_dim);
  return RationalCone(c.ambient_dim, std::move(dd.rays));
}

FaceLattice::FaceLattice(RationalCone c) : cone_(std::move(c)) {
  rays_ = extremal_rays(cone_);
  if (rays_.size() > kMaxOracleRays) {
    throw OracleLimitError("cone has " + std::to_string(rays_.size()) +
                           " extremal rays, above the limit of " + std::to_string(kMaxOracleRays));
  }
  if (rays_.empty()) return;

  IntMatrix ray_rows;
  for (std::size_t r : rays_) ray_rows.push_back(cone_.generators[r]);
  // Coordinates on which the span of the rays projects isomorphically.
  const std::vector<std::size_t> pivots = pivot_columns(ray_rows);
  dim_ = pivots.size();
  IntMatrix projected;
  for (const auto& row : ray_rows) {
    IntVector p;
    for (std::size_t k : pivots) p.push_back(row[k]);
    projected.push_back(std::move(p));
  }
  DualDescription dd = extreme_rays_of_inequalities(projected, dim_);
  for (std::size_t f = 0; f < dd.rays.size(); ++f) {
    IntVector normal(cone_.ambient_dim, 0);
    for (std::size_t k = 0; k < dim_; ++k) normal[pivots[k]] = dd.rays[f][k];
    facets_.push_back(std::move(normal));
    facet_rays_.push_back(std::move(dd.tight[f]));
  }
}

OracleFace FaceLattice::face_from_ray_mask(const IncidenceSet& on_rays) const {
  OracleFace face;
  face.certificate.assign(cone_.ambient_dim, 0);
  for (std::size_t f = 0; f < facets_.size(); ++f) {
    if (!on_rays.is_subset_of(facet_rays_[f])) continue;
    for (std::size_t k = 0; k < cone_.ambient_dim; ++k) face.certificate[k] += facets_[f][k];
  }
  IntMatrix face_rays;
  for (std::size_t r = 0; r < rays_.size(); ++r) {
    if (on_rays[r]) {
      face.rays.push_back(rays_[r]);
      face_rays.push_back(cone_.generators[rays_[r]]);
    }
  }
  std::sort(face.rays.begin(), face.rays.end());
  face.dim = rank(face_rays);
  for (std::size_t i = 0; i < cone_.generators.size(); ++i) {
    if (dot(face.certificate, cone_.generators[i]) == 0) face.zero_set.push_back(i);
  }
  return face;
}

OracleFace FaceLattice::smallest_face(const std::vector<std::size_t>& generators) const {
  IncidenceSet on(rays_.size());
  on.set();
  for (std::size_t f = 0; f < facets_.size(); ++f) {
    const bool contains_all = std::all_of(generators.begin(), generators.end(), [&](std::size_t g) {
      return dot(facets_[f], cone_.generators.at(g)) == 0;
    });
    if (contains_all) on &= facet_rays_[f];
  }
  return face_from_ray_mask(on);
}

std::vector<OracleFace> FaceLattice::faces_up_to(std::size_t max_dim) const {
  if (max_dim > 3) throw std::invalid_argument("faces_up_to supports dimension at most 3");
  const std::size_t r = rays_.size();
  std::set<IncidenceSet> seen;
  std::vector<OracleFace> out;

  auto visit = [&](const std::vector<std::size_t>& picked) {
    IncidenceSet on(r);
    on.set();
    for (std::size_t f = 0; f < facets_.size(); ++f) {
      if (std::all_of(picked.begin(), picked.end(),
                      [&](std::size_t k) { return facet_rays_[f].test(k); })) {
        on &= facet_rays_[f];
      }
    }
    if (!seen.insert(on).second) return;
    OracleFace face = face_from_ray_mask(on);
    if (face.dim >= 1 && face.dim <= max_dim) out.push_back(std::move(face));
  };

  // Every face of dimension d is the closure of d of its rays.
  std::vector<std::size_t> picked;
  for (std::size_t a = 0; a < r; ++a) {
    picked = {a};
    visit(picked);
    if (max_dim < 2) continue;
    for (std::size_t b = a + 1; b < r; ++b) {
      picked = {a, b};
      visit(picked);
      if (max_dim < 3) continue;
      for (std::size_t c = b + 1; c < r; ++c) {
        picked = {a, b, c};
        visit(picked);
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const OracleFace& x, const OracleFace& y) {
    return std::tie(x.dim, x.rays) < std::tie(y.dim, y.rays);
  });
  return out;
}

std::vector<OracleFace> faces_up_to_dim3(const RationalCone& c) {
  return FaceLattice(c).faces_up_to(3);
}

bool rigid_verdict(const RationalCone& c) {
  for (const auto& face : faces_up_to_dim3(c)) {
    if (face.dim == 3 && face.ray_count() != 3) return false;
  }
  return true;
}

}  // namespace msv
