#ifndef MSV_POLYORACLE_HPP
#define MSV_POLYORACLE_HPP

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "msv/double_description.hpp"
#include "msv/exact.hpp"

namespace msv {

/// Raised when a cone has a lineality space where a pointed one is required.
class NotPointedError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when brute-force face enumeration would exceed its size guard.
class OracleLimitError : public std::length_error {
 public:
  using std::length_error::length_error;
};

inline constexpr std::size_t kMaxOracleRays = 24;

/// cone(generators) in Q^ambient_dim. Generators must be nonzero.
struct RationalCone {
  std::size_t ambient_dim = 0;
  IntMatrix generators;

  RationalCone() = default;
  RationalCone(std::size_t dim, IntMatrix gens);
};

struct OracleFace {
  std::vector<std::size_t> zero_set;  // generator indices where the certificate vanishes
  std::vector<std::size_t> rays;      // extremal generator indices among zero_set
  std::size_t dim = 0;
  IntVector certificate;  // 0 on zero_set, >= 1 on every other generator

  std::size_t ray_count() const { return rays.size(); }
  bool simplicial() const { return rays.size() == dim; }
};

std::size_t cone_dim(const RationalCone& c);

/// Pointed iff some functional is strictly positive on every generator.
bool is_pointed(const RationalCone& c);

/// Certificate that `subset` is exactly the zero set of a supporting functional.
/// Absent when no face has that vanishing set.
std::optional<OracleFace> is_face(const RationalCone& c, const std::vector<std::size_t>& subset);

/// Indices of generators not in the cone of the others. Parallel generators
/// are merged, keeping the first index. Throws NotPointedError.
std::vector<std::size_t> extremal_rays(const RationalCone& c);

/// {x : <g, x> >= 0 for every generator g}. Requires a full-dimensional cone.
RationalCone dual_cone(const RationalCone& c);

/// Facets and low-dimensional faces of a pointed cone, from one dual
/// description of its extremal rays.
class FaceLattice {
 public:
  /// Throws NotPointedError, or OracleLimitError above kMaxOracleRays rays.
  explicit FaceLattice(RationalCone c);

  const RationalCone& cone() const { return cone_; }
  std::size_t dim() const { return dim_; }
  const std::vector<std::size_t>& rays() const { return rays_; }
  /// Facet normals in ambient coordinates.
  const IntMatrix& facets() const { return facets_; }

  /// The smallest face containing the given generators.
  OracleFace smallest_face(const std::vector<std::size_t>& generators) const;

  /// All faces of dimension 1..max_dim, the cone itself included when small
  /// enough, ordered by dimension then ray set.
  std::vector<OracleFace> faces_up_to(std::size_t max_dim) const;

 private:
  OracleFace face_from_ray_mask(const IncidenceSet& on_rays) const;

  RationalCone cone_;
  std::size_t dim_ = 0;
  std::vector<std::size_t> rays_;
  IntMatrix facets_;
  std::vector<IncidenceSet> facet_rays_;  // facet_rays_[f][r]: ray r lies on facet f
};

std::vector<OracleFace> faces_up_to_dim3(const RationalCone& c);

/// True iff every 3-dimensional face, the cone itself included, has exactly
/// three extremal rays.
bool rigid_verdict(const RationalCone& c);

}  // namespace msv

#endif
