#ifndef MSV_DOUBLE_DESCRIPTION_HPP
#define MSV_DOUBLE_DESCRIPTION_HPP

#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "msv/exact.hpp"

namespace msv {

using IncidenceSet = boost::dynamic_bitset<>;

struct DualDescription {
  IntMatrix rays;                  // primitive, sorted lexicographically
  std::vector<IncidenceSet> tight;  // tight[r][i] <=> <inequalities[i], rays[r]> == 0
};

/**
 * Extremal rays of the pointed cone {x in Q^dim : A x >= 0}.
 *
 * Exact incremental double description: seeded with a simplicial cone cut out
 * by `dim` independent rows, then one inequality at a time, combining every
 * adjacent (+,-) ray pair. Adjacency is decided combinatorially from zero sets.
 * Throws std::invalid_argument when rank(A) < dim (the cone has a lineality
 * space).
 */
DualDescription extreme_rays_of_inequalities(const IntMatrix& inequalities, std::size_t dim);

}  // namespace msv

#endif
