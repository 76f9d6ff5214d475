#ifndef MSV_FEASIBILITY_HPP
#define MSV_FEASIBILITY_HPP

#include <optional>
#include <vector>

#include "msv/exact.hpp"

namespace msv {

using RationalMatrix = std::vector<std::vector<Rational>>;

/// Phase-one simplex over the rationals (Bland's rule, so it cannot cycle).
/// Returns some x >= 0 with A x = b, or nullopt if none exists.
std::optional<std::vector<Rational>> find_nonnegative_solution(const RationalMatrix& a,
                                                               const std::vector<Rational>& b);

/// Finds an integral w with <w, g> = 0 for g in `zero_rows` and <w, g> >= 1 for g
/// in `positive_rows` (w is a free variable). Homogeneity makes ">= 1" equivalent
/// to "> 0" after scaling.
std::optional<IntVector> find_separating_functional(const IntMatrix& zero_rows,
                                                    const IntMatrix& positive_rows,
                                                    std::size_t dim);

/// True iff `target` is a nonnegative combination of `generators`.
bool in_cone(const IntMatrix& generators, const IntVector& target);

}  // namespace msv

#endif
