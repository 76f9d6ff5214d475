#ifndef MSV_EXACT_HPP
#define MSV_EXACT_HPP

#include <cstddef>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace msv {

// Arbitrary-precision integers and rationals. Nothing in the polyhedral code
// touches floating point.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

using IntVector = std::vector<Integer>;
using IntMatrix = std::vector<IntVector>;

Integer dot(const IntVector& a, const IntVector& b);

bool is_zero(const IntVector& v);

/// Divides out the gcd of the entries; the zero vector is returned unchanged.
IntVector primitive(IntVector v);

/// Rank over the rationals, by fraction-free (Bareiss) elimination.
std::size_t rank(IntMatrix rows);

/// Indices of a maximal linearly independent subset of `rows`, chosen greedily
/// in input order.
std::vector<std::size_t> independent_rows(const IntMatrix& rows);

/// Indices of columns forming a basis of the column space of `rows`.
std::vector<std::size_t> pivot_columns(const IntMatrix& rows);

IntVector to_int_vector(const std::vector<long long>& v);
std::vector<long long> to_ll(const IntVector& v);

std::string to_string(const IntVector& v);

}  // namespace msv

#endif
