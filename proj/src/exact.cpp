#include "msv/exact.hpp"

#include <stdexcept>

namespace msv {

Integer dot(const IntVector& a, const IntVector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: length mismatch");
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != 0 && b[i] != 0) s += a[i] * b[i];
  }
  return s;
}

bool is_zero(const IntVector& v) {
  for (const auto& x : v) {
    if (x != 0) return false;
  }
  return true;
}

IntVector primitive(IntVector v) {
  Integer g = 0;
  for (const auto& x : v) g = gcd(g, abs(x));
  if (g > 1) {
    for (auto& x : v) x /= g;
  }
  return v;
}

namespace {

// Bareiss elimination in place. Returns the pivot positions (row, col) in
// order; the rank is their count.
std::vector<std::pair<std::size_t, std::size_t>> bareiss(IntMatrix& a) {
  std::vector<std::pair<std::size_t, std::size_t>> pivots;
  if (a.empty()) return pivots;
  const std::size_t rows = a.size();
  const std::size_t cols = a.front().size();
  Integer prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        a[i][j] = (a[r][c] * a[i][j] - a[i][c] * a[r][j]) / prev;
      }
      a[i][c] = 0;
    }
    prev = a[r][c];
    pivots.emplace_back(r, c);
    ++r;
  }
  return pivots;
}

}  // namespace

std::size_t rank(IntMatrix rows) { return bareiss(rows).size(); }

std::vector<std::size_t> independent_rows(const IntMatrix& rows) {
  std::vector<std::size_t> chosen;
  IntMatrix basis;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    basis.push_back(rows[i]);
    if (rank(basis) == basis.size()) {
      chosen.push_back(i);
    } else {
      basis.pop_back();
    }
  }
  return chosen;
}

std::vector<std::size_t> pivot_columns(const IntMatrix& rows) {
  IntMatrix a = rows;
  std::vector<std::size_t> cols;
  for (const auto& [r, c] : bareiss(a)) cols.push_back(c);
  return cols;
}

IntVector to_int_vector(const std::vector<long long>& v) {
  IntVector out;
  out.reserve(v.size());
  for (long long x : v) out.emplace_back(x);
  return out;
}

std::vector<long long> to_ll(const IntVector& v) {
  std::vector<long long> out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(x.convert_to<long long>());
  return out;
}

std::string to_string(const IntVector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += v[i].str();
  }
  return s + ")";
}

}  // namespace msv
