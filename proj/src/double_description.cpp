#include "msv/double_description.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "msv/feasibility.hpp"

namespace msv {

namespace {

// Columns of B^{-1} for a square nonsingular B, each scaled to a primitive
// integer vector. Column j satisfies <B_i, col_j> = 0 for i != j and > 0 for i == j.
IntMatrix inverse_columns(const IntMatrix& b) {
  const std::size_t d = b.size();
  RationalMatrix aug(d, std::vector<Rational>(2 * d, 0));
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) aug[i][j] = Rational(b[i][j]);
    aug[i][d + i] = 1;
  }
  for (std::size_t c = 0; c < d; ++c) {
    std::size_t p = c;
    while (p < d && aug[p][c] == 0) ++p;
    if (p == d) throw std::logic_error("seed rows are singular");
    std::swap(aug[p], aug[c]);
    const Rational piv = aug[c][c];
    for (auto& x : aug[c]) x /= piv;
    for (std::size_t i = 0; i < d; ++i) {
      if (i == c || aug[i][c] == 0) continue;
      const Rational f = aug[i][c];
      for (std::size_t j = 0; j < 2 * d; ++j) aug[i][j] -= f * aug[c][j];
    }
  }
  IntMatrix cols(d, IntVector(d));
  for (std::size_t j = 0; j < d; ++j) {
    Integer l = 1;
    for (std::size_t i = 0; i < d; ++i) l = lcm(l, denominator(aug[i][d + j]));
    for (std::size_t i = 0; i < d; ++i) {
      cols[j][i] = numerator(aug[i][d + j]) * (l / denominator(aug[i][d + j]));
    }
    cols[j] = primitive(std::move(cols[j]));
  }
  return cols;
}

int sign(const Integer& x) { return x > 0 ? 1 : (x < 0 ? -1 : 0); }

}  // namespace

DualDescription extreme_rays_of_inequalities(const IntMatrix& inequalities, std::size_t dim) {
  for (const auto& row : inequalities) {
    if (row.size() != dim) throw std::invalid_argument("inequality length mismatch");
  }
  const std::size_t rows = inequalities.size();
  const std::vector<std::size_t> seed = independent_rows(inequalities);
  if (seed.size() != dim) {
    throw std::invalid_argument("inequalities have rank " + std::to_string(seed.size()) +
                                " < " + std::to_string(dim) + ": cone is not pointed");
  }

  IntMatrix seed_rows;
  for (std::size_t i : seed) seed_rows.push_back(inequalities[i]);
  IntMatrix rays = inverse_columns(seed_rows);
  std::vector<IncidenceSet> zero(dim, IncidenceSet(rows));
  for (std::size_t j = 0; j < dim; ++j) {
    for (std::size_t i = 0; i < dim; ++i) {
      if (i != j) zero[j].set(seed[i]);
    }
  }

  std::vector<bool> is_seed(rows, false);
  for (std::size_t i : seed) is_seed[i] = true;

  for (std::size_t row = 0; row < rows; ++row) {
    if (is_seed[row]) continue;
    const IntVector& a = inequalities[row];
    std::vector<Integer> value(rays.size());
    std::vector<std::size_t> pos, neg;
    for (std::size_t r = 0; r < rays.size(); ++r) {
      value[r] = dot(a, rays[r]);
      const int s = sign(value[r]);
      if (s > 0) pos.push_back(r);
      if (s < 0) neg.push_back(r);
      if (s == 0) zero[r].set(row);
    }
    if (neg.empty()) continue;

    IntMatrix next_rays;
    std::vector<IncidenceSet> next_zero;
    for (std::size_t p : pos) {
      for (std::size_t q : neg) {
        IncidenceSet common = zero[p] & zero[q];
        if (common.count() + 2 < dim) continue;
        bool adjacent = true;
        for (std::size_t r = 0; r < rays.size() && adjacent; ++r) {
          if (r != p && r != q && common.is_subset_of(zero[r])) adjacent = false;
        }
        if (!adjacent) continue;
        IntVector ray(dim);
        for (std::size_t k = 0; k < dim; ++k) {
          ray[k] = value[p] * rays[q][k] - value[q] * rays[p][k];
        }
        next_rays.push_back(primitive(std::move(ray)));
        common.set(row);
        next_zero.push_back(std::move(common));
      }
    }
    for (std::size_t r = 0; r < rays.size(); ++r) {
      if (value[r] >= 0) {
        next_rays.push_back(std::move(rays[r]));
        next_zero.push_back(std::move(zero[r]));
      }
    }
    rays = std::move(next_rays);
    zero = std::move(next_zero);
  }

  std::vector<std::size_t> order(rays.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return rays[x] < rays[y]; });
  DualDescription out;
  for (std::size_t i : order) {
    out.rays.push_back(std::move(rays[i]));
    out.tight.push_back(std::move(zero[i]));
  }
  return out;
}

}  // namespace msv
