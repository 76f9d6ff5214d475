#include "msv/feasibility.hpp"

#include <stdexcept>

namespace msv {

std::optional<std::vector<Rational>> find_nonnegative_solution(const RationalMatrix& a,
                                                               const std::vector<Rational>& b) {
  const std::size_t rows = a.size();
  if (b.size() != rows) throw std::invalid_argument("rhs length mismatch");
  const std::size_t vars = rows ? a.front().size() : 0;
  if (rows == 0) return std::vector<Rational>(vars, 0);

  // Tableau columns: original variables, then one artificial per row.
  const std::size_t cols = vars + rows;
  RationalMatrix t(rows, std::vector<Rational>(cols, 0));
  std::vector<Rational> rhs(rows);
  std::vector<std::size_t> basis(rows);
  for (std::size_t i = 0; i < rows; ++i) {
    if (a[i].size() != vars) throw std::invalid_argument("ragged constraint matrix");
    const bool flip = b[i] < 0;
    for (std::size_t j = 0; j < vars; ++j) t[i][j] = flip ? Rational(-a[i][j]) : a[i][j];
    rhs[i] = flip ? Rational(-b[i]) : b[i];
    t[i][vars + i] = 1;
    basis[i] = vars + i;
  }
  // Reduced costs of the phase-one objective (sum of artificials).
  std::vector<Rational> cost(cols, 0);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < vars; ++j) cost[j] -= t[i][j];
  }

  while (true) {
    std::size_t enter = cols;
    for (std::size_t j = 0; j < cols; ++j) {
      if (cost[j] < 0) {
        enter = j;
        break;
      }
    }
    if (enter == cols) break;

    std::size_t leave = rows;
    Rational best_ratio;
    for (std::size_t i = 0; i < rows; ++i) {
      if (t[i][enter] <= 0) continue;
      const Rational ratio = rhs[i] / t[i][enter];
      if (leave == rows || ratio < best_ratio ||
          (ratio == best_ratio && basis[i] < basis[leave])) {
        leave = i;
        best_ratio = ratio;
      }
    }
    // Phase one is bounded below by zero, so a ratio always exists.
    if (leave == rows) throw std::logic_error("phase-one simplex unbounded");

    const Rational pivot = t[leave][enter];
    for (auto& x : t[leave]) x /= pivot;
    rhs[leave] /= pivot;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == leave || t[i][enter] == 0) continue;
      const Rational f = t[i][enter];
      for (std::size_t j = 0; j < cols; ++j) {
        if (t[leave][j] != 0) t[i][j] -= f * t[leave][j];
      }
      rhs[i] -= f * rhs[leave];
    }
    if (cost[enter] != 0) {
      const Rational f = cost[enter];
      for (std::size_t j = 0; j < cols; ++j) {
        if (t[leave][j] != 0) cost[j] -= f * t[leave][j];
      }
    }
    basis[leave] = enter;
  }

  std::vector<Rational> x(vars, 0);
  for (std::size_t i = 0; i < rows; ++i) {
    if (basis[i] < vars) {
      x[basis[i]] = rhs[i];
    } else if (rhs[i] != 0) {
      return std::nullopt;  // an artificial variable stays positive
    }
  }
  return x;
}

std::optional<IntVector> find_separating_functional(const IntMatrix& zero_rows,
                                                    const IntMatrix& positive_rows,
                                                    std::size_t dim) {
  // w = w_plus - w_minus; one surplus variable per strict row.
  const std::size_t vars = 2 * dim + positive_rows.size();
  RationalMatrix a;
  std::vector<Rational> b;
  auto add_row = [&](const IntVector& g, std::size_t surplus, bool strict) {
    if (g.size() != dim) throw std::invalid_argument("row length mismatch");
    std::vector<Rational> row(vars, 0);
    for (std::size_t k = 0; k < dim; ++k) {
      row[k] = Rational(g[k]);
      row[dim + k] = Rational(-g[k]);
    }
    if (strict) row[2 * dim + surplus] = -1;
    a.push_back(std::move(row));
    b.emplace_back(strict ? 1 : 0);
  };
  for (const auto& g : zero_rows) add_row(g, 0, false);
  for (std::size_t i = 0; i < positive_rows.size(); ++i) add_row(positive_rows[i], i, true);

  const auto x = find_nonnegative_solution(a, b);
  if (!x) return std::nullopt;

  std::vector<Rational> w(dim);
  Integer denom_lcm = 1;
  for (std::size_t k = 0; k < dim; ++k) {
    w[k] = (*x)[k] - (*x)[dim + k];
    denom_lcm = lcm(denom_lcm, denominator(w[k]));
  }
  IntVector out(dim);
  for (std::size_t k = 0; k < dim; ++k) out[k] = numerator(w[k]) * (denom_lcm / denominator(w[k]));
  return primitive(std::move(out));
}

bool in_cone(const IntMatrix& generators, const IntVector& target) {
  const std::size_t dim = target.size();
  RationalMatrix a(dim, std::vector<Rational>(generators.size(), 0));
  for (std::size_t j = 0; j < generators.size(); ++j) {
    if (generators[j].size() != dim) throw std::invalid_argument("generator length mismatch");
    for (std::size_t k = 0; k < dim; ++k) a[k][j] = Rational(generators[j][k]);
  }
  std::vector<Rational> b;
  for (const auto& x : target) b.emplace_back(x);
  return find_nonnegative_solution(a, b).has_value();
}

}  // namespace msv
