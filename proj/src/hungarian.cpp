#include <cmath>
#include <limits>
#include <stdexcept>

#include "ridematch/mechanisms.hpp"

namespace ridematch {

namespace {

// Shortest augmenting path with row/column potentials. Requires
// rows <= cols; every row gets a column. O(rows^2 * cols).
Assignment solve_wide(const CostMatrix& a) {
  const std::size_t n = a.rows();
  const std::size_t m = a.cols();
  constexpr double kInf = std::numeric_limits<double>::infinity();

  // 1-based with a sentinel column 0, as in the classic formulation.
  std::vector<double> u(n + 1, 0.0), v(m + 1, 0.0);
  std::vector<std::size_t> row_of_col(m + 1, 0), way(m + 1, 0);

  for (std::size_t i = 1; i <= n; ++i) {
    row_of_col[0] = i;
    std::size_t j0 = 0;
    std::vector<double> minv(m + 1, kInf);
    std::vector<bool> used(m + 1, false);
    do {
      used[j0] = true;
      const std::size_t i0 = row_of_col[j0];
      double delta = kInf;
      std::size_t j1 = 0;
      for (std::size_t j = 1; j <= m; ++j) {
        if (used[j]) continue;
        const double cur = a(i0 - 1, j - 1) - u[i0] - v[j];
        if (cur < minv[j]) {
          minv[j] = cur;
          way[j] = j0;
        }
        if (minv[j] < delta) {
          delta = minv[j];
          j1 = j;
        }
      }
      for (std::size_t j = 0; j <= m; ++j) {
        if (used[j]) {
          u[row_of_col[j]] += delta;
          v[j] -= delta;
        } else {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (row_of_col[j0] != 0);
    do {
      const std::size_t j1 = way[j0];
      row_of_col[j0] = row_of_col[j1];
      j0 = j1;
    } while (j0 != 0);
  }

  Assignment out(n);
  for (std::size_t j = 1; j <= m; ++j)
    if (row_of_col[j] != 0) out[row_of_col[j] - 1] = j - 1;
  return out;
}

}  // namespace

Assignment hungarian_solve(const CostMatrix& cost) {
  for (std::size_t r = 0; r < cost.rows(); ++r)
    for (std::size_t c = 0; c < cost.cols(); ++c)
      if (!std::isfinite(cost(r, c)))
        throw std::invalid_argument("hungarian_solve: non-finite cost entry");
  if (cost.rows() == 0 || cost.cols() == 0) return Assignment(cost.rows());
  if (cost.rows() <= cost.cols()) return solve_wide(cost);

  const Assignment by_col = solve_wide(cost.transposed());
  Assignment out(cost.rows());
  for (std::size_t c = 0; c < by_col.size(); ++c)
    if (by_col[c]) out[*by_col[c]] = c;
  return out;
}

double assignment_total(const CostMatrix& cost, const Assignment& assignment) {
  double total = 0.0;
  for (std::size_t r = 0; r < assignment.size(); ++r)
    if (assignment[r]) total += cost(r, *assignment[r]);
  return total;
}

}  // namespace ridematch
