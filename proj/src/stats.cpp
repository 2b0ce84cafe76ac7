#include "ridematch/stats.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace ridematch {

double mean(std::span<const double> xs) noexcept {
  if (xs.empty()) return 0.0;
  double s = 0.0;
  for (double x : xs) s += x;
  return s / static_cast<double>(xs.size());
}

double population_sd(std::span<const double> xs) noexcept {
  if (xs.empty()) return 0.0;
  const double m = mean(xs);
  double ss = 0.0;
  for (double x : xs) ss += (x - m) * (x - m);
  return std::sqrt(ss / static_cast<double>(xs.size()));
}

double gini(std::span<const double> xs) noexcept {
  const double m = mean(xs);
  if (xs.empty() || m <= 0.0) return 0.0;
  // Sorted form of sum_i sum_j |x_i - x_j|, O(n log n).
  std::vector<double> sorted(xs.begin(), xs.end());
  std::sort(sorted.begin(), sorted.end());
  const double n = static_cast<double>(sorted.size());
  double weighted = 0.0;
  for (std::size_t i = 0; i < sorted.size(); ++i)
    weighted += (2.0 * static_cast<double>(i + 1) - n - 1.0) * sorted[i];
  return std::clamp(weighted / (n * n * m), 0.0, 1.0);
}

}  // namespace ridematch
