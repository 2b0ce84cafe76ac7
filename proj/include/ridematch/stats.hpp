#pragma once

#include <span>

namespace ridematch {

double mean(std::span<const double> xs) noexcept;

/// Population standard deviation (divides by n).
double population_sd(std::span<const double> xs) noexcept;

/// Mean absolute difference over twice the mean; 0 for an empty or all-zero
/// sample. Lies in [0, 1] for non-negative data.
double gini(std::span<const double> xs) noexcept;

}  // namespace ridematch
