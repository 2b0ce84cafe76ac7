#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "ridematch/engine.hpp"

namespace ridematch {

enum class SweepAxis { none, agents, w_i, w_center };

std::string_view to_string(SweepAxis a) noexcept;
std::optional<SweepAxis> parse_axis(std::string_view s) noexcept;

struct SweepCell {
  Mechanism mechanism;
  SweepAxis axis;
  double axis_value;
  std::uint64_t seed;
  RunSummary summary;
};

/// Returns `base` with the axis applied. The agents axis is the total
/// head count and splits evenly, so it must be a positive even integer.
SimConfig apply_axis(SimConfig base, SweepAxis axis, double value);

/// One run per (value, seed, mechanism) cell, in that nesting order. Cells
/// are independent and run on the OpenMP thread pool; the result is
/// identical to run_sweep_serial.
std::vector<SweepCell> run_sweep(const SimConfig& base, SweepAxis axis,
                                 std::span<const double> values,
                                 std::span<const std::uint64_t> seeds,
                                 std::span<const Mechanism> mechanisms);

/// Single-threaded reference for run_sweep.
std::vector<SweepCell> run_sweep_serial(const SimConfig& base, SweepAxis axis,
                                        std::span<const double> values,
                                        std::span<const std::uint64_t> seeds,
                                        std::span<const Mechanism> mechanisms);

}  // namespace ridematch
