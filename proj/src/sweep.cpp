#include "ridematch/sweep.hpp"

#include <cmath>
#include <exception>
#include <stdexcept>

namespace ridematch {

std::string_view to_string(SweepAxis a) noexcept {
  switch (a) {
    case SweepAxis::none: return "none";
    case SweepAxis::agents: return "agents";
    case SweepAxis::w_i: return "w_i";
    case SweepAxis::w_center: return "w_center";
  }
  return "unknown";
}

std::optional<SweepAxis> parse_axis(std::string_view s) noexcept {
  for (SweepAxis a : {SweepAxis::none, SweepAxis::agents, SweepAxis::w_i, SweepAxis::w_center})
    if (to_string(a) == s) return a;
  return std::nullopt;
}

SimConfig apply_axis(SimConfig cfg, SweepAxis axis, double value) {
  switch (axis) {
    case SweepAxis::none: break;
    case SweepAxis::agents: {
      if (!(value >= 2.0) || std::floor(value) != value || std::fmod(value, 2.0) != 0.0)
        throw std::invalid_argument("agents axis value must be a positive even integer");
      const auto half = static_cast<std::size_t>(value / 2.0);
      cfg.n_drivers = half;
      cfg.n_passengers = half;
      break;
    }
    case SweepAxis::w_i: cfg.weights.w_i = value; break;
    case SweepAxis::w_center: cfg.weights.w_center = value; break;
  }
  return cfg;
}

namespace {

struct CellSpec {
  SimConfig cfg;
  double value;
};

std::vector<CellSpec> expand(const SimConfig& base, SweepAxis axis,
                             std::span<const double> values,
                             std::span<const std::uint64_t> seeds,
                             std::span<const Mechanism> mechanisms) {
  if (values.empty()) throw std::invalid_argument("sweep needs at least one axis value");
  if (seeds.empty()) throw std::invalid_argument("sweep needs at least one seed");
  if (mechanisms.empty()) throw std::invalid_argument("sweep needs at least one mechanism");
  std::vector<CellSpec> specs;
  specs.reserve(values.size() * seeds.size() * mechanisms.size());
  for (double v : values) {
    const SimConfig at_value = apply_axis(base, axis, v);
    for (std::uint64_t seed : seeds) {
      for (Mechanism m : mechanisms) {
        SimConfig cfg = at_value;
        cfg.seed = seed;
        cfg.mechanism = m;
        cfg.validate();
        specs.push_back({cfg, v});
      }
    }
  }
  return specs;
}

SweepCell make_cell(const CellSpec& spec, SweepAxis axis) {
  return {spec.cfg.mechanism, axis, spec.value, spec.cfg.seed, run_simulation(spec.cfg)};
}

}  // namespace

std::vector<SweepCell> run_sweep(const SimConfig& base, SweepAxis axis,
                                 std::span<const double> values,
                                 std::span<const std::uint64_t> seeds,
                                 std::span<const Mechanism> mechanisms) {
  const auto specs = expand(base, axis, values, seeds, mechanisms);
  std::vector<std::optional<SweepCell>> slots(specs.size());
  std::exception_ptr failure;

  const auto n = static_cast<std::ptrdiff_t>(specs.size());
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    try {
      slots[i] = make_cell(specs[i], axis);
    } catch (...) {
#pragma omp critical(ridematch_sweep_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);

  std::vector<SweepCell> cells;
  cells.reserve(slots.size());
  for (auto& s : slots) cells.push_back(std::move(*s));
  return cells;
}

std::vector<SweepCell> run_sweep_serial(const SimConfig& base, SweepAxis axis,
                                        std::span<const double> values,
                                        std::span<const std::uint64_t> seeds,
                                        std::span<const Mechanism> mechanisms) {
  const auto specs = expand(base, axis, values, seeds, mechanisms);
  std::vector<SweepCell> cells;
  cells.reserve(specs.size());
  for (const auto& spec : specs) cells.push_back(make_cell(spec, axis));
  return cells;
}

}  // namespace ridematch
