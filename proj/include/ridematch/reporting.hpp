#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "ridematch/engine.hpp"
#include "ridematch/sweep.hpp"

namespace ridematch {

struct MetricsRow {
  Mechanism mechanism = Mechanism::da;
  SweepAxis axis = SweepAxis::none;
  double axis_value = 0.0;
  std::uint64_t seed = 0;
  double total_revenue = 0.0;
  std::size_t total_rides = 0;
  double revenue_per_ride = 0.0;
  double mean_income = 0.0;
  double income_sd = 0.0;
  double gini = 0.0;

  friend bool operator==(const MetricsRow&, const MetricsRow&) = default;
};

struct RunMeta {
  Mechanism mechanism = Mechanism::da;
  SweepAxis axis = SweepAxis::none;
  double axis_value = 0.0;
  std::uint64_t seed = 0;
};

/// Income mean and population SD are recomputed from the final per-driver
/// incomes; revenue_per_ride uses the max(rides, 1) convention.
MetricsRow summarize(const RunSummary& summary, const RunMeta& meta);

MetricsRow summarize(const SweepCell& cell);

inline constexpr std::string_view kMetricsHeader =
    "mechanism,axis,axis_value,seed,total_revenue,total_rides,revenue_per_ride,"
    "mean_income,income_sd,gini";

/// Shortest decimal text that parses back to exactly `v`.
std::string format_double(double v);

std::string to_csv_line(const MetricsRow& row);
MetricsRow parse_csv_line(std::string_view line);

/// Throws std::runtime_error mentioning the path on I/O failure, and
/// std::invalid_argument when `rows` is empty.
void write_csv(const std::vector<MetricsRow>& rows, const std::filesystem::path& path);
std::vector<MetricsRow> read_csv(const std::filesystem::path& path);

/// Long-format per-round series: run_id,round,revenue,rides.
struct NamedRun {
  std::string run_id;
  const RunSummary* summary;
};
void write_rounds_csv(const std::vector<NamedRun>& runs, const std::filesystem::path& path);

struct CompareRow {
  std::uint64_t seed = 0;
  std::array<double, 4> totals{};  // indexed in tag order: da, boston, closest, random
  Mechanism best = Mechanism::da;
  bool tie = false;

  double total(Mechanism m) const { return totals[static_cast<std::size_t>(m)]; }
  friend bool operator==(const CompareRow&, const CompareRow&) = default;
};

/// One row per seed (first-appearance order) with each mechanism's total
/// revenue and the argmax. Equal maxima go to the earliest tag and set `tie`.
/// Throws std::invalid_argument if a seed lacks a mechanism or has one twice.
std::vector<CompareRow> compare_table(const std::vector<MetricsRow>& rows);

inline constexpr std::string_view kCompareHeader = "seed,da,boston,closest,random,best,tie";
void write_compare_csv(const std::vector<CompareRow>& rows, const std::filesystem::path& path);

}  // namespace ridematch
