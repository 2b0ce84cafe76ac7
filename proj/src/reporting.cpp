#include "ridematch/reporting.hpp"

#include <charconv>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <system_error>

#include "ridematch/stats.hpp"

namespace ridematch {

MetricsRow summarize(const RunSummary& summary, const RunMeta& meta) {
  std::vector<double> incomes;
  incomes.reserve(summary.final_drivers.size());
  for (const auto& d : summary.final_drivers) incomes.push_back(d.total_income);

  MetricsRow row;
  row.mechanism = meta.mechanism;
  row.axis = meta.axis;
  row.axis_value = meta.axis_value;
  row.seed = meta.seed;
  row.total_revenue = summary.total_revenue;
  row.total_rides = summary.total_rides;
  row.revenue_per_ride = revenue_per_ride(summary.total_revenue, summary.total_rides);
  row.mean_income = mean(incomes);
  row.income_sd = population_sd(incomes);
  row.gini = summary.gini;
  return row;
}

MetricsRow summarize(const SweepCell& cell) {
  return summarize(cell.summary, {cell.mechanism, cell.axis, cell.axis_value, cell.seed});
}

std::string format_double(double v) {
  if (v == 0.0) v = 0.0;  // no "-0"
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

namespace {

double parse_double(std::string_view s) {
  double v = 0.0;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc{} || res.ptr != s.data() + s.size())
    throw std::invalid_argument("bad number in CSV: '" + std::string(s) + "'");
  return v;
}

template <typename Int>
Int parse_int(std::string_view s) {
  Int v{};
  const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc{} || res.ptr != s.data() + s.size())
    throw std::invalid_argument("bad integer in CSV: '" + std::string(s) + "'");
  return v;
}

std::vector<std::string_view> split(std::string_view line, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (;;) {
    const auto pos = line.find(sep, start);
    out.push_back(line.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

std::ofstream open_for_write(const std::filesystem::path& path) {
  if (path.has_parent_path()) {
    std::error_code ec;
    std::filesystem::create_directories(path.parent_path(), ec);
    if (ec) throw std::runtime_error("cannot create directory for " + path.string() + ": " +
                                     ec.message());
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  return out;
}

void finish(std::ofstream& out, const std::filesystem::path& path) {
  out.flush();
  if (!out) throw std::runtime_error("write failed for " + path.string());
}

}  // namespace

std::string to_csv_line(const MetricsRow& r) {
  std::string s;
  s += to_string(r.mechanism);
  s += ',';
  s += to_string(r.axis);
  s += ',' + format_double(r.axis_value);
  s += ',' + std::to_string(r.seed);
  s += ',' + format_double(r.total_revenue);
  s += ',' + std::to_string(r.total_rides);
  s += ',' + format_double(r.revenue_per_ride);
  s += ',' + format_double(r.mean_income);
  s += ',' + format_double(r.income_sd);
  s += ',' + format_double(r.gini);
  return s;
}

MetricsRow parse_csv_line(std::string_view line) {
  if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
  const auto f = split(line, ',');
  if (f.size() != 10) throw std::invalid_argument("metrics row needs 10 fields");
  MetricsRow r;
  const auto mech = parse_mechanism(f[0]);
  if (!mech) throw std::invalid_argument("unknown mechanism '" + std::string(f[0]) + "'");
  const auto axis = parse_axis(f[1]);
  if (!axis) throw std::invalid_argument("unknown axis '" + std::string(f[1]) + "'");
  r.mechanism = *mech;
  r.axis = *axis;
  r.axis_value = parse_double(f[2]);
  r.seed = parse_int<std::uint64_t>(f[3]);
  r.total_revenue = parse_double(f[4]);
  r.total_rides = parse_int<std::size_t>(f[5]);
  r.revenue_per_ride = parse_double(f[6]);
  r.mean_income = parse_double(f[7]);
  r.income_sd = parse_double(f[8]);
  r.gini = parse_double(f[9]);
  return r;
}

void write_csv(const std::vector<MetricsRow>& rows, const std::filesystem::path& path) {
  if (rows.empty()) throw std::invalid_argument("write_csv: no rows to write");
  auto out = open_for_write(path);
  out << kMetricsHeader << '\n';
  for (const auto& r : rows) out << to_csv_line(r) << '\n';
  finish(out, path);
}

std::vector<MetricsRow> read_csv(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string() + " for reading");
  std::string line;
  if (!std::getline(in, line)) throw std::runtime_error(path.string() + ": empty file");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != kMetricsHeader) throw std::runtime_error(path.string() + ": unexpected header");
  std::vector<MetricsRow> rows;
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    try {
      rows.push_back(parse_csv_line(line));
    } catch (const std::exception& e) {
      throw std::runtime_error(path.string() + ":" + std::to_string(lineno) + ": " + e.what());
    }
  }
  return rows;
}

void write_rounds_csv(const std::vector<NamedRun>& runs, const std::filesystem::path& path) {
  auto out = open_for_write(path);
  out << "run_id,round,revenue,rides\n";
  for (const auto& run : runs) {
    for (std::size_t r = 0; r < run.summary->rounds.size(); ++r) {
      const auto& s = run.summary->rounds[r];
      out << run.run_id << ',' << r << ',' << format_double(s.revenue) << ',' << s.rides << '\n';
    }
  }
  finish(out, path);
}

std::vector<CompareRow> compare_table(const std::vector<MetricsRow>& rows) {
  std::vector<std::uint64_t> order;
  std::map<std::uint64_t, std::array<std::optional<double>, 4>> by_seed;
  for (const auto& r : rows) {
    auto [it, inserted] = by_seed.try_emplace(r.seed);
    if (inserted) order.push_back(r.seed);
    auto& slot = it->second[static_cast<std::size_t>(r.mechanism)];
    if (slot)
      throw std::invalid_argument("seed " + std::to_string(r.seed) + " has mechanism " +
                                  std::string(to_string(r.mechanism)) + " twice");
    slot = r.total_revenue;
  }

  std::vector<CompareRow> table;
  table.reserve(order.size());
  for (std::uint64_t seed : order) {
    const auto& totals = by_seed.at(seed);
    CompareRow row;
    row.seed = seed;
    for (Mechanism m : kAllMechanisms) {
      const auto i = static_cast<std::size_t>(m);
      if (!totals[i])
        throw std::invalid_argument("seed " + std::to_string(seed) + " is missing mechanism " +
                                    std::string(to_string(m)));
      row.totals[i] = *totals[i];
    }
    std::size_t best = 0;
    for (std::size_t i = 1; i < 4; ++i)
      if (row.totals[i] > row.totals[best]) best = i;
    row.best = kAllMechanisms[best];
    for (std::size_t i = 0; i < 4; ++i)
      if (i != best && row.totals[i] == row.totals[best]) row.tie = true;
    table.push_back(row);
  }
  return table;
}

void write_compare_csv(const std::vector<CompareRow>& rows, const std::filesystem::path& path) {
  if (rows.empty()) throw std::invalid_argument("write_compare_csv: no rows to write");
  auto out = open_for_write(path);
  out << kCompareHeader << '\n';
  for (const auto& r : rows) {
    out << r.seed;
    for (double t : r.totals) out << ',' << format_double(t);
    out << ',' << to_string(r.best) << ',' << (r.tie ? 1 : 0) << '\n';
  }
  finish(out, path);
}

}  // namespace ridematch
