#include "cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <map>
#include <ostream>
#include <stdexcept>
#include <string>

#include "ridematch/config.hpp"
#include "ridematch/reporting.hpp"
#include "ridematch/sweep.hpp"

namespace ridematch::cli {

namespace {

namespace fs = std::filesystem;

/// A failure attributable to one flag; reported as "<flag>: <message>".
struct FlagError : std::runtime_error {
  FlagError(const std::string& flag, const std::string& msg)
      : std::runtime_error(flag + ": " + msg) {}
};

std::uint64_t parse_u64(std::string_view s) {
  if (s.empty()) throw std::invalid_argument("empty number");
  std::uint64_t v = 0;
  for (char c : s) {
    if (c < '0' || c > '9') throw std::invalid_argument("'" + std::string(s) + "' is not a seed");
    v = v * 10 + static_cast<std::uint64_t>(c - '0');
  }
  return v;
}

struct SimFlags {
  std::string config;
  std::string out;
  std::size_t drivers = 0, passengers = 0, rounds = 0;
  std::string mechanism;
  std::string ranking;
  double w_time = 0, w_income = 0, w_prox = 0, w_center = 0, wait_threshold = 0;
  double gamma_mean = 0, gamma_sd = 0, grid_sd = 0;

  std::map<std::string, CLI::Option*> opts;

  void add_to(CLI::App& app, bool with_mechanism) {
    opts["--config"] = app.add_option("--config", config, "JSON config file");
    opts["--out"] = app.add_option("--out", out, "Output directory (default $RIDEMATCH_OUT or ./out)");
    opts["--drivers"] = app.add_option("--drivers", drivers, "Number of drivers");
    opts["--passengers"] = app.add_option("--passengers", passengers, "Passengers per round");
    opts["--rounds"] = app.add_option("--rounds", rounds, "Number of rounds");
    if (with_mechanism)
      opts["--mechanism"] =
          app.add_option("--mechanism", mechanism, "da | boston | closest | random");
    opts["--passenger-ranking"] =
        app.add_option("--passenger-ranking", ranking, "weighted | wait_only");
    opts["--w-time"] = app.add_option("--w-time", w_time, "Passenger weight on wait");
    opts["--w-income"] = app.add_option("--w-income", w_income, "Passenger weight on driver income");
    opts["--w-prox"] = app.add_option("--w-prox", w_prox, "Driver weight on pickup proximity");
    opts["--w-center"] = app.add_option("--w-center", w_center, "Driver weight on dropoff centrality");
    opts["--wait-threshold"] =
        app.add_option("--wait-threshold", wait_threshold, "Maximum acceptable wait distance");
    opts["--gamma-mean"] = app.add_option("--gamma-mean", gamma_mean, "Driver cost coefficient mean");
    opts["--gamma-sd"] = app.add_option("--gamma-sd", gamma_sd, "Driver cost coefficient SD");
    opts["--grid-sd"] = app.add_option("--grid-sd", grid_sd, "Location sampling SD");
  }

  bool given(const std::string& flag) const {
    const auto it = opts.find(flag);
    return it != opts.end() && it->second->count() > 0;
  }

  /// defaults < config file < flags
  SimConfig resolve() const {
    SimConfig cfg;
    if (given("--config")) {
      try {
        cfg = load_config(config, cfg);
      } catch (const std::exception& e) {
        throw FlagError("--config", e.what());
      }
    }
    if (given("--drivers")) cfg.n_drivers = drivers;
    if (given("--passengers")) cfg.n_passengers = passengers;
    if (given("--rounds")) cfg.n_rounds = rounds;
    if (given("--mechanism")) {
      const auto m = parse_mechanism(mechanism);
      if (!m) throw FlagError("--mechanism", "unknown mechanism '" + mechanism + "'");
      cfg.mechanism = *m;
    }
    if (given("--passenger-ranking")) {
      if (ranking == "weighted") cfg.passenger_ranking = PassengerRanking::weighted;
      else if (ranking == "wait_only") cfg.passenger_ranking = PassengerRanking::wait_only;
      else throw FlagError("--passenger-ranking", "unknown ranking '" + ranking + "'");
    }
    if (given("--w-time")) cfg.weights.w_t = w_time;
    if (given("--w-income")) cfg.weights.w_i = w_income;
    if (given("--w-prox")) cfg.weights.w_prox = w_prox;
    if (given("--w-center")) cfg.weights.w_center = w_center;
    if (given("--wait-threshold")) cfg.wait_threshold = wait_threshold;
    if (given("--gamma-mean")) cfg.agents.gamma_mean = gamma_mean;
    if (given("--gamma-sd")) cfg.agents.gamma_sd = gamma_sd;
    if (given("--grid-sd")) cfg.grid.sample_sd = grid_sd;

    check("--drivers", cfg.n_drivers >= 1, "must be >= 1");
    check("--passengers", cfg.n_passengers >= 1, "must be >= 1");
    check("--rounds", cfg.n_rounds >= 1, "must be >= 1");
    check("--w-time", cfg.weights.w_t >= 0.0, "must be >= 0");
    check("--w-income", cfg.weights.w_i >= 0.0, "must be >= 0");
    check("--w-prox", cfg.weights.w_prox >= 0.0, "must be >= 0");
    check("--w-center", cfg.weights.w_center >= 0.0, "must be >= 0");
    check("--wait-threshold", cfg.wait_threshold >= 0.0, "must be >= 0");
    check("--gamma-sd", cfg.agents.gamma_sd > 0.0, "must be > 0");
    check("--grid-sd", cfg.grid.sample_sd > 0.0, "must be > 0");
    try {
      cfg.validate();
    } catch (const std::invalid_argument& e) {
      throw FlagError("--config", e.what());
    }
    return cfg;
  }

  fs::path out_dir() const {
    if (given("--out")) return out;
    if (const char* env = std::getenv("RIDEMATCH_OUT"); env && *env) return env;
    return "out";
  }

 private:
  static void check(const std::string& flag, bool ok, const std::string& msg) {
    if (!ok) throw FlagError(flag, msg);
  }
};

std::vector<std::uint64_t> seeds_from(const std::string& flag, const std::string& text) {
  try {
    return parse_seed_list(text);
  } catch (const std::exception& e) {
    throw FlagError(flag, e.what());
  }
}

std::vector<MetricsRow> rows_of(const std::vector<SweepCell>& cells) {
  std::vector<MetricsRow> rows;
  rows.reserve(cells.size());
  for (const auto& c : cells) rows.push_back(summarize(c));
  return rows;
}

std::vector<NamedRun> named_runs(const std::vector<SweepCell>& cells) {
  std::vector<NamedRun> runs;
  for (const auto& c : cells) {
    std::string id{to_string(c.mechanism)};
    if (c.axis != SweepAxis::none) id += "-" + std::string(to_string(c.axis)) + "=" + format_double(c.axis_value);
    id += "-s" + std::to_string(c.seed);
    runs.push_back({std::move(id), &c.summary});
  }
  return runs;
}

}  // namespace

std::vector<std::uint64_t> parse_seed_list(std::string_view text) {
  std::vector<std::uint64_t> seeds;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto comma = text.find(',', start);
    const auto item = text.substr(start, comma == std::string_view::npos ? text.npos : comma - start);
    if (const auto dots = item.find(".."); dots != std::string_view::npos) {
      const auto lo = parse_u64(item.substr(0, dots));
      const auto hi = parse_u64(item.substr(dots + 2));
      if (lo > hi) throw std::invalid_argument("descending seed range '" + std::string(item) + "'");
      if (hi - lo >= 1'000'000) throw std::invalid_argument("seed range too long");
      for (auto s = lo; s <= hi; ++s) seeds.push_back(s);
    } else {
      seeds.push_back(parse_u64(item));
    }
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  if (seeds.empty()) throw std::invalid_argument("no seeds given");
  return seeds;
}

std::vector<double> parse_value_list(std::string_view text) {
  std::vector<double> values;
  if (text.empty()) throw std::invalid_argument("no values given");
  std::size_t start = 0;
  for (;;) {
    const auto comma = text.find(',', start);
    const std::string item(text.substr(start, comma == std::string_view::npos ? text.npos : comma - start));
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (item.empty() || used != item.size())
      throw std::invalid_argument("'" + item + "' is not a number");
    values.push_back(v);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return values;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err,
        const OracleSolvers& solvers) {
  CLI::App app{"Rideshare matching market simulator", "ridematch"};
  app.require_subcommand(1);

  auto* run_cmd = app.add_subcommand("run", "Run one simulation");
  SimFlags run_flags;
  run_flags.add_to(*run_cmd, true);
  std::uint64_t run_seed = 1;
  auto* run_seed_opt = run_cmd->add_option("--seed", run_seed, "Master seed");

  auto* cmp_cmd = app.add_subcommand("compare", "All four mechanisms on paired seeds");
  SimFlags cmp_flags;
  cmp_flags.add_to(*cmp_cmd, false);
  std::string cmp_seeds = "1..9";
  cmp_cmd->add_option("--seeds,--seed", cmp_seeds, "Seeds, e.g. 1..9 or 1,5,7");

  auto* sweep_cmd = app.add_subcommand("sweep", "Parameter sweep");
  SimFlags sweep_flags;
  sweep_flags.add_to(*sweep_cmd, false);
  std::string sweep_axis, sweep_values, sweep_seeds = "1", sweep_mechs = "da";
  sweep_cmd->add_option("--axis", sweep_axis, "agents | w_i | w_center")->required();
  sweep_cmd->add_option("--values", sweep_values, "Comma-separated axis values")->required();
  sweep_cmd->add_option("--seeds,--seed", sweep_seeds, "Seeds, e.g. 1..5");
  sweep_cmd->add_option("--mechanisms,--mechanism", sweep_mechs,
                        "Comma-separated mechanisms or 'all'");

  auto* oracle_cmd = app.add_subcommand("oracle-check", "Cross-check solvers against oracles");
  OracleCheckOptions oracle_opts;
  oracle_cmd->add_option("--instances", oracle_opts.instances, "Random DA profiles");
  oracle_cmd->add_option("--max-size", oracle_opts.max_size, "Agents per side (<= 7)");
  oracle_cmd->add_option("--hungarian-instances", oracle_opts.hungarian_instances,
                         "Random assignment matrices");
  oracle_cmd->add_option("--seed", oracle_opts.seed, "Master seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // Help and version requests succeed; every other parse error is a flag error.
    return app.exit(e, out, err) == 0 ? 0 : 2;
  }

  try {
    if (*run_cmd) {
      SimConfig cfg = run_flags.resolve();
      if (run_seed_opt->count() > 0) cfg.seed = run_seed;
      const auto summary = run_simulation(cfg);
      const auto row = summarize(summary, {cfg.mechanism, SweepAxis::none, 0.0, cfg.seed});
      const fs::path dir = run_flags.out_dir();
      write_csv({row}, dir / "summary.csv");
      write_rounds_csv({{std::string(to_string(cfg.mechanism)) + "-s" + std::to_string(cfg.seed),
                         &summary}},
                       dir / "rounds.csv");
      out << kMetricsHeader << '\n' << to_csv_line(row) << '\n';
      return 0;
    }

    if (*cmp_cmd) {
      const SimConfig cfg = cmp_flags.resolve();
      const auto seeds = seeds_from("--seeds", cmp_seeds);
      const double none[] = {0.0};
      const auto cells = run_sweep(cfg, SweepAxis::none, none, seeds, kAllMechanisms);
      const auto rows = rows_of(cells);
      const auto table = compare_table(rows);
      const fs::path dir = cmp_flags.out_dir();
      write_compare_csv(table, dir / "compare.csv");
      write_csv(rows, dir / "compare_metrics.csv");
      write_rounds_csv(named_runs(cells), dir / "compare_rounds.csv");
      out << kCompareHeader << '\n';
      for (const auto& r : table) {
        out << r.seed;
        for (double t : r.totals) out << ',' << format_double(t);
        out << ',' << to_string(r.best) << ',' << (r.tie ? 1 : 0) << '\n';
      }
      return 0;
    }

    if (*sweep_cmd) {
      const SimConfig cfg = sweep_flags.resolve();
      const auto axis = parse_axis(sweep_axis);
      if (!axis || *axis == SweepAxis::none)
        throw FlagError("--axis", "expected agents, w_i or w_center");
      std::vector<double> values;
      try {
        values = parse_value_list(sweep_values);
        for (double v : values) (void)apply_axis(cfg, *axis, v);
      } catch (const std::exception& e) {
        throw FlagError("--values", e.what());
      }
      const auto seeds = seeds_from("--seeds", sweep_seeds);
      std::vector<Mechanism> mechs;
      if (sweep_mechs == "all") {
        mechs.assign(std::begin(kAllMechanisms), std::end(kAllMechanisms));
      } else {
        std::string_view rest = sweep_mechs;
        for (;;) {
          const auto comma = rest.find(',');
          const auto name = rest.substr(0, comma);
          const auto m = parse_mechanism(name);
          if (!m) throw FlagError("--mechanisms", "unknown mechanism '" + std::string(name) + "'");
          mechs.push_back(*m);
          if (comma == std::string_view::npos) break;
          rest.remove_prefix(comma + 1);
        }
      }
      const auto cells = run_sweep(cfg, *axis, values, seeds, mechs);
      const fs::path dir = sweep_flags.out_dir();
      write_csv(rows_of(cells), dir / "sweep.csv");
      write_rounds_csv(named_runs(cells), dir / "sweep_rounds.csv");
      out << "wrote " << cells.size() << " rows to " << (dir / "sweep.csv").string() << '\n';
      return 0;
    }

    if (*oracle_cmd) {
      if (oracle_opts.instances == 0) throw FlagError("--instances", "must be >= 1");
      if (oracle_opts.hungarian_instances == 0)
        throw FlagError("--hungarian-instances", "must be >= 1");
      if (oracle_opts.max_size == 0 || oracle_opts.max_size > kMaxEnumerationSize)
        throw FlagError("--max-size", "must be in [1, 7]");
      const auto report = run_oracle_check(oracle_opts, solvers);
      out << "deferred_acceptance instances: " << report.da_checked << '\n'
          << "hungarian instances: " << report.hungarian_checked << '\n'
          << "failures: " << report.failures.size() << '\n';
      for (const auto& f : report.failures)
        out << "FAIL " << f.suite << " instance " << f.instance << " seed " << f.instance_seed
            << ": " << f.detail << '\n';
      out << (report.passed() ? "PASS" : "FAIL") << '\n';
      return report.passed() ? 0 : 1;
    }
  } catch (const FlagError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

}  // namespace ridematch::cli
