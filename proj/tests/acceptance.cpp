// Acceptance suite: prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "ridematch/engine.hpp"
#include "ridematch/mechanisms.hpp"
#include "ridematch/oracle_check.hpp"
#include "ridematch/oracles.hpp"
#include "ridematch/reporting.hpp"
#include "support.hpp"

using namespace ridematch;
namespace fs = std::filesystem;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

int g_failures = 0;

void report(int id, bool pass, const std::string& detail) {
  std::printf("criterion %2d: %s  %s\n", id, pass ? "PASS" : "FAIL", detail.c_str());
  std::fflush(stdout);
  if (!pass) ++g_failures;
}

std::string fmt(const char* f, auto... args) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

// Every run made by criteria 1 to 8 is logged here for criterion 9.
struct LoggedRun {
  SimConfig cfg;
  RunSummary summary;
};
std::vector<LoggedRun> g_runs;

RunSummary logged_run(const SimConfig& cfg, const RoundObserver& observer = {}) {
  auto s = run_simulation(cfg, observer);
  g_runs.push_back({cfg, s});
  return s;
}

SimConfig with(Mechanism m, std::uint64_t seed) {
  SimConfig cfg;
  cfg.mechanism = m;
  cfg.seed = seed;
  return cfg;
}

void criterion_1() {
  const auto start = Clock::now();
  int da_top = 0;
  int closest_over_random = 0;
  std::string totals;
  for (std::uint64_t seed = 1; seed <= 9; ++seed) {
    double t[4];
    for (Mechanism m : kAllMechanisms)
      t[static_cast<int>(m)] = logged_run(with(m, seed)).total_revenue;
    const double da = t[0], boston = t[1], closest = t[2], random = t[3];
    if (da > boston && da > closest && da > random) ++da_top;
    if (closest > random) ++closest_over_random;
    totals += fmt(" [s%llu da=%.0f bo=%.0f cl=%.0f ra=%.0f]", static_cast<unsigned long long>(seed),
                  da, boston, closest, random);
  }
  const double secs = seconds_since(start);
  report(1, da_top >= 8 && closest_over_random >= 8 && secs < 30.0,
         fmt("DA strictly top %d/9 (need >=8), Closest>Random %d/9 (need >=8), %.2fs (need <30s)",
             da_top, closest_over_random, secs) +
             totals);
}

void criterion_2() {
  std::size_t rounds = 0;
  std::size_t blocking = 0;
  for (std::uint64_t seed = 1; seed <= 9; ++seed) {
    logged_run(with(Mechanism::da, seed), [&](const RoundView& v) {
      ++rounds;
      blocking += find_blocking_pairs(v.outcome, v.profile).size();
    });
  }
  report(2, rounds == 450 && blocking == 0,
         fmt("%zu DA matchings checked (need 450), %zu blocking pairs (need 0)", rounds, blocking));
}

void criterion_3() {
  const auto profile = testing::boston_counterexample();
  const auto boston = find_blocking_pairs(run_boston(profile), profile).size();
  const auto da = find_blocking_pairs(run_deferred_acceptance(profile), profile).size();
  report(3, boston >= 1 && da == 0,
         fmt("Boston blocking pairs %zu (need >=1), DA blocking pairs %zu (need 0)", boston, da));
}

void criterion_4() {
  std::size_t mismatches = 0;
  for (std::size_t i = 0; i < 200; ++i) {
    auto rng = make_stream(2024, Stream::oracle, i);
    std::uniform_int_distribution<std::size_t> size(1, 6);
    const std::size_t nd = size(rng);
    const std::size_t np = size(rng);
    const auto profile = random_profile(rng, nd, np);
    const auto da = run_deferred_acceptance(profile);
    const auto stable = enumerate_stable_matchings(profile);
    bool member = false;
    bool optimal = true;
    for (const auto& m : stable) {
      if (m.pairs == da.pairs) member = true;
      if (!weakly_driver_preferred(da, m, profile)) optimal = false;
    }
    if (!member || !optimal) ++mismatches;
  }
  report(4, mismatches == 0, fmt("200 profiles up to 6x6, %zu mismatches (need 0)", mismatches));
}

void criterion_5() {
  const auto start = Clock::now();
  std::size_t mismatches = 0;
  for (std::size_t i = 0; i < 100; ++i) {
    auto rng = make_stream(5150, Stream::oracle, i);
    const auto cost = random_distance_matrix(rng, 6, 6);
    const double fast = assignment_total(cost, hungarian_solve(cost));
    const double exact = assignment_total(cost, brute_force_assignment(cost));
    if (fast != exact) ++mismatches;
  }
  const double secs = seconds_since(start);
  report(5, mismatches == 0 && secs < 5.0,
         fmt("100 6x6 matrices, %zu mismatches (need 0), %.3fs (need <5s)", mismatches, secs));
}

void criterion_6() {
  std::size_t trials = 0;
  std::size_t violations = 0;
  for (std::size_t i = 0; i < 50; ++i) {
    auto rng = make_stream(66, Stream::oracle, i);
    const auto res = testing::check_driver_manipulations(random_profile(rng, 4, 4));
    trials += res.trials;
    violations += res.violations;
  }
  report(6, violations == 0,
         fmt("50 4x4 profiles, %zu manipulations tried, %zu improved (need 0)", trials, violations));
}

void criterion_7() {
  std::size_t differing = 0;
  for (std::uint64_t seed = 1; seed <= 9; ++seed) {
    auto reduced = with(Mechanism::da, seed);
    reduced.weights.w_i = 0.0;
    reduced.passenger_ranking = PassengerRanking::wait_only;
    auto fair = reduced;
    fair.passenger_ranking = PassengerRanking::weighted;
    const auto a = logged_run(reduced);
    const auto b = logged_run(fair);
    const auto la = to_csv_line(summarize(a, {Mechanism::da, SweepAxis::none, 0.0, seed}));
    const auto lb = to_csv_line(summarize(b, {Mechanism::da, SweepAxis::none, 0.0, seed}));
    if (!(a == b) || la != lb) ++differing;
  }
  report(7, differing == 0,
         fmt("wait-only vs weighted ranking at w_i=0 over 9 seeds, %zu differ (need 0)", differing));
}

void criterion_8() {
  int revenue_up = 0;
  int sd_up = 0;
  int both = 0;
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    auto low = with(Mechanism::da, seed);
    low.weights.w_center = 0.2;
    auto high = low;
    high.weights.w_center = 2.0;
    const auto a = summarize(logged_run(low), {});
    const auto b = summarize(logged_run(high), {});
    const bool rev = b.total_revenue > a.total_revenue;
    const bool sd = b.income_sd > a.income_sd;
    revenue_up += rev;
    sd_up += sd;
    both += rev && sd;
  }
  report(8, both >= 6,
         fmt("w_center 2.0 vs 0.2 over 10 seeds: revenue and SD both higher in %d/10 (need >=6); "
             "revenue higher %d/10, SD higher %d/10",
             both, revenue_up, sd_up));
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_run(const LoggedRun& run, const fs::path& dir) {
  write_csv({summarize(run.summary, {run.cfg.mechanism, SweepAxis::none, 0.0, run.cfg.seed})},
            dir / "summary.csv");
  write_rounds_csv({{"run", &run.summary}}, dir / "rounds.csv");
}

void criterion_9() {
  const auto root = fs::temp_directory_path() / "ridematch_acceptance";
  fs::remove_all(root);
  std::size_t conservation = 0;
  std::size_t nondeterministic = 0;
  double worst = 0.0;
  for (const auto& run : g_runs) {
    double incomes = 0.0;
    for (const auto& d : run.summary.final_drivers) incomes += d.total_income;
    const double scale = std::max(std::abs(run.summary.total_revenue), 1.0);
    const double rel = std::abs(incomes - run.summary.total_revenue) / scale;
    worst = std::max(worst, rel);
    if (rel > 1e-9) ++conservation;

    const LoggedRun again{run.cfg, run_simulation(run.cfg)};
    write_run(run, root / "a");
    write_run(again, root / "b");
    if (slurp(root / "a" / "summary.csv") != slurp(root / "b" / "summary.csv") ||
        slurp(root / "a" / "rounds.csv") != slurp(root / "b" / "rounds.csv"))
      ++nondeterministic;
  }
  fs::remove_all(root);
  report(9, conservation == 0 && nondeterministic == 0,
         fmt("%zu runs: %zu break conservation (worst rel %.2e, need <=1e-9), %zu CSVs differ "
             "on rerun (need 0)",
             g_runs.size(), conservation, worst, nondeterministic));
}

void criterion_10() {
  const SimConfig cfg;
  const auto start = Clock::now();
  const auto s = run_simulation(cfg);
  const double secs = seconds_since(start);
  report(10, secs < 1.0 && s.rounds.size() == 50,
         fmt("default 15x15x50 run in %.3fs (need <1s)", secs));
}

}  // namespace

int main() {
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();
  criterion_9();
  criterion_10();
  std::printf("%d of 10 criteria failed\n", g_failures);
  return g_failures == 0 ? 0 : 1;
}
