#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "ridematch/economics.hpp"
#include "ridematch/engine.hpp"
#include "ridematch/stats.hpp"
#include "ridematch/sweep.hpp"

using namespace ridematch;

namespace {

DriverState driver_at(std::size_t id, GridPoint loc, double gamma) {
  DriverState d;
  d.id = DriverId{id};
  d.location = loc;
  d.gamma = gamma;
  d.visited = {loc};
  return d;
}

PassengerRequest passenger(std::size_t id, GridPoint pickup, GridPoint dropoff) {
  PassengerRequest p;
  p.id = PassengerId{id};
  p.pickup = pickup;
  p.dropoff = dropoff;
  p.wtp = compute_wtp(pickup, dropoff, 1.0);
  return p;
}

SimConfig small_config(Mechanism m, std::uint64_t seed = 3) {
  SimConfig cfg;
  cfg.mechanism = m;
  cfg.seed = seed;
  cfg.n_rounds = 10;
  return cfg;
}

}  // namespace

TEST_CASE("play_round") {
  SUBCASE("no admissible pairs: no revenue, drivers untouched") {
    const std::vector<DriverState> ds{driver_at(0, {-40, -40}, 1.0), driver_at(1, {40, 40}, 1.0)};
    const std::vector<PassengerRequest> ps{passenger(0, {0, 0}, {1, 1}), passenger(1, {2, 2}, {3, 1})};
    for (Mechanism m : kAllMechanisms) {
      SimConfig cfg;
      cfg.mechanism = m;
      Rng rng{1};
      const auto res = play_round(ds, ps, cfg, 0, rng);
      CHECK(res.record.revenue == 0.0);
      CHECK(res.record.rides == 0);
      CHECK(res.drivers == ds);
    }
  }
  SUBCASE("singleton market earns the passenger's fare under every mechanism") {
    const std::vector<DriverState> ds{driver_at(0, {1, 1}, 0.1)};
    const std::vector<PassengerRequest> ps{passenger(0, {2, 2}, {10, 12})};
    for (Mechanism m : kAllMechanisms) {
      SimConfig cfg;
      cfg.mechanism = m;
      Rng rng{9};
      const auto res = play_round(ds, ps, cfg, 0, rng);
      CHECK(res.record.revenue == ps[0].wtp);
      CHECK(res.record.rides == 1);
      CHECK(res.drivers[0].location == ps[0].dropoff);
      CHECK(res.record.income_deltas == std::vector{ps[0].wtp});
    }
  }
}

TEST_CASE("run_simulation") {
  SUBCASE("zero rounds is rejected") {
    SimConfig cfg;
    cfg.n_rounds = 0;
    CHECK_THROWS_AS(run_simulation(cfg), std::invalid_argument);
  }

  SUBCASE("deterministic in the config") {
    for (Mechanism m : kAllMechanisms) {
      const auto cfg = small_config(m);
      CHECK(run_simulation(cfg) == run_simulation(cfg));
    }
  }

  SUBCASE("a matched driver starts the next round at its last dropoff") {
    const auto cfg = small_config(Mechanism::da, 4);
    std::vector<std::vector<PassengerRequest>> passengers;
    std::vector<MatchingOutcome> outcomes;
    std::vector<std::vector<DriverState>> before;
    run_simulation(cfg, [&](const RoundView& v) {
      passengers.emplace_back(v.passengers.begin(), v.passengers.end());
      outcomes.push_back(v.outcome);
      before.emplace_back(v.drivers_before.begin(), v.drivers_before.end());
    });
    REQUIRE(!outcomes[0].pairs.empty());
    for (const auto& pair : outcomes[0].pairs)
      CHECK(before[1][pair.driver.index()].location ==
            passengers[0][pair.passenger.index()].dropoff);
  }

  SUBCASE("revenue is conserved three ways and traces never teleport") {
    for (Mechanism m : kAllMechanisms) {
      const auto cfg = small_config(m, 12);
      double matched_wtp = 0.0;
      std::vector<std::vector<GridPoint>> trace(cfg.n_drivers);
      bool first = true;
      const auto summary = run_simulation(cfg, [&](const RoundView& v) {
        if (first) {
          for (std::size_t d = 0; d < v.drivers_before.size(); ++d)
            trace[d].push_back(v.drivers_before[d].location);
          first = false;
        }
        for (const auto& pair : v.outcome.pairs) {
          matched_wtp += v.passengers[pair.passenger.index()].wtp;
          trace[pair.driver.index()].push_back(v.passengers[pair.passenger.index()].dropoff);
        }
      });
      double by_round = 0.0;
      std::size_t rides = 0;
      for (const auto& r : summary.rounds) {
        by_round += r.revenue;
        rides += r.rides;
      }
      double by_driver = 0.0;
      std::size_t driver_rides = 0;
      for (const auto& d : summary.final_drivers) {
        by_driver += d.total_income;
        driver_rides += d.total_rides;
      }
      CHECK(by_round == doctest::Approx(summary.total_revenue).epsilon(1e-9));
      CHECK(by_driver == doctest::Approx(summary.total_revenue).epsilon(1e-9));
      CHECK(matched_wtp == doctest::Approx(summary.total_revenue).epsilon(1e-9));
      CHECK(rides == summary.total_rides);
      CHECK(driver_rides == summary.total_rides);
      CHECK(summary.revenue_per_ride * static_cast<double>(std::max<std::size_t>(summary.total_rides, 1)) ==
            doctest::Approx(summary.total_revenue));
      CHECK(summary.income_sd >= 0.0);
      CHECK(summary.gini >= 0.0);
      CHECK(summary.gini <= 1.0);
      for (std::size_t d = 0; d < cfg.n_drivers; ++d)
        CHECK(summary.final_drivers[d].visited == trace[d]);
    }
  }

  SUBCASE("driver population is constant and incomes never decrease") {
    const auto cfg = small_config(Mechanism::closest, 8);
    std::vector<double> last(cfg.n_drivers, 0.0);
    run_simulation(cfg, [&](const RoundView& v) {
      REQUIRE(v.drivers_before.size() == cfg.n_drivers);
      for (std::size_t d = 0; d < cfg.n_drivers; ++d) {
        CHECK(v.drivers_before[d].id.index() == d);
        CHECK(v.drivers_before[d].total_income >= last[d]);
        last[d] = v.drivers_before[d].total_income;
      }
    });
  }

  SUBCASE("longer runs extend shorter ones") {
    auto cfg = small_config(Mechanism::boston, 6);
    const auto short_run = run_simulation(cfg);
    cfg.n_rounds = 20;
    const auto long_run = run_simulation(cfg);
    REQUIRE(long_run.rounds.size() == 20);
    CHECK(std::equal(short_run.rounds.begin(), short_run.rounds.end(), long_run.rounds.begin()));
    CHECK(long_run.total_revenue >= short_run.total_revenue);
    CHECK(long_run.total_rides >= short_run.total_rides);
  }

  SUBCASE("mechanisms see identical passenger batches for a seed") {
    std::vector<std::vector<PassengerRequest>> seen[4];
    for (Mechanism m : kAllMechanisms) {
      auto& out = seen[static_cast<std::size_t>(m)];
      run_simulation(small_config(m, 2), [&](const RoundView& v) {
        out.emplace_back(v.passengers.begin(), v.passengers.end());
      });
    }
    for (int i = 1; i < 4; ++i) CHECK(seen[i] == seen[0]);
  }
}

TEST_CASE("deferred acceptance is invariant to driver relabeling") {
  SimConfig cfg;
  cfg.weights.w_i = 0.0;
  AgentConfig ac;
  ac.gamma_mean = 0.1;
  ac.gamma_sd = 0.05;
  const GridConfig grid;
  for (std::uint64_t s = 0; s < 40; ++s) {
    Rng rng{s};
    const auto ds = spawn_drivers(10, rng, ac, grid);
    const auto ps = spawn_passengers(10, rng, ac, grid);
    std::vector<std::size_t> perm(ds.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<DriverState> relabeled;
    for (std::size_t i = 0; i < perm.size(); ++i) {
      relabeled.push_back(ds[perm[i]]);
      relabeled.back().id = DriverId{i};
    }
    Rng unused{0};
    const auto a = play_round(ds, ps, cfg, 0, unused).record.outcome;
    const auto b = play_round(relabeled, ps, cfg, 0, unused).record.outcome;
    std::vector<MatchPair> mapped;
    for (const auto& p : b.pairs) mapped.push_back({DriverId{perm[p.driver.index()]}, p.passenger});
    std::sort(mapped.begin(), mapped.end());
    CHECK(mapped == a.pairs);
  }
}

TEST_CASE("sweeps") {
  SimConfig base;
  base.n_rounds = 5;

  SUBCASE("agents axis splits the head count evenly") {
    const auto cfg = apply_axis(base, SweepAxis::agents, 30);
    CHECK(cfg.n_drivers == 15);
    CHECK(cfg.n_passengers == 15);
    CHECK_THROWS(apply_axis(base, SweepAxis::agents, 15));
    CHECK_THROWS(apply_axis(base, SweepAxis::agents, 0));
  }
  SUBCASE("weight axes") {
    CHECK(apply_axis(base, SweepAxis::w_i, 1.0).weights.w_i == 1.0);
    CHECK(apply_axis(base, SweepAxis::w_center, 2.0).weights.w_center == 2.0);
  }
  SUBCASE("single cell equals a plain run") {
    const double values[] = {0.0};
    const std::uint64_t seeds[] = {7};
    const Mechanism mechs[] = {Mechanism::da};
    const auto cells = run_sweep(base, SweepAxis::w_i, values, seeds, mechs);
    REQUIRE(cells.size() == 1);
    auto cfg = base;
    cfg.seed = 7;
    CHECK(cells[0].summary == run_simulation(cfg));
  }
  SUBCASE("parallel sweep matches the serial reference cell by cell") {
    const double values[] = {10, 20, 30};
    const std::uint64_t seeds[] = {1, 2, 3};
    const auto par = run_sweep(base, SweepAxis::agents, values, seeds, kAllMechanisms);
    const auto ser = run_sweep_serial(base, SweepAxis::agents, values, seeds, kAllMechanisms);
    REQUIRE(par.size() == 36);
    REQUIRE(ser.size() == 36);
    for (std::size_t i = 0; i < par.size(); ++i) {
      CHECK(par[i].mechanism == ser[i].mechanism);
      CHECK(par[i].axis_value == ser[i].axis_value);
      CHECK(par[i].seed == ser[i].seed);
      CHECK(par[i].summary == ser[i].summary);
    }
    // value, then seed, then mechanism tag order
    CHECK(par[0].axis_value == 10);
    CHECK(par[1].mechanism == Mechanism::boston);
    CHECK(par[4].seed == 2);
    CHECK(par[12].axis_value == 20);
  }
  SUBCASE("empty inputs are rejected") {
    const std::vector<double> none;
    const std::uint64_t seeds[] = {1};
    CHECK_THROWS(run_sweep(base, SweepAxis::w_i, none, seeds, kAllMechanisms));
  }
}
