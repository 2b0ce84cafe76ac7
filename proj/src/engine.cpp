#include "ridematch/engine.hpp"

#include <stdexcept>
#include <string>

#include "ridematch/economics.hpp"
#include "ridematch/mechanisms.hpp"
#include "ridematch/stats.hpp"

namespace ridematch {

void SimConfig::validate() const {
  if (n_drivers < 1) throw std::invalid_argument("n_drivers must be >= 1");
  if (n_passengers < 1) throw std::invalid_argument("n_passengers must be >= 1");
  if (n_rounds < 1) throw std::invalid_argument("n_rounds must be >= 1");
  if (!(wait_threshold >= 0.0)) throw std::invalid_argument("wait_threshold must be >= 0");
  weights.validate();
  grid.validate();
  agents.validate();
}

namespace {

CostMatrix pickup_distances(std::span<const DriverState> drivers,
                            std::span<const PassengerRequest> passengers) {
  CostMatrix m(drivers.size(), passengers.size());
  for (std::size_t d = 0; d < drivers.size(); ++d)
    for (std::size_t p = 0; p < passengers.size(); ++p)
      m(d, p) = euclidean(drivers[d].location, passengers[p].pickup);
  return m;
}

std::vector<double> incomes_of(std::span<const DriverState> drivers) {
  std::vector<double> out;
  out.reserve(drivers.size());
  for (const auto& d : drivers) out.push_back(d.total_income);
  return out;
}

}  // namespace

RoundResult play_round(std::span<const DriverState> drivers,
                       std::span<const PassengerRequest> passengers, const SimConfig& cfg,
                       std::size_t round_index, Rng& mechanism_rng,
                       const RoundObserver& observer) {
  if (drivers.empty()) throw std::invalid_argument("play_round: no drivers");
  const auto profile = build_preferences(drivers, passengers, cfg.weights, cfg.wait_threshold,
                                         cfg.passenger_ranking);

  MatchingOutcome outcome;
  switch (cfg.mechanism) {
    case Mechanism::da: outcome = run_deferred_acceptance(profile); break;
    case Mechanism::boston: outcome = run_boston(profile); break;
    case Mechanism::random: outcome = run_random(profile, mechanism_rng); break;
    case Mechanism::closest:
      outcome = run_closest(pickup_distances(drivers, passengers), profile);
      break;
  }
  if (observer) observer(RoundView{round_index, drivers, passengers, profile, outcome});

  RoundResult result;
  result.drivers.assign(drivers.begin(), drivers.end());
  auto& rec = result.record;
  rec.round = round_index;
  rec.income_deltas.assign(drivers.size(), 0.0);
  for (const auto& mp : outcome.pairs) {
    const auto& pas = passengers[mp.passenger.index()];
    auto& drv = result.drivers[mp.driver.index()];
    rec.net_profit += pas.wtp - compute_cost(drv.location, pas.pickup, pas.dropoff, drv.gamma);
    rec.revenue += pas.wtp;
    rec.income_deltas[mp.driver.index()] = pas.wtp;
    drv = apply_outcome(std::move(drv), pas);
  }
  rec.rides = outcome.pairs.size();
  rec.outcome = std::move(outcome);
  return result;
}

RoundResult run_round(std::span<const DriverState> drivers, const SimConfig& cfg,
                      std::size_t round_index, const RoundObserver& observer) {
  auto passenger_rng = make_stream(cfg.seed, Stream::passengers, round_index);
  auto mechanism_rng = make_stream(cfg.seed, Stream::mechanism, round_index);
  const auto passengers = spawn_passengers(cfg.n_passengers, passenger_rng, cfg.agents, cfg.grid);
  return play_round(drivers, passengers, cfg, round_index, mechanism_rng, observer);
}

RunSummary run_simulation(const SimConfig& cfg, const RoundObserver& observer) {
  cfg.validate();
  auto driver_rng = make_stream(cfg.seed, Stream::drivers);
  auto drivers = spawn_drivers(cfg.n_drivers, driver_rng, cfg.agents, cfg.grid);

  RunSummary summary;
  summary.rounds.reserve(cfg.n_rounds);
  for (std::size_t r = 0; r < cfg.n_rounds; ++r) {
    auto result = run_round(drivers, cfg, r, observer);
    drivers = std::move(result.drivers);
    const auto& rec = result.record;
    summary.total_revenue += rec.revenue;
    summary.total_rides += rec.rides;
    summary.total_net_profit += rec.net_profit;

    const auto incomes = incomes_of(drivers);
    summary.rounds.push_back({rec.revenue, rec.rides, revenue_per_ride(rec.revenue, rec.rides),
                              mean(incomes), population_sd(incomes), gini(incomes)});
  }
  const auto incomes = incomes_of(drivers);
  summary.revenue_per_ride = revenue_per_ride(summary.total_revenue, summary.total_rides);
  summary.mean_income = mean(incomes);
  summary.income_sd = population_sd(incomes);
  summary.gini = gini(incomes);
  summary.final_drivers = std::move(drivers);
  return summary;
}

}  // namespace ridematch
