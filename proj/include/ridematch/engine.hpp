#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "ridematch/agents.hpp"
#include "ridematch/preferences.hpp"
#include "ridematch/profile.hpp"

namespace ridematch {

struct SimConfig {
  std::size_t n_drivers = 15;
  std::size_t n_passengers = 15;
  std::size_t n_rounds = 50;
  Mechanism mechanism = Mechanism::da;
  EconWeights weights;
  PassengerRanking passenger_ranking = PassengerRanking::weighted;
  double wait_threshold = 40.0;
  GridConfig grid;
  AgentConfig agents;
  std::uint64_t seed = 1;

  /// Throws std::invalid_argument naming the offending field.
  void validate() const;
  friend bool operator==(const SimConfig&, const SimConfig&) = default;
};

struct RoundRecord {
  std::size_t round = 0;
  MatchingOutcome outcome;
  double revenue = 0.0;     // sum of matched fares
  std::size_t rides = 0;    // number of matched pairs
  double net_profit = 0.0;  // sum of fare minus serving cost
  std::vector<double> income_deltas;  // per driver

  friend bool operator==(const RoundRecord&, const RoundRecord&) = default;
};

/// Per-round series entry. Revenue and rides are for the round itself;
/// the income statistics describe cumulative driver incomes after it.
struct RoundStats {
  double revenue = 0.0;
  std::size_t rides = 0;
  double revenue_per_ride = 0.0;
  double mean_income = 0.0;
  double income_sd = 0.0;
  double gini = 0.0;

  friend bool operator==(const RoundStats&, const RoundStats&) = default;
};

struct RunSummary {
  double total_revenue = 0.0;
  std::size_t total_rides = 0;
  double revenue_per_ride = 0.0;
  double mean_income = 0.0;
  double income_sd = 0.0;
  double gini = 0.0;
  double total_net_profit = 0.0;
  std::vector<RoundStats> rounds;
  std::vector<DriverState> final_drivers;

  friend bool operator==(const RunSummary&, const RunSummary&) = default;
};

/// What an observer sees after each round's mechanism has run.
struct RoundView {
  std::size_t round;
  std::span<const DriverState> drivers_before;
  std::span<const PassengerRequest> passengers;
  const PreferenceProfile& profile;
  const MatchingOutcome& outcome;
};

using RoundObserver = std::function<void(const RoundView&)>;

struct RoundResult {
  RoundRecord record;
  std::vector<DriverState> drivers;
};

/// Matches a given passenger batch against the drivers with the configured
/// mechanism and applies completed rides. `mechanism_rng` is only drawn
/// from by the random mechanism.
RoundResult play_round(std::span<const DriverState> drivers,
                       std::span<const PassengerRequest> passengers, const SimConfig& cfg,
                       std::size_t round_index, Rng& mechanism_rng,
                       const RoundObserver& observer = {});

/// One full round: spawns the round's passengers from the seeded passenger
/// stream for `round_index`, then plays it.
RoundResult run_round(std::span<const DriverState> drivers, const SimConfig& cfg,
                      std::size_t round_index, const RoundObserver& observer = {});

/// Spawns drivers once and runs cfg.n_rounds rounds. Deterministic in cfg.
RunSummary run_simulation(const SimConfig& cfg, const RoundObserver& observer = {});

/// Revenue per ride with the max(rides, 1) convention.
inline double revenue_per_ride(double revenue, std::size_t rides) noexcept {
  return revenue / static_cast<double>(rides > 0 ? rides : 1);
}

}  // namespace ridematch
