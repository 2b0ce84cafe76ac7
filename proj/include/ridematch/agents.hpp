#pragma once

#include <cstddef>
#include <vector>

#include "ridematch/geometry.hpp"
#include "ridematch/ids.hpp"
#include "ridematch/random.hpp"

namespace ridematch {

/// Distribution parameters for per-agent coefficients.
struct AgentConfig {
  double gamma_mean = 0.1;  // driver cost coefficient, truncated to [0, 1]
  double gamma_sd = 0.05;
  double alpha_mean = 1.0;  // passenger WTP coefficient, resampled if <= 0
  double alpha_sd = 0.1;
  double w_p_mean = 1.0;    // driver weight on cost in its ranking, resampled if <= 0
  double w_p_sd = 0.2;

  void validate() const;
  friend bool operator==(const AgentConfig&, const AgentConfig&) = default;
};

struct DriverState {
  DriverId id;
  GridPoint location;
  double gamma = 0.0;
  double w_p = 1.0;
  double total_income = 0.0;      // gross fares collected
  double total_net_profit = 0.0;  // fares minus serving cost
  std::size_t total_rides = 0;
  std::vector<GridPoint> visited;  // initial location, then each dropoff

  friend bool operator==(const DriverState&, const DriverState&) = default;
};

struct PassengerRequest {
  PassengerId id;
  GridPoint pickup;
  GridPoint dropoff;
  double alpha = 1.0;
  double wtp = 0.0;

  friend bool operator==(const PassengerRequest&, const PassengerRequest&) = default;
};

std::vector<DriverState> spawn_drivers(std::size_t n, Rng& rng, const AgentConfig& cfg,
                                       const GridConfig& grid);

std::vector<PassengerRequest> spawn_passengers(std::size_t n, Rng& rng, const AgentConfig& cfg,
                                               const GridConfig& grid);

/// Completes a ride: the driver collects the fare, pays the serving cost
/// into its net-profit ledger and ends up at the dropoff.
DriverState apply_outcome(DriverState driver, const PassengerRequest& passenger);

}  // namespace ridematch
