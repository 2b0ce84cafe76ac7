#pragma once

#include "ridematch/geometry.hpp"

namespace ridematch {

/// Fare a passenger posts: alpha * (ride length + mean center distance of
/// pickup and dropoff) / 3. Ride length is the Manhattan pickup->dropoff
/// distance.
double compute_wtp(const GridPoint& pickup, const GridPoint& dropoff, double alpha);

/// Driver's cost to serve a ride: gamma * (deadhead + ride length + dropoff
/// center distance), with both legs measured in Manhattan distance.
double compute_cost(const GridPoint& driver_loc, const GridPoint& pickup,
                    const GridPoint& dropoff, double gamma);

/// Price minus cost. The driver will serve the ride only if this is > 0.
constexpr double driver_utility(double wtp, double cost) noexcept { return wtp - cost; }

constexpr bool driver_accepts(double wtp, double cost) noexcept {
  return driver_utility(wtp, cost) > 0.0;
}

/// Wait time for a pickup. One time unit per unit of Manhattan distance.
inline double wait_length(const GridPoint& driver_loc, const GridPoint& pickup) noexcept {
  return manhattan(driver_loc, pickup);
}

}  // namespace ridematch
