#include "ridematch/economics.hpp"

namespace ridematch {

double compute_wtp(const GridPoint& pickup, const GridPoint& dropoff, double alpha) {
  const double ride_length = manhattan(pickup, dropoff);
  const double center = 0.5 * (center_distance(pickup) + center_distance(dropoff));
  return alpha * (ride_length + center) / 3.0;
}

double compute_cost(const GridPoint& driver_loc, const GridPoint& pickup,
                    const GridPoint& dropoff, double gamma) {
  const double trip = manhattan(driver_loc, pickup) + manhattan(pickup, dropoff);
  return gamma * (trip + center_distance(dropoff));
}

}  // namespace ridematch
