#include "ridematch/agents.hpp"

#include <stdexcept>

#include "ridematch/economics.hpp"

namespace ridematch {

namespace {

double draw_positive(Rng& rng, double mean, double sd) {
  std::normal_distribution<double> dist(mean, sd);
  for (;;) {
    const double v = dist(rng);
    if (v > 0.0) return v;
  }
}

double draw_unit_interval(Rng& rng, double mean, double sd) {
  std::normal_distribution<double> dist(mean, sd);
  for (;;) {
    const double v = dist(rng);
    if (v >= 0.0 && v <= 1.0) return v;
  }
}

}  // namespace

void AgentConfig::validate() const {
  if (!(gamma_sd > 0.0) || !(alpha_sd > 0.0) || !(w_p_sd > 0.0))
    throw std::invalid_argument("agent distribution standard deviations must be > 0");
  // Truncation by resampling needs a reachable target region.
  if (!(gamma_mean > -5.0 * gamma_sd && gamma_mean < 1.0 + 5.0 * gamma_sd))
    throw std::invalid_argument("gamma_mean too far outside [0, 1] for resampling");
  if (!(alpha_mean > -5.0 * alpha_sd) || !(w_p_mean > -5.0 * w_p_sd))
    throw std::invalid_argument("alpha_mean / w_p_mean leave almost no positive mass");
}

std::vector<DriverState> spawn_drivers(std::size_t n, Rng& rng, const AgentConfig& cfg,
                                       const GridConfig& grid) {
  if (n == 0) throw std::invalid_argument("spawn_drivers: need at least one driver");
  std::vector<DriverState> drivers;
  drivers.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    DriverState d;
    d.id = DriverId{i};
    d.location = sample_location(rng, grid);
    d.gamma = draw_unit_interval(rng, cfg.gamma_mean, cfg.gamma_sd);
    d.w_p = draw_positive(rng, cfg.w_p_mean, cfg.w_p_sd);
    d.visited.push_back(d.location);
    drivers.push_back(std::move(d));
  }
  return drivers;
}

std::vector<PassengerRequest> spawn_passengers(std::size_t n, Rng& rng, const AgentConfig& cfg,
                                               const GridConfig& grid) {
  if (n == 0) throw std::invalid_argument("spawn_passengers: need at least one passenger");
  std::vector<PassengerRequest> passengers;
  passengers.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    PassengerRequest p;
    p.id = PassengerId{i};
    p.pickup = sample_location(rng, grid);
    do {
      p.dropoff = sample_location(rng, grid);
    } while (p.dropoff == p.pickup);
    p.alpha = draw_positive(rng, cfg.alpha_mean, cfg.alpha_sd);
    p.wtp = compute_wtp(p.pickup, p.dropoff, p.alpha);
    passengers.push_back(p);
  }
  return passengers;
}

DriverState apply_outcome(DriverState driver, const PassengerRequest& passenger) {
  const double cost = compute_cost(driver.location, passenger.pickup, passenger.dropoff,
                                   driver.gamma);
  driver.total_income += passenger.wtp;
  driver.total_net_profit += passenger.wtp - cost;
  driver.total_rides += 1;
  driver.location = passenger.dropoff;
  driver.visited.push_back(passenger.dropoff);
  return driver;
}

}  // namespace ridematch
