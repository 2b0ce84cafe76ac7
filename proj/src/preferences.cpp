#include "ridematch/preferences.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "ridematch/economics.hpp"

namespace ridematch {

void EconWeights::validate() const {
  if (w_t < 0.0 || w_i < 0.0 || w_prox < 0.0 || w_center < 0.0)
    throw std::invalid_argument("preference weights must be >= 0");
}

namespace {

struct RangeBuilder {
  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();

  void add(double v) noexcept {
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  FactorRange range() const noexcept {
    if (lo > hi) return {};
    return {lo, hi};
  }
};

}  // namespace

NormalizationContext NormalizationContext::build(std::span<const DriverState> drivers,
                                                 std::span<const PassengerRequest> passengers) {
  RangeBuilder wait, income, center;
  for (const auto& d : drivers) {
    income.add(d.total_income);
    for (const auto& p : passengers) wait.add(wait_length(d.location, p.pickup));
  }
  for (const auto& p : passengers) center.add(center_distance(p.dropoff));
  return {wait.range(), income.range(), center.range()};
}

bool pair_admissible(const DriverState& driver, const PassengerRequest& p, double wait_threshold) {
  if (wait_length(driver.location, p.pickup) > wait_threshold) return false;
  return driver_accepts(p.wtp, compute_cost(driver.location, p.pickup, p.dropoff, driver.gamma));
}

double driver_score_from_factors(double wtp, double w_p, double gamma, double pickup_dist,
                                 double center_norm, const EconWeights& w) noexcept {
  const double ranking_cost = w.w_prox * gamma * pickup_dist +
                              w.w_center * w.center_quad_coeff * center_norm * center_norm;
  return -wtp + w_p * ranking_cost;
}

double driver_pref_score(const DriverState& driver, const PassengerRequest& p,
                         const EconWeights& w, const NormalizationContext& norm) {
  const double cost = compute_cost(driver.location, p.pickup, p.dropoff, driver.gamma);
  if (!driver_accepts(p.wtp, cost))
    throw std::invalid_argument("driver_pref_score: pair has non-positive driver utility");
  return driver_score_from_factors(p.wtp, driver.w_p, driver.gamma,
                                   manhattan(driver.location, p.pickup),
                                   norm.dropoff_center.normalize(center_distance(p.dropoff)), w);
}

double passenger_pref_score(const PassengerRequest& p, const DriverState& driver,
                            const EconWeights& w, const NormalizationContext& norm) {
  const double wait = norm.wait.normalize(wait_length(driver.location, p.pickup));
  const double income = norm.income.normalize(driver.total_income);
  return w.w_t * wait + w.w_i * income;
}

PreferenceProfile build_preferences(std::span<const DriverState> drivers,
                                    std::span<const PassengerRequest> passengers,
                                    const EconWeights& w, double wait_threshold,
                                    PassengerRanking ranking) {
  if (drivers.empty() || passengers.empty())
    throw std::invalid_argument("build_preferences: populations must be non-empty");
  const auto norm = NormalizationContext::build(drivers, passengers);

  std::vector<PreferenceProfile::DriverList> dl(drivers.size());
  std::vector<PreferenceProfile::PassengerList> pl(passengers.size());
  for (std::size_t d = 0; d < drivers.size(); ++d) {
    for (std::size_t p = 0; p < passengers.size(); ++p) {
      const auto& drv = drivers[d];
      const auto& pas = passengers[p];
      if (!pair_admissible(drv, pas, wait_threshold)) continue;
      dl[d].push_back({PassengerId{p}, driver_pref_score(drv, pas, w, norm)});
      const double pscore = ranking == PassengerRanking::wait_only
                                ? wait_length(drv.location, pas.pickup)
                                : passenger_pref_score(pas, drv, w, norm);
      pl[p].push_back({DriverId{d}, pscore});
    }
  }
  return PreferenceProfile(std::move(dl), std::move(pl));
}

}  // namespace ridematch
