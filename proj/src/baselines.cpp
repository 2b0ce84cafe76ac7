#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "ridematch/mechanisms.hpp"

namespace ridematch {

MatchingOutcome run_random(const PreferenceProfile& profile, Rng& rng) {
  const std::size_t nd = profile.num_drivers();
  const std::size_t np = profile.num_passengers();
  std::vector<std::size_t> drivers(nd), passengers(np);
  std::iota(drivers.begin(), drivers.end(), 0);
  std::iota(passengers.begin(), passengers.end(), 0);
  std::shuffle(drivers.begin(), drivers.end(), rng);
  std::shuffle(passengers.begin(), passengers.end(), rng);

  std::vector<std::optional<PassengerId>> partner(nd);
  for (std::size_t i = 0; i < std::min(nd, np); ++i) {
    const DriverId d{drivers[i]};
    const PassengerId p{passengers[i]};
    if (profile.admissible(d, p)) partner[d.index()] = p;
  }
  return MatchingOutcome::from_driver_partners(Mechanism::random, partner, np);
}

MatchingOutcome run_closest(const CostMatrix& distances, const PreferenceProfile& profile) {
  if (distances.rows() != profile.num_drivers() || distances.cols() != profile.num_passengers())
    throw std::invalid_argument("run_closest: distance matrix does not match the profile");
  const Assignment assignment = hungarian_solve(distances);
  std::vector<std::optional<PassengerId>> partner(profile.num_drivers());
  for (std::size_t d = 0; d < assignment.size(); ++d) {
    if (!assignment[d]) continue;
    const PassengerId p{*assignment[d]};
    if (profile.admissible(DriverId{d}, p)) partner[d] = p;
  }
  return MatchingOutcome::from_driver_partners(Mechanism::closest, partner,
                                               profile.num_passengers());
}

}  // namespace ridematch
