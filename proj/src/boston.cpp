#include <algorithm>

#include "ridematch/mechanisms.hpp"

namespace ridematch {

MatchingOutcome run_boston(const PreferenceProfile& profile) {
  const std::size_t nd = profile.num_drivers();
  const std::size_t np = profile.num_passengers();

  std::vector<std::optional<PassengerId>> partner(nd);
  std::vector<bool> passenger_taken(np, false);

  std::size_t longest = 0;
  for (std::size_t d = 0; d < nd; ++d)
    longest = std::max(longest, profile.driver_list(DriverId{d}).size());

  std::vector<std::optional<DriverId>> best_proposer(np);
  for (std::size_t step = 0; step < longest; ++step) {
    std::fill(best_proposer.begin(), best_proposer.end(), std::nullopt);
    // All proposals of a step are simultaneous.
    for (std::size_t di = 0; di < nd; ++di) {
      const DriverId d{di};
      if (partner[di]) continue;
      const auto list = profile.driver_list(d);
      if (step >= list.size()) continue;
      const PassengerId p = list[step].id;
      if (passenger_taken[p.index()]) continue;
      auto& best = best_proposer[p.index()];
      if (!best || *profile.passenger_rank(p, d) < *profile.passenger_rank(p, *best)) best = d;
    }
    for (std::size_t p = 0; p < np; ++p) {
      if (!best_proposer[p]) continue;
      passenger_taken[p] = true;
      partner[best_proposer[p]->index()] = PassengerId{p};
    }
  }
  return MatchingOutcome::from_driver_partners(Mechanism::boston, partner, np);
}

}  // namespace ridematch
