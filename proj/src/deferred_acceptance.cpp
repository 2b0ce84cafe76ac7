#include <deque>

#include "ridematch/mechanisms.hpp"

namespace ridematch {

MatchingOutcome run_deferred_acceptance(const PreferenceProfile& profile) {
  const std::size_t nd = profile.num_drivers();
  const std::size_t np = profile.num_passengers();

  std::vector<std::size_t> next_choice(nd, 0);
  std::vector<std::optional<DriverId>> held(np);
  std::deque<DriverId> free_drivers;
  for (std::size_t d = 0; d < nd; ++d) free_drivers.push_back(DriverId{d});

  while (!free_drivers.empty()) {
    const DriverId d = free_drivers.front();
    free_drivers.pop_front();
    const auto list = profile.driver_list(d);
    auto& k = next_choice[d.index()];
    if (k >= list.size()) continue;  // exhausted, stays unmatched

    const PassengerId p = list[k++].id;
    auto& current = held[p.index()];
    if (!current) {
      current = d;
    } else if (*profile.passenger_rank(p, d) < *profile.passenger_rank(p, *current)) {
      free_drivers.push_back(*current);
      current = d;
    } else {
      free_drivers.push_back(d);
    }
  }

  std::vector<std::optional<PassengerId>> partner(nd);
  for (std::size_t p = 0; p < np; ++p)
    if (held[p]) partner[held[p]->index()] = PassengerId{p};
  return MatchingOutcome::from_driver_partners(Mechanism::da, partner, np);
}

}  // namespace ridematch
