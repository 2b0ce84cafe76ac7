#pragma once

// Fixtures shared by the unit and acceptance suites.

#include <algorithm>
#include <optional>
#include <vector>

#include "ridematch/oracle_check.hpp"
#include "ridematch/oracles.hpp"

namespace ridematch::testing {

/// Three drivers, three passengers. Immediate acceptance leaves driver 0
/// unmatched although passenger 1 prefers it to its partner; deferred
/// acceptance reaches a stable outcome. Passenger 2 accepts no one.
inline PreferenceProfile boston_counterexample() {
  return PreferenceProfile::from_orders(
      {{0, 1}, {1, 0}, {0, 1}},
      {{2, 0, 1}, {0, 1, 2}, {}});
}

/// All ordered subsets of `candidates` (every truncation and permutation).
inline std::vector<std::vector<std::size_t>> ordered_subsets(const std::vector<std::size_t>& candidates) {
  std::vector<std::vector<std::size_t>> out{{}};
  std::vector<std::size_t> current;
  std::vector<bool> used(candidates.size(), false);
  auto rec = [&](auto&& self) -> void {
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      if (used[i]) continue;
      used[i] = true;
      current.push_back(candidates[i]);
      out.push_back(current);
      self(self);
      current.pop_back();
      used[i] = false;
    }
  };
  rec(rec);
  return out;
}

/// Rebuilds `profile` with driver `d` reporting `reported` (passenger ids,
/// most preferred first). Passengers the driver no longer lists drop it, so
/// the profile stays mutually admissible.
inline PreferenceProfile with_reported_list(const PreferenceProfile& profile, DriverId d,
                                            const std::vector<std::size_t>& reported) {
  std::vector<PreferenceProfile::DriverList> dl(profile.num_drivers());
  std::vector<PreferenceProfile::PassengerList> pl(profile.num_passengers());
  for (std::size_t i = 0; i < profile.num_drivers(); ++i) {
    if (i == d.index()) {
      for (std::size_t r = 0; r < reported.size(); ++r)
        dl[i].push_back({PassengerId{reported[r]}, static_cast<double>(r)});
    } else {
      const auto l = profile.driver_list(DriverId{i});
      dl[i].assign(l.begin(), l.end());
    }
  }
  for (std::size_t j = 0; j < profile.num_passengers(); ++j) {
    for (const auto& e : profile.passenger_list(PassengerId{j})) {
      if (e.id == d && std::find(reported.begin(), reported.end(), j) == reported.end()) continue;
      pl[j].push_back(e);
    }
  }
  return PreferenceProfile(std::move(dl), std::move(pl));
}

struct ManipulationResult {
  std::size_t trials = 0;
  std::size_t violations = 0;
};

/// For every driver and every list it could report to passengers who accept
/// it, checks that DA never gives it a partner it truly prefers.
inline ManipulationResult check_driver_manipulations(const PreferenceProfile& truth) {
  ManipulationResult res;
  const auto honest = run_deferred_acceptance(truth).partner_of_driver(truth.num_drivers());
  constexpr std::size_t kWorst = static_cast<std::size_t>(-1);
  for (std::size_t i = 0; i < truth.num_drivers(); ++i) {
    const DriverId d{i};
    const std::size_t honest_rank =
        honest[i] ? truth.driver_rank(d, *honest[i]).value_or(kWorst) : kWorst;
    std::vector<std::size_t> acceptors;
    for (std::size_t j = 0; j < truth.num_passengers(); ++j)
      if (truth.passenger_rank(PassengerId{j}, d)) acceptors.push_back(j);
    for (const auto& reported : ordered_subsets(acceptors)) {
      const auto lie = with_reported_list(truth, d, reported);
      const auto got = run_deferred_acceptance(lie).partner_of_driver(truth.num_drivers())[i];
      const std::size_t rank = got ? truth.driver_rank(d, *got).value_or(kWorst) : kWorst;
      ++res.trials;
      if (rank < honest_rank) ++res.violations;
    }
  }
  return res;
}

/// The element of `stable` that every driver weakly prefers to all others.
inline std::optional<MatchingOutcome> driver_optimal(const std::vector<MatchingOutcome>& stable,
                                                     const PreferenceProfile& profile) {
  for (const auto& cand : stable) {
    const bool best = std::all_of(stable.begin(), stable.end(), [&](const MatchingOutcome& m) {
      return weakly_driver_preferred(cand, m, profile);
    });
    if (best) return cand;
  }
  return std::nullopt;
}

}  // namespace ridematch::testing
