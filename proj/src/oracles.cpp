#include "ridematch/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace ridematch {

namespace {

constexpr std::size_t kUnmatchedRank = std::numeric_limits<std::size_t>::max();

}  // namespace

std::vector<MatchPair> find_blocking_pairs(const MatchingOutcome& outcome,
                                           const PreferenceProfile& profile) {
  const std::size_t nd = profile.num_drivers();
  const std::size_t np = profile.num_passengers();
  const auto dpartner = outcome.partner_of_driver(nd);
  const auto ppartner = outcome.partner_of_passenger(np);

  // Rank of the current partner; an unacceptable partner ranks below
  // being unmatched, which ranks below every listed partner.
  auto current_driver_rank = [&](DriverId d) -> std::size_t {
    if (!dpartner[d.index()]) return kUnmatchedRank;
    return profile.driver_rank(d, *dpartner[d.index()]).value_or(kUnmatchedRank);
  };
  auto current_passenger_rank = [&](PassengerId p) -> std::size_t {
    if (!ppartner[p.index()]) return kUnmatchedRank;
    return profile.passenger_rank(p, *ppartner[p.index()]).value_or(kUnmatchedRank);
  };

  std::vector<MatchPair> blocking;
  for (std::size_t di = 0; di < nd; ++di) {
    const DriverId d{di};
    const std::size_t d_current = current_driver_rank(d);
    const auto list = profile.driver_list(d);
    for (std::size_t r = 0; r < list.size() && r < d_current; ++r) {
      const PassengerId p = list[r].id;
      if (dpartner[di] == p) continue;
      if (*profile.passenger_rank(p, d) < current_passenger_rank(p)) blocking.push_back({d, p});
    }
  }
  return blocking;
}

namespace {

void enumerate(const PreferenceProfile& profile, std::size_t d,
               std::vector<std::optional<PassengerId>>& partner, std::vector<bool>& taken,
               std::vector<MatchingOutcome>& out) {
  if (d == profile.num_drivers()) {
    auto m = MatchingOutcome::from_driver_partners(Mechanism::da, partner,
                                                   profile.num_passengers());
    if (find_blocking_pairs(m, profile).empty()) out.push_back(std::move(m));
    return;
  }
  partner[d] = std::nullopt;
  enumerate(profile, d + 1, partner, taken, out);
  for (const auto& entry : profile.driver_list(DriverId{d})) {
    const std::size_t p = entry.id.index();
    if (taken[p]) continue;
    taken[p] = true;
    partner[d] = entry.id;
    enumerate(profile, d + 1, partner, taken, out);
    taken[p] = false;
  }
  partner[d] = std::nullopt;
}

void best_injection(const CostMatrix& cost, std::size_t r, std::vector<bool>& used,
                    std::vector<std::size_t>& current, double partial, double& best,
                    std::vector<std::size_t>& best_cols) {
  if (r == cost.rows()) {
    if (partial < best) {
      best = partial;
      best_cols = current;
    }
    return;
  }
  for (std::size_t c = 0; c < cost.cols(); ++c) {
    if (used[c]) continue;
    used[c] = true;
    current[r] = c;
    best_injection(cost, r + 1, used, current, partial + cost(r, c), best, best_cols);
    used[c] = false;
  }
}

}  // namespace

std::vector<MatchingOutcome> enumerate_stable_matchings(const PreferenceProfile& profile) {
  if (profile.num_drivers() > kMaxEnumerationSize ||
      profile.num_passengers() > kMaxEnumerationSize)
    throw std::invalid_argument("enumerate_stable_matchings: instance too large");
  std::vector<std::optional<PassengerId>> partner(profile.num_drivers());
  std::vector<bool> taken(profile.num_passengers(), false);
  std::vector<MatchingOutcome> out;
  enumerate(profile, 0, partner, taken, out);
  return out;
}

Assignment brute_force_assignment(const CostMatrix& cost) {
  if (std::min(cost.rows(), cost.cols()) > kMaxEnumerationSize)
    throw std::invalid_argument("brute_force_assignment: instance too large");
  for (std::size_t r = 0; r < cost.rows(); ++r)
    for (std::size_t c = 0; c < cost.cols(); ++c)
      if (!std::isfinite(cost(r, c)))
        throw std::invalid_argument("brute_force_assignment: non-finite cost entry");
  if (cost.rows() > cost.cols()) {
    const Assignment by_col = brute_force_assignment(cost.transposed());
    Assignment out(cost.rows());
    for (std::size_t c = 0; c < by_col.size(); ++c)
      if (by_col[c]) out[*by_col[c]] = c;
    return out;
  }
  std::vector<bool> used(cost.cols(), false);
  std::vector<std::size_t> current(cost.rows()), best_cols(cost.rows());
  double best = std::numeric_limits<double>::infinity();
  best_injection(cost, 0, used, current, 0.0, best, best_cols);
  Assignment out(cost.rows());
  for (std::size_t r = 0; r < cost.rows(); ++r) out[r] = best_cols[r];
  return out;
}

}  // namespace ridematch
