#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "ridematch/matrix.hpp"
#include "ridematch/profile.hpp"
#include "ridematch/random.hpp"

namespace ridematch {

/// Row -> column assignment; rows left unassigned (when rows > cols) hold nullopt.
using Assignment = std::vector<std::optional<std::size_t>>;

/// Driver-proposing deferred acceptance over the truncated lists. Returns
/// the driver-optimal stable matching.
MatchingOutcome run_deferred_acceptance(const PreferenceProfile& profile);

/// Immediate acceptance. In step k every still-unmatched driver proposes to
/// the k-th entry of its list; each unmatched passenger permanently accepts
/// the best of that step's proposers. Proposals to already-matched
/// passengers are rejected.
MatchingOutcome run_boston(const PreferenceProfile& profile);

/// Shuffles both sides independently and pairs them by position. A pair
/// that is not admissible under `profile` is cancelled.
MatchingOutcome run_random(const PreferenceProfile& profile, Rng& rng);

/// Minimum total distance assignment on `distances` (drivers x passengers),
/// after which inadmissible pairs are cancelled.
MatchingOutcome run_closest(const CostMatrix& distances, const PreferenceProfile& profile);

/// Exact minimum-cost rectangular assignment (Kuhn-Munkres with
/// potentials). Assigns min(rows, cols) pairs. Throws on non-finite entries.
Assignment hungarian_solve(const CostMatrix& cost);

/// Sum of the assigned cells, accumulated in row order.
double assignment_total(const CostMatrix& cost, const Assignment& assignment);

}  // namespace ridematch
