#pragma once

#include <vector>

#include "ridematch/mechanisms.hpp"

namespace ridematch {

/// Pairs (d, p), not matched together, that both strictly prefer each other
/// to their current assignment (being unmatched is worse than any listed
/// partner). Empty iff the outcome is stable for the stated lists.
std::vector<MatchPair> find_blocking_pairs(const MatchingOutcome& outcome,
                                           const PreferenceProfile& profile);

/// Every stable matching of a small profile, by exhaustive enumeration of
/// partial bijections over admissible pairs. At most 7 agents per side.
std::vector<MatchingOutcome> enumerate_stable_matchings(const PreferenceProfile& profile);

/// Exhaustive minimum over injections of the smaller side into the larger.
/// The smaller side may have at most 7 entries.
Assignment brute_force_assignment(const CostMatrix& cost);

inline constexpr std::size_t kMaxEnumerationSize = 7;

}  // namespace ridematch
