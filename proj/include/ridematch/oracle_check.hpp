#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "ridematch/mechanisms.hpp"
#include "ridematch/oracles.hpp"

namespace ridematch {

/// Random profile: each pair is mutually admissible with probability
/// `admit_prob`; scores are independent uniform draws on each side.
PreferenceProfile random_profile(Rng& rng, std::size_t num_drivers, std::size_t num_passengers,
                                 double admit_prob = 0.7);

/// Euclidean distances between uniform random points on the default grid.
CostMatrix random_distance_matrix(Rng& rng, std::size_t rows, std::size_t cols);

/// True if `a` gives every driver a partner it weakly prefers to its
/// partner in `b` (unmatched is worst).
bool weakly_driver_preferred(const MatchingOutcome& a, const MatchingOutcome& b,
                             const PreferenceProfile& profile);

struct OracleCheckOptions {
  std::size_t instances = 200;             // DA vs stable-set enumeration
  std::size_t max_size = 6;                // agents per side, at most 7
  std::size_t hungarian_instances = 100;   // Hungarian vs brute force
  std::size_t hungarian_size = 6;
  std::uint64_t seed = 1;
};

/// Solvers under test; defaults are the production ones.
struct OracleSolvers {
  std::function<MatchingOutcome(const PreferenceProfile&)> deferred_acceptance =
      run_deferred_acceptance;
  std::function<Assignment(const CostMatrix&)> hungarian = hungarian_solve;
};

struct OracleFailure {
  std::string suite;
  std::size_t instance;
  std::uint64_t instance_seed;
  std::string detail;
};

struct OracleCheckReport {
  std::size_t da_checked = 0;
  std::size_t hungarian_checked = 0;
  std::vector<OracleFailure> failures;

  bool passed() const noexcept { return failures.empty(); }
};

/// Cross-checks DA against the enumerated stable set (membership and
/// driver-optimality) and the Hungarian solver against brute force.
/// Throws std::invalid_argument for zero instances or oversize caps.
OracleCheckReport run_oracle_check(const OracleCheckOptions& opts,
                                   const OracleSolvers& solvers = {});

}  // namespace ridematch
