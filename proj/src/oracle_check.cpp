#include "ridematch/oracle_check.hpp"

#include <algorithm>
#include <stdexcept>

#include "ridematch/geometry.hpp"

namespace ridematch {

PreferenceProfile random_profile(Rng& rng, std::size_t num_drivers, std::size_t num_passengers,
                                 double admit_prob) {
  std::bernoulli_distribution admit(admit_prob);
  std::uniform_real_distribution<double> score(0.0, 1.0);
  std::vector<PreferenceProfile::DriverList> dl(num_drivers);
  std::vector<PreferenceProfile::PassengerList> pl(num_passengers);
  for (std::size_t d = 0; d < num_drivers; ++d) {
    for (std::size_t p = 0; p < num_passengers; ++p) {
      if (!admit(rng)) continue;
      dl[d].push_back({PassengerId{p}, score(rng)});
      pl[p].push_back({DriverId{d}, score(rng)});
    }
  }
  return PreferenceProfile(std::move(dl), std::move(pl));
}

CostMatrix random_distance_matrix(Rng& rng, std::size_t rows, std::size_t cols) {
  const GridConfig grid;
  std::uniform_real_distribution<double> coord(-grid.half_extent, grid.half_extent);
  std::vector<GridPoint> a(rows), b(cols);
  for (auto& p : a) p = {coord(rng), coord(rng)};
  for (auto& p : b) p = {coord(rng), coord(rng)};
  CostMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = euclidean(a[r], b[c]);
  return m;
}

bool weakly_driver_preferred(const MatchingOutcome& a, const MatchingOutcome& b,
                             const PreferenceProfile& profile) {
  const auto pa = a.partner_of_driver(profile.num_drivers());
  const auto pb = b.partner_of_driver(profile.num_drivers());
  constexpr std::size_t kWorst = static_cast<std::size_t>(-1);
  for (std::size_t d = 0; d < profile.num_drivers(); ++d) {
    const DriverId id{d};
    const std::size_t ra = pa[d] ? profile.driver_rank(id, *pa[d]).value_or(kWorst) : kWorst;
    const std::size_t rb = pb[d] ? profile.driver_rank(id, *pb[d]).value_or(kWorst) : kWorst;
    if (ra > rb) return false;
  }
  return true;
}

OracleCheckReport run_oracle_check(const OracleCheckOptions& opts, const OracleSolvers& solvers) {
  if (opts.instances == 0 || opts.hungarian_instances == 0)
    throw std::invalid_argument("oracle check needs at least one instance per suite");
  if (opts.max_size == 0 || opts.max_size > kMaxEnumerationSize ||
      opts.hungarian_size == 0 || opts.hungarian_size > kMaxEnumerationSize)
    throw std::invalid_argument("oracle check instance sizes must be in [1, 7]");

  OracleCheckReport report;
  for (std::size_t i = 0; i < opts.instances; ++i) {
    const std::uint64_t instance_seed = derive_seed(opts.seed, Stream::oracle, i);
    Rng rng{instance_seed};
    std::uniform_int_distribution<std::size_t> size(1, opts.max_size);
    const std::size_t nd = size(rng);
    const std::size_t np = size(rng);
    const auto profile = random_profile(rng, nd, np);

    const auto da = solvers.deferred_acceptance(profile);
    const auto stable = enumerate_stable_matchings(profile);
    ++report.da_checked;

    auto fail = [&](std::string detail) {
      report.failures.push_back({"deferred_acceptance", i, instance_seed, std::move(detail)});
    };
    if (!da.is_partition(nd, np)) {
      fail("output is not a partial bijection");
      continue;
    }
    const bool member = std::any_of(stable.begin(), stable.end(), [&](const MatchingOutcome& m) {
      return m.pairs == da.pairs;
    });
    if (!member) {
      fail("output is not in the enumerated stable set");
      continue;
    }
    for (const auto& m : stable) {
      if (!weakly_driver_preferred(da, m, profile)) {
        fail("a stable matching is better for some driver");
        break;
      }
    }
  }

  for (std::size_t i = 0; i < opts.hungarian_instances; ++i) {
    const std::uint64_t instance_seed =
        derive_seed(opts.seed, Stream::oracle, opts.instances + i);
    Rng rng{instance_seed};
    const auto m = random_distance_matrix(rng, opts.hungarian_size, opts.hungarian_size);
    const double fast = assignment_total(m, solvers.hungarian(m));
    const double brute = assignment_total(m, brute_force_assignment(m));
    ++report.hungarian_checked;
    if (fast != brute)
      report.failures.push_back({"hungarian", i, instance_seed,
                                 "total " + std::to_string(fast) + " vs brute force " +
                                     std::to_string(brute)});
  }
  return report;
}

}  // namespace ridematch
