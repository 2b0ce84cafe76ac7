#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "ridematch/ids.hpp"

namespace ridematch {

enum class Mechanism { da, boston, closest, random };

/// All mechanisms in tag order (da < boston < closest < random).
inline constexpr Mechanism kAllMechanisms[] = {Mechanism::da, Mechanism::boston,
                                               Mechanism::closest, Mechanism::random};

std::string_view to_string(Mechanism m) noexcept;
std::optional<Mechanism> parse_mechanism(std::string_view s) noexcept;

template <typename Id>
struct Ranked {
  Id id;
  double score = 0.0;

  friend bool operator==(const Ranked&, const Ranked&) = default;
};

/// Both sides' truncated preference lists for one round. A pair appears in
/// the driver's list iff it appears in the passenger's list; lists are
/// ordered by ascending score, ties by ascending id.
class PreferenceProfile {
 public:
  using DriverList = std::vector<Ranked<PassengerId>>;
  using PassengerList = std::vector<Ranked<DriverId>>;

  PreferenceProfile() = default;

  /// Sorts each list by (score, id) and checks mutual admissibility.
  /// Throws std::invalid_argument on out-of-range ids, duplicates or a pair
  /// listed on one side only.
  PreferenceProfile(std::vector<DriverList> driver_lists,
                    std::vector<PassengerList> passenger_lists);

  /// Convenience for hand-built instances: each list is an order of ids,
  /// most preferred first; scores are list positions.
  static PreferenceProfile from_orders(const std::vector<std::vector<std::size_t>>& driver_orders,
                                       const std::vector<std::vector<std::size_t>>& passenger_orders);

  std::size_t num_drivers() const noexcept { return driver_lists_.size(); }
  std::size_t num_passengers() const noexcept { return passenger_lists_.size(); }

  std::span<const Ranked<PassengerId>> driver_list(DriverId d) const {
    return driver_lists_.at(d.index());
  }
  std::span<const Ranked<DriverId>> passenger_list(PassengerId p) const {
    return passenger_lists_.at(p.index());
  }

  /// Position of p in d's list (0 = most preferred), or nullopt if unacceptable.
  std::optional<std::size_t> driver_rank(DriverId d, PassengerId p) const;
  /// Position of d in p's list, or nullopt if unacceptable.
  std::optional<std::size_t> passenger_rank(PassengerId p, DriverId d) const;

  bool admissible(DriverId d, PassengerId p) const { return driver_rank(d, p).has_value(); }

  std::size_t num_admissible_pairs() const noexcept;

  friend bool operator==(const PreferenceProfile&, const PreferenceProfile&) = default;

 private:
  static constexpr int kUnlisted = -1;

  std::vector<DriverList> driver_lists_;
  std::vector<PassengerList> passenger_lists_;
  std::vector<int> driver_rank_;     // [d * num_passengers + p]
  std::vector<int> passenger_rank_;  // [p * num_drivers + d]
};

struct MatchPair {
  DriverId driver;
  PassengerId passenger;

  friend auto operator<=>(const MatchPair&, const MatchPair&) = default;
};

struct MatchingOutcome {
  Mechanism mechanism = Mechanism::da;
  std::vector<MatchPair> pairs;  // sorted by driver id
  std::vector<DriverId> unmatched_drivers;
  std::vector<PassengerId> unmatched_passengers;

  /// Builds the outcome from a driver -> passenger partner table.
  static MatchingOutcome from_driver_partners(
      Mechanism mechanism, const std::vector<std::optional<PassengerId>>& partner_of_driver,
      std::size_t num_passengers);

  std::vector<std::optional<PassengerId>> partner_of_driver(std::size_t num_drivers) const;
  std::vector<std::optional<DriverId>> partner_of_passenger(std::size_t num_passengers) const;

  /// Every id appears at most once, and each agent is either matched or
  /// unmatched, never both or neither.
  bool is_partition(std::size_t num_drivers, std::size_t num_passengers) const;

  friend bool operator==(const MatchingOutcome&, const MatchingOutcome&) = default;
};

}  // namespace ridematch
