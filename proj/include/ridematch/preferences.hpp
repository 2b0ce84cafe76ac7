#pragma once

#include <span>

#include "ridematch/agents.hpp"
#include "ridematch/profile.hpp"

namespace ridematch {

struct EconWeights {
  double w_t = 1.0;       // passenger weight on (normalized) wait
  double w_i = 0.0;       // passenger weight on (normalized) driver income
  double w_prox = 1.0;    // driver weight on pickup proximity
  double w_center = 1.0;  // driver weight on dropoff distance from center
  double center_quad_coeff = 0.1;

  void validate() const;
  friend bool operator==(const EconWeights&, const EconWeights&) = default;
};

/// How passengers rank drivers.
enum class PassengerRanking {
  wait_only,  // raw wait distance; the unweighted baseline
  weighted,   // w_t * norm(wait) + w_i * norm(income)
};

/// Min/max of one factor over the round's candidate set.
struct FactorRange {
  double min = 0.0;
  double max = 0.0;

  /// Maps into [0, 1]; 0 when the range is degenerate.
  double normalize(double v) const noexcept {
    return max > min ? (v - min) / (max - min) : 0.0;
  }
  friend bool operator==(const FactorRange&, const FactorRange&) = default;
};

/// Built once per round, read-only afterwards.
struct NormalizationContext {
  FactorRange wait;             // over every driver/passenger pair of the round
  FactorRange income;           // over drivers' current total income
  FactorRange dropoff_center;  // over passengers' dropoff distances from the center

  static NormalizationContext build(std::span<const DriverState> drivers,
                                    std::span<const PassengerRequest> passengers);
  friend bool operator==(const NormalizationContext&, const NormalizationContext&) = default;
};

/// The driver's score from already-computed factors:
/// -wtp + w_p * (w_prox * gamma * pickup_dist + w_center * coeff * center_norm^2).
double driver_score_from_factors(double wtp, double w_p, double gamma, double pickup_dist,
                                 double center_norm, const EconWeights& w) noexcept;

/// Lower is better. Only defined for pairs the driver would serve
/// (positive utility); throws std::invalid_argument otherwise.
double driver_pref_score(const DriverState& driver, const PassengerRequest& p,
                         const EconWeights& w, const NormalizationContext& norm);

/// Lower is better.
double passenger_pref_score(const PassengerRequest& p, const DriverState& driver,
                            const EconWeights& w, const NormalizationContext& norm);

/// Truncated lists for both sides. A pair is admissible when the driver's
/// utility is positive and the wait is within `wait_threshold`.
PreferenceProfile build_preferences(std::span<const DriverState> drivers,
                                    std::span<const PassengerRequest> passengers,
                                    const EconWeights& w, double wait_threshold,
                                    PassengerRanking ranking = PassengerRanking::weighted);

bool pair_admissible(const DriverState& driver, const PassengerRequest& p, double wait_threshold);

}  // namespace ridematch
