#pragma once

#include "ridematch/random.hpp"

namespace ridematch {

/// A point on the continuous city plane. The city center is the origin.
struct GridPoint {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const GridPoint&, const GridPoint&) = default;
};

inline constexpr GridPoint kCityCenter{0.0, 0.0};

struct GridConfig {
  double half_extent = 50.0;  // coordinates live in [-half_extent, half_extent]
  double sample_sd = 20.0;    // spread of the location density around the center

  void validate() const;
  friend bool operator==(const GridConfig&, const GridConfig&) = default;
  bool contains(const GridPoint& p) const noexcept;
};

double manhattan(const GridPoint& a, const GridPoint& b) noexcept;
double euclidean(const GridPoint& a, const GridPoint& b) noexcept;

inline double center_distance(const GridPoint& p) noexcept {
  return euclidean(p, kCityCenter);
}

/// Draws both coordinates from Normal(0, sample_sd) and redraws the whole
/// point until it falls inside the grid. No clamping.
GridPoint sample_location(Rng& rng, const GridConfig& cfg);

}  // namespace ridematch
