#include "ridematch/geometry.hpp"

#include <cmath>
#include <stdexcept>

namespace ridematch {

void GridConfig::validate() const {
  if (!(half_extent > 0.0)) throw std::invalid_argument("grid half_extent must be > 0");
  if (!(sample_sd > 0.0)) throw std::invalid_argument("grid sample_sd must be > 0");
}

bool GridConfig::contains(const GridPoint& p) const noexcept {
  return std::abs(p.x) <= half_extent && std::abs(p.y) <= half_extent;
}

double manhattan(const GridPoint& a, const GridPoint& b) noexcept {
  return std::abs(a.x - b.x) + std::abs(a.y - b.y);
}

double euclidean(const GridPoint& a, const GridPoint& b) noexcept {
  return std::hypot(a.x - b.x, a.y - b.y);
}

GridPoint sample_location(Rng& rng, const GridConfig& cfg) {
  std::normal_distribution<double> coord(0.0, cfg.sample_sd);
  for (;;) {
    GridPoint p{coord(rng), coord(rng)};
    if (cfg.contains(p)) return p;
  }
}

}  // namespace ridematch
