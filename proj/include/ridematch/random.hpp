#pragma once

#include <cstdint>
#include <random>

namespace ridematch {

using Rng = std::mt19937_64;

/// Named sub-streams of one master seed. Each consumer draws from its own
/// stream so that, for example, switching the mechanism never perturbs the
/// agent populations generated for a seed.
enum class Stream : std::uint64_t {
  drivers = 1,
  passengers = 2,
  mechanism = 3,
  oracle = 4,
};

constexpr std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

constexpr std::uint64_t derive_seed(std::uint64_t master, Stream stream,
                                    std::uint64_t index = 0) noexcept {
  std::uint64_t h = splitmix64(master);
  h = splitmix64(h ^ static_cast<std::uint64_t>(stream));
  return splitmix64(h ^ index);
}

inline Rng make_stream(std::uint64_t master, Stream stream,
                       std::uint64_t index = 0) {
  return Rng{derive_seed(master, stream, index)};
}

}  // namespace ridematch
