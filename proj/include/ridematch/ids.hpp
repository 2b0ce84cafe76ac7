#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>

namespace ridematch {

/// Ordinal identifiers. Within a round they double as dense indices
/// (0..n-1) into the driver and passenger populations.
template <typename Tag>
struct AgentId {
  std::uint32_t value = 0;

  constexpr AgentId() = default;
  constexpr explicit AgentId(std::size_t v) : value(static_cast<std::uint32_t>(v)) {}
  constexpr std::size_t index() const noexcept { return value; }

  friend constexpr auto operator<=>(AgentId, AgentId) = default;
};

struct DriverTag {};
struct PassengerTag {};
using DriverId = AgentId<DriverTag>;
using PassengerId = AgentId<PassengerTag>;

}  // namespace ridematch
