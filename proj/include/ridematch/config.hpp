#pragma once

#include <filesystem>
#include <string_view>

#include <json.hpp>

#include "ridematch/engine.hpp"

namespace ridematch {

std::string_view to_string(PassengerRanking r) noexcept;

/// Overlays the keys present in `j` onto `cfg`. Keys mirror SimConfig's
/// field names: n_drivers, n_passengers, n_rounds, mechanism, weights{...},
/// passenger_ranking, wait_threshold, grid{...}, agent_cfg{...}, seed.
/// Unknown keys and ill-typed values throw std::invalid_argument.
void apply_json(SimConfig& cfg, const nlohmann::json& j);

nlohmann::json to_json(const SimConfig& cfg);

/// Reads a JSON config file over `base`.
SimConfig load_config(const std::filesystem::path& path, SimConfig base = {});

}  // namespace ridematch
