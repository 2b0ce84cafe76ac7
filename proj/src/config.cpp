#include "ridematch/config.hpp"

#include <fstream>
#include <stdexcept>
#include <string>
#include <type_traits>

namespace ridematch {

std::string_view to_string(PassengerRanking r) noexcept {
  return r == PassengerRanking::wait_only ? "wait_only" : "weighted";
}

namespace {

using nlohmann::json;

template <typename T>
void read_field(const json& obj, const char* key, T& target, const std::string& scope) {
  const auto it = obj.find(key);
  if (it == obj.end()) return;
  bool ok = it->is_number();
  if constexpr (std::is_unsigned_v<T>) ok = it->is_number_unsigned();
  if (!ok) throw std::invalid_argument("config: bad value for " + scope + key);
  try {
    target = it->get<T>();
  } catch (const json::exception&) {
    throw std::invalid_argument("config: bad value for " + scope + key);
  }
}

void reject_unknown(const json& obj, std::initializer_list<std::string_view> known,
                    const std::string& scope) {
  if (!obj.is_object()) throw std::invalid_argument("config: " + scope + " must be an object");
  for (const auto& [key, _] : obj.items()) {
    bool ok = false;
    for (auto k : known) ok = ok || k == key;
    if (!ok) throw std::invalid_argument("config: unknown key " + scope + key);
  }
}

}  // namespace

void apply_json(SimConfig& cfg, const json& j) {
  reject_unknown(j,
                 {"n_drivers", "n_passengers", "n_rounds", "mechanism", "weights",
                  "passenger_ranking", "wait_threshold", "grid", "agent_cfg", "seed"},
                 "");
  read_field(j, "n_drivers", cfg.n_drivers, "");
  read_field(j, "n_passengers", cfg.n_passengers, "");
  read_field(j, "n_rounds", cfg.n_rounds, "");
  read_field(j, "wait_threshold", cfg.wait_threshold, "");
  read_field(j, "seed", cfg.seed, "");

  if (const auto it = j.find("mechanism"); it != j.end()) {
    const auto m = it->is_string() ? parse_mechanism(it->get<std::string>()) : std::nullopt;
    if (!m) throw std::invalid_argument("config: bad value for mechanism");
    cfg.mechanism = *m;
  }
  if (const auto it = j.find("passenger_ranking"); it != j.end()) {
    const std::string v = it->is_string() ? it->get<std::string>() : "";
    if (v == "wait_only") cfg.passenger_ranking = PassengerRanking::wait_only;
    else if (v == "weighted") cfg.passenger_ranking = PassengerRanking::weighted;
    else throw std::invalid_argument("config: bad value for passenger_ranking");
  }
  if (const auto it = j.find("weights"); it != j.end()) {
    const std::string s = "weights.";
    reject_unknown(*it, {"w_t", "w_i", "w_prox", "w_center", "center_quad_coeff"}, s);
    read_field(*it, "w_t", cfg.weights.w_t, s);
    read_field(*it, "w_i", cfg.weights.w_i, s);
    read_field(*it, "w_prox", cfg.weights.w_prox, s);
    read_field(*it, "w_center", cfg.weights.w_center, s);
    read_field(*it, "center_quad_coeff", cfg.weights.center_quad_coeff, s);
  }
  if (const auto it = j.find("grid"); it != j.end()) {
    const std::string s = "grid.";
    reject_unknown(*it, {"half_extent", "sample_sd"}, s);
    read_field(*it, "half_extent", cfg.grid.half_extent, s);
    read_field(*it, "sample_sd", cfg.grid.sample_sd, s);
  }
  if (const auto it = j.find("agent_cfg"); it != j.end()) {
    const std::string s = "agent_cfg.";
    reject_unknown(*it,
                   {"gamma_mean", "gamma_sd", "alpha_mean", "alpha_sd", "w_p_mean", "w_p_sd"}, s);
    read_field(*it, "gamma_mean", cfg.agents.gamma_mean, s);
    read_field(*it, "gamma_sd", cfg.agents.gamma_sd, s);
    read_field(*it, "alpha_mean", cfg.agents.alpha_mean, s);
    read_field(*it, "alpha_sd", cfg.agents.alpha_sd, s);
    read_field(*it, "w_p_mean", cfg.agents.w_p_mean, s);
    read_field(*it, "w_p_sd", cfg.agents.w_p_sd, s);
  }
}

nlohmann::json to_json(const SimConfig& cfg) {
  return {
      {"n_drivers", cfg.n_drivers},
      {"n_passengers", cfg.n_passengers},
      {"n_rounds", cfg.n_rounds},
      {"mechanism", to_string(cfg.mechanism)},
      {"weights",
       {{"w_t", cfg.weights.w_t},
        {"w_i", cfg.weights.w_i},
        {"w_prox", cfg.weights.w_prox},
        {"w_center", cfg.weights.w_center},
        {"center_quad_coeff", cfg.weights.center_quad_coeff}}},
      {"passenger_ranking", to_string(cfg.passenger_ranking)},
      {"wait_threshold", cfg.wait_threshold},
      {"grid", {{"half_extent", cfg.grid.half_extent}, {"sample_sd", cfg.grid.sample_sd}}},
      {"agent_cfg",
       {{"gamma_mean", cfg.agents.gamma_mean},
        {"gamma_sd", cfg.agents.gamma_sd},
        {"alpha_mean", cfg.agents.alpha_mean},
        {"alpha_sd", cfg.agents.alpha_sd},
        {"w_p_mean", cfg.agents.w_p_mean},
        {"w_p_sd", cfg.agents.w_p_sd}}},
      {"seed", cfg.seed},
  };
}

SimConfig load_config(const std::filesystem::path& path, SimConfig base) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config " + path.string());
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error("config " + path.string() + ": " + e.what());
  }
  apply_json(base, j);
  return base;
}

}  // namespace ridematch
