#include "ridematch/profile.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace ridematch {

std::string_view to_string(Mechanism m) noexcept {
  switch (m) {
    case Mechanism::da: return "da";
    case Mechanism::boston: return "boston";
    case Mechanism::closest: return "closest";
    case Mechanism::random: return "random";
  }
  return "unknown";
}

std::optional<Mechanism> parse_mechanism(std::string_view s) noexcept {
  for (Mechanism m : kAllMechanisms)
    if (to_string(m) == s) return m;
  return std::nullopt;
}

namespace {

template <typename Id>
void sort_list(std::vector<Ranked<Id>>& list) {
  std::sort(list.begin(), list.end(), [](const Ranked<Id>& a, const Ranked<Id>& b) {
    if (a.score != b.score) return a.score < b.score;
    return a.id < b.id;
  });
}

}  // namespace

PreferenceProfile::PreferenceProfile(std::vector<DriverList> driver_lists,
                                     std::vector<PassengerList> passenger_lists)
    : driver_lists_(std::move(driver_lists)), passenger_lists_(std::move(passenger_lists)) {
  const std::size_t nd = driver_lists_.size();
  const std::size_t np = passenger_lists_.size();
  driver_rank_.assign(nd * np, kUnlisted);
  passenger_rank_.assign(np * nd, kUnlisted);

  for (std::size_t d = 0; d < nd; ++d) {
    auto& list = driver_lists_[d];
    sort_list(list);
    for (std::size_t r = 0; r < list.size(); ++r) {
      const std::size_t p = list[r].id.index();
      if (p >= np) throw std::invalid_argument("driver list references unknown passenger");
      int& slot = driver_rank_[d * np + p];
      if (slot != kUnlisted) throw std::invalid_argument("duplicate passenger in driver list");
      slot = static_cast<int>(r);
    }
  }
  for (std::size_t p = 0; p < np; ++p) {
    auto& list = passenger_lists_[p];
    sort_list(list);
    for (std::size_t r = 0; r < list.size(); ++r) {
      const std::size_t d = list[r].id.index();
      if (d >= nd) throw std::invalid_argument("passenger list references unknown driver");
      int& slot = passenger_rank_[p * nd + d];
      if (slot != kUnlisted) throw std::invalid_argument("duplicate driver in passenger list");
      slot = static_cast<int>(r);
    }
  }
  for (std::size_t d = 0; d < nd; ++d)
    for (std::size_t p = 0; p < np; ++p)
      if ((driver_rank_[d * np + p] == kUnlisted) != (passenger_rank_[p * nd + d] == kUnlisted))
        throw std::invalid_argument("pair (driver " + std::to_string(d) + ", passenger " +
                                    std::to_string(p) + ") is listed on one side only");
}

PreferenceProfile PreferenceProfile::from_orders(
    const std::vector<std::vector<std::size_t>>& driver_orders,
    const std::vector<std::vector<std::size_t>>& passenger_orders) {
  std::vector<DriverList> dl(driver_orders.size());
  for (std::size_t d = 0; d < driver_orders.size(); ++d)
    for (std::size_t r = 0; r < driver_orders[d].size(); ++r)
      dl[d].push_back({PassengerId{driver_orders[d][r]}, static_cast<double>(r)});
  std::vector<PassengerList> pl(passenger_orders.size());
  for (std::size_t p = 0; p < passenger_orders.size(); ++p)
    for (std::size_t r = 0; r < passenger_orders[p].size(); ++r)
      pl[p].push_back({DriverId{passenger_orders[p][r]}, static_cast<double>(r)});
  return PreferenceProfile(std::move(dl), std::move(pl));
}

std::optional<std::size_t> PreferenceProfile::driver_rank(DriverId d, PassengerId p) const {
  const int r = driver_rank_.at(d.index() * num_passengers() + p.index());
  if (r == kUnlisted) return std::nullopt;
  return static_cast<std::size_t>(r);
}

std::optional<std::size_t> PreferenceProfile::passenger_rank(PassengerId p, DriverId d) const {
  const int r = passenger_rank_.at(p.index() * num_drivers() + d.index());
  if (r == kUnlisted) return std::nullopt;
  return static_cast<std::size_t>(r);
}

std::size_t PreferenceProfile::num_admissible_pairs() const noexcept {
  std::size_t n = 0;
  for (const auto& l : driver_lists_) n += l.size();
  return n;
}

MatchingOutcome MatchingOutcome::from_driver_partners(
    Mechanism mechanism, const std::vector<std::optional<PassengerId>>& partner_of_driver,
    std::size_t num_passengers) {
  MatchingOutcome out;
  out.mechanism = mechanism;
  std::vector<bool> taken(num_passengers, false);
  for (std::size_t d = 0; d < partner_of_driver.size(); ++d) {
    if (const auto& p = partner_of_driver[d]) {
      if (p->index() >= num_passengers || taken[p->index()])
        throw std::logic_error("driver partner table is not a partial bijection");
      taken[p->index()] = true;
      out.pairs.push_back({DriverId{d}, *p});
    } else {
      out.unmatched_drivers.push_back(DriverId{d});
    }
  }
  for (std::size_t p = 0; p < num_passengers; ++p)
    if (!taken[p]) out.unmatched_passengers.push_back(PassengerId{p});
  return out;
}

std::vector<std::optional<PassengerId>> MatchingOutcome::partner_of_driver(
    std::size_t num_drivers) const {
  std::vector<std::optional<PassengerId>> out(num_drivers);
  for (const auto& mp : pairs) out.at(mp.driver.index()) = mp.passenger;
  return out;
}

std::vector<std::optional<DriverId>> MatchingOutcome::partner_of_passenger(
    std::size_t num_passengers) const {
  std::vector<std::optional<DriverId>> out(num_passengers);
  for (const auto& mp : pairs) out.at(mp.passenger.index()) = mp.driver;
  return out;
}

bool MatchingOutcome::is_partition(std::size_t num_drivers, std::size_t num_passengers) const {
  std::vector<int> dseen(num_drivers, 0), pseen(num_passengers, 0);
  for (const auto& mp : pairs) {
    if (mp.driver.index() >= num_drivers || mp.passenger.index() >= num_passengers) return false;
    ++dseen[mp.driver.index()];
    ++pseen[mp.passenger.index()];
  }
  for (DriverId d : unmatched_drivers) {
    if (d.index() >= num_drivers) return false;
    ++dseen[d.index()];
  }
  for (PassengerId p : unmatched_passengers) {
    if (p.index() >= num_passengers) return false;
    ++pseen[p.index()];
  }
  return std::all_of(dseen.begin(), dseen.end(), [](int c) { return c == 1; }) &&
         std::all_of(pseen.begin(), pseen.end(), [](int c) { return c == 1; });
}

}  // namespace ridematch
