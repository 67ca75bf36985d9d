#pragma once

// Scenario inputs: synthetic generators for irradiance, prices and demand,
// and the key = value scenario file.

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sfc/domain.hpp"
#include "sfc/scheduler.hpp"

namespace sfc {

/// Maps slot ordinals to clock time.
struct SlotClock {
  double start_hour = 6.0;
  double slot_duration = 0.5;  // hours

  /// Start of 1-based slot t, in hours since midnight.
  double slot_start(int t) const noexcept {
    return start_hour + slot_duration * (t - 1);
  }
  double slot_midpoint(int t) const noexcept {
    return slot_start(t) + slot_duration / 2.0;
  }
};

/// Half-open [start, end) in hours since midnight.
struct TimeWindow {
  double start_hour = 0.0;
  double end_hour = 0.0;

  bool contains(double hour) const noexcept {
    return hour >= start_hour && hour < end_hour;
  }
  friend bool operator==(const TimeWindow&, const TimeWindow&) = default;
};

/// Lift-trip model for the controller's own load plus a uniform household load.
struct DemandProfileSpec {
  std::vector<TimeWindow> peak_windows{{6.0, 9.0}, {16.5, 20.0}};
  int peak_trips_min = 100;
  int peak_trips_max = 200;
  int offpeak_trips_min = 70;
  int offpeak_trips_max = 100;
  double energy_per_trip = 0.1;  // kWh
  double household_min = 10.0;   // kWh per slot
  double household_max = 25.0;
  double household_scale = 1.0;

  void validate() const;
  bool is_peak(double hour) const noexcept;
};

/// Raised-cosine daylight profile, zero at peak_slot +/- half_width.
struct BellIrradiance {
  double peak = 900.0;      // W/m^2
  double peak_slot = 14.0;  // 1-based, may be fractional
  double half_width = 14.0; // slots
};

std::vector<double> synthetic_irradiance(const BellIrradiance& bell,
                                         int slot_count);

/// Sample retail price curve (cents/kWh): 30 base, a morning shoulder near
/// 08:00 and an evening peak near 18:30. Not measured market data.
std::vector<double> synthetic_grid_price(const SlotClock& clock,
                                         int slot_count);

/// Trips drawn uniformly per slot from the peak or off-peak range, times
/// energy_per_trip.
std::vector<double> gen_sfc_demand(const DemandProfileSpec& spec,
                                   const SlotClock& clock, int slot_count,
                                   std::uint64_t seed);

/// Uniform in [household_min, household_max], times household_scale. The
/// underlying draws do not depend on the scale, so scaled scenarios share
/// random numbers.
std::vector<double> gen_household_demand(const DemandProfileSpec& spec,
                                         int slot_count, std::uint64_t seed);

/// household price = sell_factor * retail, feed-in = buy_factor * retail.
std::vector<PriceTriple> derive_prices(std::span<const double> grid_sell,
                                       double sell_factor = 0.6,
                                       double buy_factor = 0.3);

/// Everything a scenario file can set. Unset optionals mean "derive".
struct ScenarioSpec {
  int slot_count = 28;
  SlotClock clock;

  int panel_count = 65;
  double panel_area = 1.926 * 1.014;
  double panel_efficiency = 0.30;

  double esd_capacity = 15.0;
  std::optional<double> esd_floor;  // default 5% of capacity
  double esd_efficiency = 0.9;
  double esd_rate_limit = 5.0;
  std::optional<double> cycle_cost;  // default: price-gap bound minus 1 cent

  double a_initial = 250.0;
  double vc_step = 1.0;
  double a_floor = 1.0;

  double initial_soc = 3.0;
  std::uint64_t seed = 1;

  BellIrradiance irradiance;
  std::optional<std::string> irradiance_csv;
  std::optional<std::string> grid_price_csv;
  double sell_factor = 0.6;
  double buy_factor = 0.3;

  DemandProfileSpec demand;
  std::optional<std::string> sfc_demand_csv;
  std::optional<std::string> household_demand_csv;

  std::filesystem::path base_dir;  // relative CSV paths resolve against this
};

/// Parses `key = value` lines; `#` starts a comment. Unknown keys and
/// malformed values throw ValidationError naming the line.
ScenarioSpec parse_scenario_spec(std::istream& in,
                                 const std::filesystem::path& base_dir = {});
ScenarioSpec load_scenario_spec(const std::filesystem::path& path);

/// Inverse of parse_scenario_spec for every key (CSV paths as written).
std::string to_config_text(const ScenarioSpec& spec);

/// Resolves generators and files into per-slot inputs and validates.
ScenarioConfig build_scenario(const ScenarioSpec& spec);

}  // namespace sfc
