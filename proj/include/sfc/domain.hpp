#pragma once

// Core value types of the shared-facility controller model.
//
// Units: energy in kWh per slot, prices in cents/kWh, money in cents,
// irradiance in W/m^2, durations in hours.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>

namespace sfc {

class SolarArrayParams {
 public:
  SolarArrayParams(int panel_count, double panel_area_m2, double efficiency);

  int panel_count() const noexcept { return panel_count_; }
  double panel_area() const noexcept { return panel_area_; }
  double efficiency() const noexcept { return efficiency_; }

 private:
  int panel_count_;
  double panel_area_;
  double efficiency_;
};

/// Per-slot tariff seen by the controller.
///
/// grid_sell: grid -> controller (retail), sfc_sell: controller -> households,
/// grid_buy: controller -> grid (feed-in). Always grid_buy < sfc_sell < grid_sell.
class PriceTriple {
 public:
  PriceTriple(double grid_sell, double sfc_sell, double grid_buy);

  double grid_sell() const noexcept { return grid_sell_; }
  double sfc_sell() const noexcept { return sfc_sell_; }
  double grid_buy() const noexcept { return grid_buy_; }

  friend bool operator==(const PriceTriple&, const PriceTriple&) = default;

 private:
  double grid_sell_;
  double sfc_sell_;
  double grid_buy_;
};

/// Battery (energy storage device) characteristics.
class EsdParams {
 public:
  /// floor is the minimum SoC kept for battery life; it must be strictly
  /// positive since the virtual cost divides by the SoC.
  EsdParams(double capacity, double floor, double efficiency, double rate_limit,
            double cycle_cost);

  double capacity() const noexcept { return capacity_; }
  double floor() const noexcept { return floor_; }
  double efficiency() const noexcept { return efficiency_; }
  double rate_limit() const noexcept { return rate_limit_; }
  double cycle_cost() const noexcept { return cycle_cost_; }

  EsdParams with_cycle_cost(double cycle_cost) const;

 private:
  double capacity_;
  double floor_;
  double efficiency_;
  double rate_limit_;
  double cycle_cost_;
};

struct EsdState {
  double soc = 0.0;  // kWh
};

struct SlotInput {
  int index = 1;  // 1-based slot ordinal t
  double irradiance = 0.0;
  double sfc_demand = 0.0;
  double household_demand = 0.0;
  PriceTriple prices{3.0, 2.0, 1.0};
};

/// Throws ValidationError on negative irradiance or demand.
void validate(const SlotInput& input);

/// The five energy flows of one slot, all kWh and nonnegative.
struct SlotDecision {
  double discharge = 0.0;   // battery -> controller
  double charge = 0.0;      // controller -> battery
  double buy_grid = 0.0;    // grid -> controller
  double sell_grid = 0.0;   // controller -> grid
  double sell_users = 0.0;  // controller -> households

  friend bool operator==(const SlotDecision&, const SlotDecision&) = default;
};

enum class CaseLabel { case1, case2, case3 };

std::string_view to_string(CaseLabel label) noexcept;
CaseLabel parse_case_label(std::string_view text);

/// Per-slot cost split. Revenues are negative.
struct CostBreakdown {
  double buy = 0.0;
  double sell_users = 0.0;
  double sell_grid = 0.0;
  double storage_cycle = 0.0;
  double virtual_cost = 0.0;
  double total = 0.0;
  CaseLabel label = CaseLabel::case1;

  static CostBreakdown make(CaseLabel label, double buy, double sell_users,
                            double sell_grid, double storage_cycle,
                            double virtual_cost);
};

/// Energy produced over one slot: efficiency * area * panels * irradiance
/// gives watts, scaled by slot_hours / 1000 to kWh.
double solar_generation(double irradiance, const SolarArrayParams& array,
                        double slot_hours);

struct CycleCostCheck {
  bool valid = false;
  double bound = 0.0;  // min over slots of (grid_sell - sfc_sell) / 2
  std::size_t argmin_slot = 0;
  std::optional<std::size_t> first_violation;  // 0-based position in the series
};

/// The cycle cost must stay strictly below half the smallest retail/household
/// price gap, otherwise the closed-form optima stop being interior.
CycleCostCheck validate_cycle_cost(const EsdParams& esd,
                                   std::span<const PriceTriple> prices);

/// The conventional choice: one cent under the bound.
double default_cycle_cost(std::span<const PriceTriple> prices);

}  // namespace sfc
