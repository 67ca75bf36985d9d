#include "sfc/domain.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "sfc/errors.hpp"

namespace sfc {

namespace {

bool finite(double x) { return std::isfinite(x); }

}  // namespace

SolarArrayParams::SolarArrayParams(int panel_count, double panel_area_m2,
                                   double efficiency)
    : panel_count_(panel_count),
      panel_area_(panel_area_m2),
      efficiency_(efficiency) {
  if (panel_count < 1) {
    throw ValidationError("solar array needs at least one panel");
  }
  if (!finite(panel_area_m2) || panel_area_m2 <= 0.0) {
    throw ValidationError("panel area must be positive");
  }
  if (!finite(efficiency) || efficiency <= 0.0 || efficiency > 1.0) {
    throw ValidationError("panel efficiency must lie in (0, 1]");
  }
}

PriceTriple::PriceTriple(double grid_sell, double sfc_sell, double grid_buy)
    : grid_sell_(grid_sell), sfc_sell_(sfc_sell), grid_buy_(grid_buy) {
  if (!finite(grid_sell) || !finite(sfc_sell) || !finite(grid_buy)) {
    throw ValidationError("prices must be finite");
  }
  if (!(0.0 < grid_buy && grid_buy < sfc_sell && sfc_sell < grid_sell)) {
    throw ValidationError(
        "prices must satisfy 0 < grid_buy < sfc_sell < grid_sell");
  }
}

EsdParams::EsdParams(double capacity, double floor, double efficiency,
                     double rate_limit, double cycle_cost)
    : capacity_(capacity),
      floor_(floor),
      efficiency_(efficiency),
      rate_limit_(rate_limit),
      cycle_cost_(cycle_cost) {
  if (!finite(capacity) || !finite(floor) || !(0.0 < floor && floor < capacity)) {
    throw ValidationError("battery floor must satisfy 0 < floor < capacity");
  }
  if (!finite(efficiency) || efficiency <= 0.0 || efficiency > 1.0) {
    throw ValidationError("battery efficiency must lie in (0, 1]");
  }
  if (!finite(rate_limit) || rate_limit <= 0.0) {
    throw ValidationError("battery rate limit must be positive");
  }
  if (!finite(cycle_cost) || cycle_cost <= 0.0) {
    throw ValidationError("battery cycle cost must be positive");
  }
}

EsdParams EsdParams::with_cycle_cost(double cycle_cost) const {
  return EsdParams(capacity_, floor_, efficiency_, rate_limit_, cycle_cost);
}

void validate(const SlotInput& input) {
  if (!(input.irradiance >= 0.0) || !finite(input.irradiance)) {
    throw ValidationError("irradiance must be nonnegative at slot " +
                          std::to_string(input.index));
  }
  if (!(input.sfc_demand >= 0.0) || !finite(input.sfc_demand)) {
    throw ValidationError("controller demand must be nonnegative at slot " +
                          std::to_string(input.index));
  }
  if (!(input.household_demand >= 0.0) || !finite(input.household_demand)) {
    throw ValidationError("household demand must be nonnegative at slot " +
                          std::to_string(input.index));
  }
}

std::string_view to_string(CaseLabel label) noexcept {
  switch (label) {
    case CaseLabel::case1:
      return "case1";
    case CaseLabel::case2:
      return "case2";
    case CaseLabel::case3:
      return "case3";
  }
  return "case1";
}

CaseLabel parse_case_label(std::string_view text) {
  if (text == "case1") return CaseLabel::case1;
  if (text == "case2") return CaseLabel::case2;
  if (text == "case3") return CaseLabel::case3;
  throw ValidationError("unknown case label '" + std::string(text) + "'");
}

CostBreakdown CostBreakdown::make(CaseLabel label, double buy,
                                  double sell_users, double sell_grid,
                                  double storage_cycle, double virtual_cost) {
  CostBreakdown c;
  c.label = label;
  c.buy = buy;
  c.sell_users = sell_users;
  c.sell_grid = sell_grid;
  c.storage_cycle = storage_cycle;
  c.virtual_cost = virtual_cost;
  c.total = buy + sell_users + sell_grid + storage_cycle + virtual_cost;
  return c;
}

double solar_generation(double irradiance, const SolarArrayParams& array,
                        double slot_hours) {
  if (!(irradiance >= 0.0) || !finite(irradiance)) {
    throw ValidationError("irradiance must be nonnegative");
  }
  if (!(slot_hours > 0.0)) {
    throw ValidationError("slot duration must be positive");
  }
  const double watts = array.efficiency() * array.panel_area() *
                       static_cast<double>(array.panel_count()) * irradiance;
  return watts * slot_hours / 1000.0;
}

CycleCostCheck validate_cycle_cost(const EsdParams& esd,
                                   std::span<const PriceTriple> prices) {
  if (prices.empty()) {
    throw ValidationError("cycle cost check needs at least one price slot");
  }
  CycleCostCheck check;
  check.bound = std::numeric_limits<double>::infinity();
  for (std::size_t t = 0; t < prices.size(); ++t) {
    const double half_gap = (prices[t].grid_sell() - prices[t].sfc_sell()) / 2.0;
    if (half_gap < check.bound) {
      check.bound = half_gap;
      check.argmin_slot = t;
    }
    if (!check.first_violation && !(esd.cycle_cost() < half_gap)) {
      check.first_violation = t;
    }
  }
  check.valid = !check.first_violation.has_value();
  return check;
}

double default_cycle_cost(std::span<const PriceTriple> prices) {
  if (prices.empty()) {
    throw ValidationError("cycle cost rule needs at least one price slot");
  }
  double bound = std::numeric_limits<double>::infinity();
  for (const auto& p : prices) {
    bound = std::min(bound, (p.grid_sell() - p.sfc_sell()) / 2.0);
  }
  const double alpha = bound - 1.0;
  if (alpha <= 0.0) {
    throw ValidationError(
        "price gap too small for the one-cent cycle cost rule");
  }
  return alpha;
}

}  // namespace sfc
