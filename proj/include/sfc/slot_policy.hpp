#pragma once

// Per-slot dispatch: case classification, closed-form battery optimum,
// trade settlement and the case-reduced cost functions.

#include <limits>

#include "sfc/domain.hpp"

namespace sfc {

/// What the controller knows when deciding one slot.
struct SlotContext {
  double generation = 0.0;
  double sfc_demand = 0.0;
  double household_demand = 0.0;
  PriceTriple prices{3.0, 2.0, 1.0};

  double deficit() const noexcept { return sfc_demand - generation; }
  double surplus() const noexcept { return generation - sfc_demand; }
  double surplus_after_users() const noexcept {
    return generation - sfc_demand - household_demand;
  }
};

/// Deficit goes to case 1; a surplus that households can absorb in full
/// (boundary included) is case 2; anything larger is case 3.
CaseLabel classify_case(double generation, double sfc_demand,
                        double household_demand);

/// Unconstrained stationary point and its projection onto the feasible range.
struct ClampedOptimum {
  double raw = 0.0;
  double value = 0.0;

  bool clamped() const noexcept { return raw != value; }
};

double discharge_limit(double soc_prev, const EsdParams& esd);
double charge_limit(double soc_prev, const EsdParams& esd);

/// Case 1. Discharge that balances the marginal grid saving against the
/// cycle cost and the virtual cost of a lower SoC. deficit additionally caps
/// the discharge so no stored energy is dumped.
ClampedOptimum optimal_discharge_case1(
    double soc_prev, double a, double grid_sell_price, const EsdParams& esd,
    double deficit = std::numeric_limits<double>::infinity());

/// Case 2: charging forgoes household revenue at sfc_sell_price.
ClampedOptimum optimal_charge_case2(double soc_prev, double a,
                                    double sfc_sell_price, double surplus,
                                    const EsdParams& esd);

/// Case 3: charging forgoes feed-in revenue at grid_buy_price.
ClampedOptimum optimal_charge_case3(double soc_prev, double a,
                                    double grid_buy_price,
                                    double surplus_after_users,
                                    const EsdParams& esd);

CostBreakdown cost_case1(const SlotContext& ctx, double discharge, double a,
                         double soc_prev, const EsdParams& esd);
CostBreakdown cost_case2(const SlotContext& ctx, double charge, double a,
                         double soc_prev, const EsdParams& esd);
CostBreakdown cost_case3(const SlotContext& ctx, double charge, double a,
                         double soc_prev, const EsdParams& esd);

/// Fills in grid and household trades from the energy balance. Households
/// are credited with what the controller actually delivers to them.
SlotDecision settle_trades(CaseLabel label, const SlotContext& ctx,
                           double charge, double discharge);

struct SlotPlan {
  CaseLabel label = CaseLabel::case1;
  ClampedOptimum battery;  // discharge in case 1, charge otherwise
  SlotDecision decision;
  CostBreakdown cost;
};

/// Runs exactly one case branch for the slot.
SlotPlan decide_slot(const SlotContext& ctx, double a, double soc_prev,
                     const EsdParams& esd);

}  // namespace sfc
