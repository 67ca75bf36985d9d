#include "sfc/slot_policy.hpp"

#include <algorithm>
#include <cmath>

#include "sfc/errors.hpp"
#include "sfc/virtual_cost.hpp"

namespace sfc {

namespace {

void require_soc_in_range(double soc_prev, const EsdParams& esd) {
  if (!(soc_prev >= esd.floor() && soc_prev <= esd.capacity())) {
    throw ValidationError("SoC outside [floor, capacity]");
  }
}

void require_positive(double a) {
  if (!(a > 0.0)) {
    throw ValidationError("virtual-cost coefficient must be positive");
  }
}

// Upper clamp first, then the lower one, so a negative stationary point
// always ends at zero.
ClampedOptimum clamp_to(double raw, double upper) {
  double value = raw > upper ? upper : raw;
  if (value < 0.0) value = 0.0;
  return {raw, value};
}

ClampedOptimum optimal_charge(double soc_prev, double a, double forgone_price,
                              double available, const EsdParams& esd) {
  require_soc_in_range(soc_prev, esd);
  require_positive(a);
  const double nu = esd.efficiency();
  const double target = std::sqrt(nu * a / (esd.cycle_cost() + forgone_price));
  const double raw = (target - soc_prev) / nu;
  const double upper = std::min(charge_limit(soc_prev, esd), std::max(available, 0.0));
  return clamp_to(raw, upper);
}

}  // namespace

CaseLabel classify_case(double generation, double sfc_demand,
                        double household_demand) {
  if (sfc_demand > generation) return CaseLabel::case1;
  if (generation > sfc_demand + household_demand) return CaseLabel::case3;
  return CaseLabel::case2;
}

double discharge_limit(double soc_prev, const EsdParams& esd) {
  return std::min(esd.rate_limit(), soc_prev - esd.floor());
}

double charge_limit(double soc_prev, const EsdParams& esd) {
  return std::min(esd.rate_limit(), esd.capacity() - soc_prev);
}

ClampedOptimum optimal_discharge_case1(double soc_prev, double a,
                                       double grid_sell_price,
                                       const EsdParams& esd, double deficit) {
  if (!(grid_sell_price > esd.cycle_cost())) {
    throw ValidationError("grid price must exceed the battery cycle cost");
  }
  require_soc_in_range(soc_prev, esd);
  require_positive(a);
  const double nu = esd.efficiency();
  const double target = std::sqrt(nu * a / (grid_sell_price - esd.cycle_cost()));
  const double raw = (soc_prev - target) / nu;
  const double upper =
      std::min(discharge_limit(soc_prev, esd), std::max(deficit, 0.0));
  return clamp_to(raw, upper);
}

ClampedOptimum optimal_charge_case2(double soc_prev, double a,
                                    double sfc_sell_price, double surplus,
                                    const EsdParams& esd) {
  return optimal_charge(soc_prev, a, sfc_sell_price, surplus, esd);
}

ClampedOptimum optimal_charge_case3(double soc_prev, double a,
                                    double grid_buy_price,
                                    double surplus_after_users,
                                    const EsdParams& esd) {
  return optimal_charge(soc_prev, a, grid_buy_price, surplus_after_users, esd);
}

CostBreakdown cost_case1(const SlotContext& ctx, double discharge, double a,
                         double soc_prev, const EsdParams& esd) {
  const double soc_end = soc_prev - esd.efficiency() * discharge;
  if (!(soc_end > 0.0)) {
    throw SingularityError("case-1 discharge empties the battery");
  }
  const double buy =
      ctx.prices.grid_sell() * std::max(0.0, ctx.deficit() - discharge);
  return CostBreakdown::make(CaseLabel::case1, buy, 0.0, 0.0,
                             esd.cycle_cost() * discharge,
                             virtual_cost(a, soc_end));
}

CostBreakdown cost_case2(const SlotContext& ctx, double charge, double a,
                         double soc_prev, const EsdParams& esd) {
  const double soc_end = soc_prev + esd.efficiency() * charge;
  const double users = -ctx.prices.sfc_sell() * (ctx.surplus() - charge);
  return CostBreakdown::make(CaseLabel::case2, 0.0, users, 0.0,
                             esd.cycle_cost() * charge,
                             virtual_cost(a, soc_end));
}

CostBreakdown cost_case3(const SlotContext& ctx, double charge, double a,
                         double soc_prev, const EsdParams& esd) {
  const double soc_end = soc_prev + esd.efficiency() * charge;
  const double users = -ctx.prices.sfc_sell() * ctx.household_demand;
  const double grid =
      -ctx.prices.grid_buy() * (ctx.surplus_after_users() - charge);
  return CostBreakdown::make(CaseLabel::case3, 0.0, users, grid,
                             esd.cycle_cost() * charge,
                             virtual_cost(a, soc_end));
}

SlotDecision settle_trades(CaseLabel label, const SlotContext& ctx,
                           double charge, double discharge) {
  if (charge < 0.0 || discharge < 0.0) {
    throw InvariantViolation("battery flows must be nonnegative");
  }
  if (charge > 0.0 && discharge > 0.0) {
    throw InvariantViolation("battery cannot charge and discharge in one slot");
  }
  SlotDecision d;
  d.charge = charge;
  d.discharge = discharge;
  switch (label) {
    case CaseLabel::case1:
      if (charge > 0.0) {
        throw InvariantViolation("case 1 never charges the battery");
      }
      d.buy_grid = ctx.deficit() - discharge;
      break;
    case CaseLabel::case2:
      if (discharge > 0.0) {
        throw InvariantViolation("case 2 never discharges the battery");
      }
      d.sell_users = ctx.surplus() - charge;
      break;
    case CaseLabel::case3:
      if (discharge > 0.0) {
        throw InvariantViolation("case 3 never discharges the battery");
      }
      d.sell_users = ctx.household_demand;
      d.sell_grid = ctx.surplus_after_users() - charge;
      break;
  }
  if (d.buy_grid < 0.0 || d.sell_grid < 0.0 || d.sell_users < 0.0) {
    throw InvariantViolation("settled trade came out negative");
  }
  return d;
}

SlotPlan decide_slot(const SlotContext& ctx, double a, double soc_prev,
                     const EsdParams& esd) {
  SlotPlan plan;
  plan.label = classify_case(ctx.generation, ctx.sfc_demand,
                             ctx.household_demand);
  switch (plan.label) {
    case CaseLabel::case1:
      plan.battery = optimal_discharge_case1(soc_prev, a, ctx.prices.grid_sell(),
                                             esd, ctx.deficit());
      plan.cost = cost_case1(ctx, plan.battery.value, a, soc_prev, esd);
      plan.decision = settle_trades(plan.label, ctx, 0.0, plan.battery.value);
      break;
    case CaseLabel::case2:
      plan.battery = optimal_charge_case2(soc_prev, a, ctx.prices.sfc_sell(),
                                          ctx.surplus(), esd);
      plan.cost = cost_case2(ctx, plan.battery.value, a, soc_prev, esd);
      plan.decision = settle_trades(plan.label, ctx, plan.battery.value, 0.0);
      break;
    case CaseLabel::case3:
      plan.battery = optimal_charge_case3(soc_prev, a, ctx.prices.grid_buy(),
                                          ctx.surplus_after_users(), esd);
      plan.cost = cost_case3(ctx, plan.battery.value, a, soc_prev, esd);
      plan.decision = settle_trades(plan.label, ctx, plan.battery.value, 0.0);
      break;
  }
  return plan;
}

}  // namespace sfc
