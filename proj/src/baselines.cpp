#include "sfc/baselines.hpp"

#include <algorithm>

#include "sfc/errors.hpp"

namespace sfc {

std::string_view to_string(BaselineKind kind) noexcept {
  switch (kind) {
    case BaselineKind::fit:
      return "fit";
    case BaselineKind::modified:
      return "modified";
    case BaselineKind::grid_tie:
      return "grid_tie";
  }
  return "fit";
}

BaselineSlot baseline_slot(BaselineKind kind, const SlotInput& input,
                           double generation) {
  validate(input);
  if (!(generation >= 0.0)) {
    throw ValidationError("generation must be nonnegative");
  }
  BaselineSlot out;
  const auto& p = input.prices;
  if (input.sfc_demand > generation) {
    out.decision.buy_grid = input.sfc_demand - generation;
    out.cost = p.grid_sell() * out.decision.buy_grid;
    return out;
  }
  const double surplus = generation - input.sfc_demand;
  if (kind == BaselineKind::modified) {
    out.decision.sell_users = std::min(surplus, input.household_demand);
    out.decision.sell_grid = surplus - out.decision.sell_users;
  } else {
    out.decision.sell_grid = surplus;
  }
  out.cost = -p.sfc_sell() * out.decision.sell_users -
             p.grid_buy() * out.decision.sell_grid;
  return out;
}

BaselineTrace run_baseline_day(BaselineKind kind, const ScenarioConfig& config) {
  validate_scenario(config);
  BaselineTrace trace;
  trace.kind = kind;
  trace.slots.reserve(config.inputs.size());
  for (const auto& input : config.inputs) {
    const double gen =
        solar_generation(input.irradiance, config.array, config.slot_duration);
    trace.slots.push_back(baseline_slot(kind, input, gen));
    trace.total_cost += trace.slots.back().cost;
  }
  trace.average_cost =
      trace.total_cost / static_cast<double>(config.slot_count);
  return trace;
}

double percent_savings(double baseline_cost, double proposed_cost) {
  if (baseline_cost == 0.0) {
    throw UndefinedMetricError("percent savings undefined for a zero baseline");
  }
  return (baseline_cost - proposed_cost) / baseline_cost * 100.0;
}

}  // namespace sfc
