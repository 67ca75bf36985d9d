#include "sfc/scheduler.hpp"

#include <cmath>
#include <string>

#include "sfc/errors.hpp"

namespace sfc {

namespace {

constexpr double kSocSnap = 1e-9;

}  // namespace

void validate_scenario(const ScenarioConfig& config) {
  if (config.slot_count < 3) {
    throw ValidationError("scenario needs at least 3 slots");
  }
  if (!(config.slot_duration > 0.0)) {
    throw ValidationError("slot duration must be positive");
  }
  if (config.inputs.size() != static_cast<std::size_t>(config.slot_count)) {
    throw ValidationError("expected " + std::to_string(config.slot_count) +
                          " slot inputs, got " +
                          std::to_string(config.inputs.size()));
  }
  if (!(config.initial_soc >= config.esd.floor() &&
        config.initial_soc <= config.esd.capacity())) {
    throw ValidationError("initial SoC outside [floor, capacity]");
  }
  std::vector<PriceTriple> prices;
  prices.reserve(config.inputs.size());
  for (std::size_t i = 0; i < config.inputs.size(); ++i) {
    const auto& in = config.inputs[i];
    if (in.index != static_cast<int>(i) + 1) {
      throw ValidationError("slot inputs must be numbered 1.." +
                            std::to_string(config.slot_count));
    }
    validate(in);
    prices.push_back(in.prices);
  }
  const auto check = validate_cycle_cost(config.esd, prices);
  if (!check.valid) {
    throw ValidationError(
        "cycle cost " + std::to_string(config.esd.cycle_cost()) +
        " violates the bound " + std::to_string(check.bound) + " at slot " +
        std::to_string(*check.first_violation + 1));
  }
}

double soc_update(double soc_prev, double charge, double discharge,
                  const EsdParams& esd) {
  if (charge > 0.0 && discharge > 0.0) {
    throw InvariantViolation("simultaneous charge and discharge");
  }
  double soc = soc_prev + esd.efficiency() * (charge - discharge);
  if (soc < esd.floor()) {
    if (soc < esd.floor() - kSocSnap) {
      throw InvariantViolation("SoC fell below the floor");
    }
    soc = esd.floor();
  }
  if (soc > esd.capacity()) {
    if (soc > esd.capacity() + kSocSnap) {
      throw InvariantViolation("SoC exceeded capacity");
    }
    soc = esd.capacity();
  }
  return soc;
}

StepResult step(const EsdState& soc, const VcState& vc, const SlotInput& input,
                const ScenarioConfig& config) {
  validate(input);
  VcState state = vc;
  if (input.index >= 3) {
    state.a = update_coefficient(vc, config.vc);
  }

  SlotContext ctx;
  ctx.generation =
      solar_generation(input.irradiance, config.array, config.slot_duration);
  ctx.sfc_demand = input.sfc_demand;
  ctx.household_demand = input.household_demand;
  ctx.prices = input.prices;

  const SlotPlan plan = decide_slot(ctx, state.a, soc.soc, config.esd);

  StepResult out;
  out.record.input = input;
  out.record.generation = ctx.generation;
  out.record.battery = plan.battery;
  out.record.decision = plan.decision;
  out.record.cost = plan.cost;
  out.record.soc_before = soc.soc;
  out.record.soc_after = soc_update(soc.soc, plan.decision.charge,
                                    plan.decision.discharge, config.esd);
  out.record.a_after = state.a;
  out.soc = EsdState{out.record.soc_after};
  out.vc = record_purchase(state, plan.decision.buy_grid);
  return out;
}

DayTrace run_day(const ScenarioConfig& config) {
  validate_scenario(config);
  DayTrace trace;
  trace.records.reserve(config.inputs.size());
  EsdState soc{config.initial_soc};
  VcState vc = VcState::initial(config.vc);
  for (const auto& input : config.inputs) {
    StepResult r = step(soc, vc, input, config);
    trace.total_cost += r.record.cost.total;
    trace.records.push_back(r.record);
    soc = r.soc;
    vc = r.vc;
  }
  trace.average_cost = trace.total_cost / static_cast<double>(config.slot_count);
  return trace;
}

}  // namespace sfc
