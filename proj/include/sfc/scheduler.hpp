#pragma once

// Day-long simulation: threads SoC and the virtual-cost state through the
// per-slot policy.

#include <cstdint>
#include <vector>

#include "sfc/domain.hpp"
#include "sfc/slot_policy.hpp"
#include "sfc/virtual_cost.hpp"

namespace sfc {

struct ScenarioConfig {
  int slot_count = 28;
  double slot_duration = 0.5;  // hours
  SolarArrayParams array;
  EsdParams esd;
  VcParams vc;
  double initial_soc = 3.0;
  std::vector<SlotInput> inputs;  // one per slot, index = 1..slot_count
  std::uint64_t rng_seed = 0;
};

/// Throws ValidationError if the scenario cannot be simulated: fewer than
/// three slots, mismatched series, bad SoC, or a cycle cost above the bound.
void validate_scenario(const ScenarioConfig& config);

struct SlotRecord {
  SlotInput input;
  double generation = 0.0;
  ClampedOptimum battery;  // pre- and post-clamp battery move
  SlotDecision decision;
  CostBreakdown cost;
  double soc_before = 0.0;
  double soc_after = 0.0;
  double a_after = 0.0;  // coefficient in force during the slot
};

struct DayTrace {
  std::vector<SlotRecord> records;
  double total_cost = 0.0;
  double average_cost = 0.0;  // per slot
};

/// soc_prev + efficiency * (charge - discharge). Results within 1e-9 kWh
/// of a bound are snapped onto it; anything further out throws
/// InvariantViolation.
double soc_update(double soc_prev, double charge, double discharge,
                  const EsdParams& esd);

struct StepResult {
  SlotRecord record;
  EsdState soc;
  VcState vc;
};

/// One slot of the controller loop. The coefficient is adapted only from
/// slot 3 on, once two purchases are on record.
StepResult step(const EsdState& soc, const VcState& vc, const SlotInput& input,
                const ScenarioConfig& config);

DayTrace run_day(const ScenarioConfig& config);

}  // namespace sfc
