#pragma once

// Storage-free comparison schemes.

#include <string_view>
#include <vector>

#include "sfc/domain.hpp"
#include "sfc/scheduler.hpp"

namespace sfc {

/// fit and grid_tie trade surplus and deficit with the grid only; modified
/// sells surplus to households first. None of them uses the battery or a
/// virtual cost.
enum class BaselineKind { fit, modified, grid_tie };

std::string_view to_string(BaselineKind kind) noexcept;

struct BaselineSlot {
  SlotDecision decision;
  double cost = 0.0;  // cents
};

BaselineSlot baseline_slot(BaselineKind kind, const SlotInput& input,
                           double generation);

struct BaselineTrace {
  BaselineKind kind = BaselineKind::fit;
  std::vector<BaselineSlot> slots;
  double total_cost = 0.0;
  double average_cost = 0.0;
};

BaselineTrace run_baseline_day(BaselineKind kind, const ScenarioConfig& config);

/// (baseline - proposed) / baseline * 100.
double percent_savings(double baseline_cost, double proposed_cost);

}  // namespace sfc
