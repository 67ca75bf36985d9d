#pragma once

// Multi-run orchestration: scheme comparison and the panel-count sweep.

#include <iosfwd>
#include <span>
#include <vector>

#include "sfc/baselines.hpp"
#include "sfc/scenario.hpp"
#include "sfc/scheduler.hpp"

namespace sfc {

struct Comparison {
  DayTrace proposed;
  std::vector<BaselineTrace> baselines;  // fit, modified, grid_tie

  const BaselineTrace& baseline(BaselineKind kind) const;
};

Comparison run_comparison(const ScenarioConfig& config);

struct SweepPoint {
  int scenario = 1;  // household demand multiplier over the base spec
  int panel_count = 0;
  double a_initial = 0.0;
  double proposed_total = 0.0;
  double grid_tie_total = 0.0;
  double average_savings = 0.0;  // cents per slot against grid-tie
  double savings_pct = 0.0;
};

/// Every (scenario, a_initial, panel_count) combination on the base spec.
/// All points reuse the base seed, so they see the same random draws.
std::vector<SweepPoint> run_panel_sweep(const ScenarioSpec& base,
                                        std::span<const int> panel_counts,
                                        std::span<const int> scenarios,
                                        std::span<const double> a_initials);

void write_sweep_csv(std::span<const SweepPoint> points, std::ostream& out);

}  // namespace sfc
