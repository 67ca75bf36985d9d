#include "sfc/experiments.hpp"

#include <ostream>

#include "sfc/csv_io.hpp"
#include "sfc/errors.hpp"

namespace sfc {

const BaselineTrace& Comparison::baseline(BaselineKind kind) const {
  for (const auto& b : baselines) {
    if (b.kind == kind) return b;
  }
  throw InvariantViolation("comparison is missing a baseline");
}

Comparison run_comparison(const ScenarioConfig& config) {
  Comparison c;
  c.proposed = run_day(config);
  for (BaselineKind kind :
       {BaselineKind::fit, BaselineKind::modified, BaselineKind::grid_tie}) {
    c.baselines.push_back(run_baseline_day(kind, config));
  }
  return c;
}

std::vector<SweepPoint> run_panel_sweep(const ScenarioSpec& base,
                                        std::span<const int> panel_counts,
                                        std::span<const int> scenarios,
                                        std::span<const double> a_initials) {
  std::vector<SweepPoint> points;
  for (int scenario : scenarios) {
    if (scenario < 1) throw ValidationError("scenario numbers start at 1");
    for (double a_initial : a_initials) {
      for (int panels : panel_counts) {
        ScenarioSpec spec = base;
        spec.demand.household_scale = base.demand.household_scale * scenario;
        spec.panel_count = panels;
        spec.a_initial = a_initial;
        const ScenarioConfig config = build_scenario(spec);
        const DayTrace proposed = run_day(config);
        const BaselineTrace grid_tie =
            run_baseline_day(BaselineKind::grid_tie, config);

        SweepPoint p;
        p.scenario = scenario;
        p.panel_count = panels;
        p.a_initial = a_initial;
        p.proposed_total = proposed.total_cost;
        p.grid_tie_total = grid_tie.total_cost;
        p.average_savings =
            (grid_tie.total_cost - proposed.total_cost) / config.slot_count;
        p.savings_pct = percent_savings(grid_tie.total_cost, proposed.total_cost);
        points.push_back(p);
      }
    }
  }
  return points;
}

void write_sweep_csv(std::span<const SweepPoint> points, std::ostream& out) {
  out << "scenario,panel_count,a_initial,proposed_total_cents,"
         "grid_tie_total_cents,average_savings_cents,savings_pct\n";
  for (const auto& p : points) {
    out << p.scenario << ',' << p.panel_count << ','
        << format_number(p.a_initial) << ',' << format_fixed(p.proposed_total, 2)
        << ',' << format_fixed(p.grid_tie_total, 2) << ','
        << format_fixed(p.average_savings, 2) << ','
        << format_fixed(p.savings_pct, 2) << '\n';
  }
}

}  // namespace sfc
