#include "sfc/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "sfc/errors.hpp"

namespace sfc {

double general_slot_cost(const SlotProblem& pb, double discharge,
                         double charge) {
  const auto& p = pb.prices;
  const double e_req = pb.sfc_demand;
  const double e_gen = pb.generation;
  const double e_users = pb.household_demand;

  const double j_buy = p.grid_sell() * std::max(0.0, e_req - (e_gen + discharge));
  const double j_user =
      -p.sfc_sell() * std::min(std::max(0.0, e_gen - (e_req + charge)), e_users);
  const double j_grid =
      -p.grid_buy() * std::max(0.0, e_gen - e_req - (e_users + charge));
  const double j_sd = pb.esd.cycle_cost() * std::max(discharge, charge);
  const double soc_end =
      pb.soc_prev + pb.esd.efficiency() * (charge - discharge);
  if (!(soc_end > 0.0)) {
    throw SingularityError("oracle evaluated an empty battery");
  }
  return j_buy + j_user + j_grid + j_sd + pb.a / soc_end;
}

std::pair<double, double> feasible_interval(CaseLabel label,
                                            const SlotProblem& pb) {
  const auto& esd = pb.esd;
  double hi = 0.0;
  switch (label) {
    case CaseLabel::case1:
      hi = std::min(esd.rate_limit(), pb.soc_prev - esd.floor());
      break;
    case CaseLabel::case2:
      hi = std::min({esd.rate_limit(), esd.capacity() - pb.soc_prev,
                     pb.generation - pb.sfc_demand});
      break;
    case CaseLabel::case3:
      hi = std::min({esd.rate_limit(), esd.capacity() - pb.soc_prev,
                     pb.generation - pb.sfc_demand - pb.household_demand});
      break;
  }
  return {0.0, std::max(0.0, hi)};
}

namespace {

std::vector<double> cost_kinks(CaseLabel label, const SlotProblem& pb) {
  const double net = pb.generation - pb.sfc_demand;
  if (label == CaseLabel::case1) return {-net};
  return {net, net - pb.household_demand};
}

}  // namespace

OracleResult brute_force_slot(CaseLabel label, const SlotProblem& problem,
                              double resolution, Traversal order) {
  if (!(resolution > 0.0)) {
    throw ValidationError("oracle resolution must be positive");
  }
  const auto [lo, hi] = feasible_interval(label, problem);

  std::vector<double> grid;
  const auto steps = static_cast<std::size_t>(std::floor((hi - lo) / resolution));
  grid.reserve(steps + 2);
  for (std::size_t k = 0; k <= steps; ++k) {
    grid.push_back(lo + static_cast<double>(k) * resolution);
  }
  if (grid.back() < hi) grid.push_back(hi);
  // Kinks of the positive-part terms are where a piecewise optimum can sit
  // between grid points.
  for (double kink : cost_kinks(label, problem)) {
    if (kink > lo && kink < hi) grid.push_back(kink);
  }
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
  if (order == Traversal::reverse) std::reverse(grid.begin(), grid.end());

  OracleResult best;
  best.grid_resolution = resolution;
  bool first = true;
  for (double x : grid) {
    const double cost = label == CaseLabel::case1
                            ? general_slot_cost(problem, x, 0.0)
                            : general_slot_cost(problem, 0.0, x);
    ++best.evaluations;
    if (first || cost < best.best_cost ||
        (cost == best.best_cost && x < best.best_decision)) {
      best.best_cost = cost;
      best.best_decision = x;
      first = false;
    }
  }
  return best;
}

}  // namespace sfc
