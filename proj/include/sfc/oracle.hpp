#pragma once

// Exhaustive grid search over a slot's single battery decision.
//
// Deliberately shares nothing with slot_policy: the cost is the general
// per-slot objective (buy + household and grid sales + cycle + virtual
// cost, with the positive-part and min() terms left in), not the
// case-reduced forms.

#include <cstddef>
#include <utility>

#include "sfc/domain.hpp"

namespace sfc {

struct SlotProblem {
  double generation = 0.0;
  double sfc_demand = 0.0;
  double household_demand = 0.0;
  PriceTriple prices;
  EsdParams esd;
  double soc_prev = 0.0;
  double a = 0.0;
};

/// Total slot cost for an arbitrary (discharge, charge) pair.
double general_slot_cost(const SlotProblem& problem, double discharge,
                         double charge);

/// [0, hi] for the case's free variable: discharge in case 1, charge
/// otherwise. Charging is limited to the solar surplus the case leaves.
std::pair<double, double> feasible_interval(CaseLabel label,
                                            const SlotProblem& problem);

struct OracleResult {
  double best_decision = 0.0;
  double best_cost = 0.0;
  double grid_resolution = 0.0;
  std::size_t evaluations = 0;
};

enum class Traversal { forward, reverse };

/// Evaluates every grid point k*resolution in the feasible interval, the
/// upper endpoint and any kink of the cost inside it; ties go to the
/// smaller decision.
OracleResult brute_force_slot(CaseLabel label, const SlotProblem& problem,
                              double resolution,
                              Traversal order = Traversal::forward);

}  // namespace sfc
