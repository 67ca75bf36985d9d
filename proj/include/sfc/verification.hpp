#pragma once

// Randomized cross-check of the closed-form slot policy against the
// brute-force oracle.

#include <cstdint>
#include <vector>

#include "sfc/oracle.hpp"
#include "sfc/random.hpp"

namespace sfc {

/// Draws a slot that falls in the requested case, with prices, battery and
/// virtual-cost parameters from the ranges a 28-slot community day produces.
SlotProblem random_problem(CaseLabel label, Rng& rng);

struct CaseVerification {
  CaseLabel label = CaseLabel::case1;
  int instances = 0;
  int failures = 0;
  double max_abs_gap = 0.0;  // |closed-form cost - oracle cost|, cents
  int clamped = 0;           // instances whose optimum hit a bound
};

struct VerifyReport {
  double resolution = 1e-3;
  double tolerance = 1e-3;
  std::uint64_t seed = 0;
  std::vector<CaseVerification> cases;

  int total_failures() const;
};

VerifyReport verify_closed_forms(int instances_per_case, double resolution,
                                 std::uint64_t seed, double tolerance = 1e-3);

}  // namespace sfc
