#include "sfc/verification.hpp"

#include <algorithm>
#include <cmath>

#include "sfc/errors.hpp"
#include "sfc/slot_policy.hpp"

namespace sfc {

namespace {

constexpr std::uint32_t kVerifyStream = 3;

}  // namespace

SlotProblem random_problem(CaseLabel label, Rng& rng) {
  const double grid_sell = rng.uniform(10.0, 80.0);
  const PriceTriple prices(grid_sell, 0.6 * grid_sell, 0.3 * grid_sell);
  const double alpha = rng.uniform(0.05, 0.2 * grid_sell * 0.999);
  const double capacity = rng.uniform(5.0, 20.0);
  const double floor = capacity * rng.uniform(0.03, 0.1);
  const EsdParams esd(capacity, floor, rng.uniform(0.7, 1.0),
                      rng.uniform(0.5, 8.0), alpha);
  const double soc = rng.uniform(floor, capacity);
  const double a = rng.uniform(50.0, 400.0);
  const double users = rng.uniform(10.0, 25.0);

  double gen = 0.0;
  double req = 0.0;
  switch (label) {
    case CaseLabel::case1:
      gen = rng.uniform(0.0, 20.0);
      req = gen + rng.uniform(0.01, 20.0);
      break;
    case CaseLabel::case2:
      req = rng.uniform(5.0, 20.0);
      gen = req + rng.uniform(0.0, users);
      break;
    case CaseLabel::case3:
      req = rng.uniform(5.0, 20.0);
      gen = req + users + rng.uniform(0.01, 20.0);
      break;
  }
  return SlotProblem{gen, req, users, prices, esd, soc, a};
}

int VerifyReport::total_failures() const {
  int n = 0;
  for (const auto& c : cases) n += c.failures;
  return n;
}

VerifyReport verify_closed_forms(int instances_per_case, double resolution,
                                 std::uint64_t seed, double tolerance) {
  if (instances_per_case < 1) {
    throw ValidationError("need at least one verification instance");
  }
  VerifyReport report;
  report.resolution = resolution;
  report.tolerance = tolerance;
  report.seed = seed;
  Rng rng(seed, kVerifyStream);
  for (CaseLabel label :
       {CaseLabel::case1, CaseLabel::case2, CaseLabel::case3}) {
    CaseVerification cv;
    cv.label = label;
    for (int i = 0; i < instances_per_case; ++i) {
      const SlotProblem pb = random_problem(label, rng);
      const SlotContext ctx{pb.generation, pb.sfc_demand, pb.household_demand,
                            pb.prices};
      const SlotPlan plan = decide_slot(ctx, pb.a, pb.soc_prev, pb.esd);
      const OracleResult oracle = brute_force_slot(label, pb, resolution);
      const double gap = std::abs(plan.cost.total - oracle.best_cost);
      ++cv.instances;
      if (plan.battery.clamped()) ++cv.clamped;
      cv.max_abs_gap = std::max(cv.max_abs_gap, gap);
      if (plan.label != label || !(gap <= tolerance)) ++cv.failures;
    }
    report.cases.push_back(cv);
  }
  return report;
}

}  // namespace sfc
