#include "sfc/virtual_cost.hpp"

#include <algorithm>
#include <cmath>

#include "sfc/errors.hpp"

namespace sfc {

VcParams::VcParams(double a_initial, double step, double a_floor)
    : a_initial_(a_initial), step_(step), a_floor_(a_floor) {
  if (!std::isfinite(a_initial) || a_initial <= 0.0) {
    throw ValidationError("initial virtual-cost coefficient must be positive");
  }
  if (!std::isfinite(step) || step <= 0.0) {
    throw ValidationError("virtual-cost step must be positive");
  }
  if (!std::isfinite(a_floor) || a_floor <= 0.0) {
    throw ValidationError("virtual-cost floor must be positive");
  }
}

VcParams VcParams::with_a_initial(double a_initial) const {
  return VcParams(a_initial, step_, a_floor_);
}

VcState VcState::initial(const VcParams& params) {
  return VcState{params.a_initial(), 0.0, 0.0};
}

double virtual_cost(double a, double soc_end) {
  if (!(soc_end > 0.0)) {
    throw SingularityError("virtual cost evaluated at non-positive SoC");
  }
  if (!(a > 0.0)) {
    throw ValidationError("virtual-cost coefficient must be positive");
  }
  return a / soc_end;
}

double update_coefficient(const VcState& state, const VcParams& params) {
  const double next =
      state.a + params.step() * (state.prev_purchase - state.prev_prev_purchase);
  return std::max(params.a_floor(), next);
}

VcState record_purchase(const VcState& state, double purchase) {
  if (!(purchase >= 0.0) || !std::isfinite(purchase)) {
    throw ValidationError("grid purchase must be nonnegative");
  }
  return VcState{state.a, purchase, state.prev_purchase};
}

}  // namespace sfc
