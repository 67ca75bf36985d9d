#pragma once

namespace sfc {

/// Tuning of the adaptive virtual-cost coefficient.
class VcParams {
 public:
  /// a_initial in cents*kWh, step in cents*kWh per kWh of purchase change,
  /// a_floor is the positive lower clamp on the coefficient.
  explicit VcParams(double a_initial = 250.0, double step = 1.0,
                    double a_floor = 1.0);

  double a_initial() const noexcept { return a_initial_; }
  double step() const noexcept { return step_; }
  double a_floor() const noexcept { return a_floor_; }

  VcParams with_a_initial(double a_initial) const;

 private:
  double a_initial_;
  double step_;
  double a_floor_;
};

/// Coefficient a(t) together with the two most recent grid purchases.
struct VcState {
  double a = 250.0;
  double prev_purchase = 0.0;       // e_gs(t-1)
  double prev_prev_purchase = 0.0;  // e_gs(t-2)

  /// a = a_initial, empty purchase history.
  static VcState initial(const VcParams& params);
};

/// a / soc_end. Decreasing in the SoC left at the end of the slot.
double virtual_cost(double a, double soc_end);

/// max(a_floor, a + step * (prev - prev_prev)).
double update_coefficient(const VcState& state, const VcParams& params);

/// Shifts the purchase history by one slot; a is untouched.
VcState record_purchase(const VcState& state, double purchase);

}  // namespace sfc
