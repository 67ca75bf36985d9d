#include <doctest.h>

#include "sfc/errors.hpp"
#include "sfc/random.hpp"
#include "sfc/virtual_cost.hpp"

using namespace sfc;

TEST_CASE("virtual cost is a over the end-of-slot SoC") {
  CHECK(virtual_cost(250.0, 5.0) == 50.0);
  CHECK(virtual_cost(250.0, 10.0) == 25.0);
  CHECK(virtual_cost(100.0, 4.0) == 25.0);
  CHECK_THROWS_AS(virtual_cost(250.0, 0.0), SingularityError);
  CHECK_THROWS_AS(virtual_cost(250.0, -1.0), SingularityError);
}

TEST_CASE("coefficient follows the change in grid purchases") {
  CHECK(update_coefficient({250.0, 10.0, 4.0}, VcParams(250, 1, 1)) == 256.0);
  CHECK(update_coefficient({250.0, 5.0, 5.0}, VcParams(250, 7.5, 1)) == 250.0);
  CHECK(update_coefficient({250.0, 0.0, 6.0}, VcParams(250, 10, 1)) == 190.0);
}

TEST_CASE("coefficient is clamped at the floor") {
  CHECK(update_coefficient({20.0, 0.0, 30.0}, VcParams(250, 1, 1)) == 1.0);
  CHECK(update_coefficient({20.0, 0.0, 30.0}, VcParams(250, 1, 5)) == 5.0);
}

TEST_CASE("recording a purchase shifts the history") {
  const VcState s{250.0, 10.0, 4.0};
  const VcState r = record_purchase(s, 7.0);
  CHECK(r.prev_purchase == 7.0);
  CHECK(r.prev_prev_purchase == 10.0);
  CHECK(r.a == 250.0);

  const VcState z = record_purchase(s, 0.0);
  CHECK(z.prev_purchase == 0.0);
  CHECK(z.prev_prev_purchase == 10.0);

  const VcState two = record_purchase(record_purchase(s, 3.0), 8.0);
  CHECK(two.prev_purchase == 8.0);
  CHECK(two.prev_prev_purchase == 3.0);

  CHECK_THROWS_AS(record_purchase(s, -0.5), ValidationError);
}

TEST_CASE("initial state starts from a_initial with no purchases") {
  const VcState s = VcState::initial(VcParams(150.0));
  CHECK(s.a == 150.0);
  CHECK(s.prev_purchase == 0.0);
  CHECK(s.prev_prev_purchase == 0.0);
}

TEST_CASE("parameters are validated") {
  CHECK_THROWS_AS(VcParams(0.0), ValidationError);
  CHECK_THROWS_AS(VcParams(250.0, 0.0), ValidationError);
  CHECK_THROWS_AS(VcParams(250.0, 1.0, 0.0), ValidationError);
}

TEST_CASE("property: update is monotone in the step and respects the floor") {
  Rng rng(11, 0);
  for (int i = 0; i < 2000; ++i) {
    const VcState s{rng.uniform(1.0, 500.0), rng.uniform(0.0, 30.0),
                    rng.uniform(0.0, 30.0)};
    const double mu_lo = rng.uniform(0.01, 5.0);
    const double mu_hi = mu_lo + rng.uniform(0.01, 5.0);
    const double lo = update_coefficient(s, VcParams(250, mu_lo, 1));
    const double hi = update_coefficient(s, VcParams(250, mu_hi, 1));
    const double diff = s.prev_purchase - s.prev_prev_purchase;
    if (diff > 0) CHECK(hi >= lo);
    if (diff < 0) CHECK(hi <= lo);
    CHECK(lo >= 1.0);
    CHECK(hi >= 1.0);

    const double soc = rng.uniform(0.05, 20.0);
    const double v = virtual_cost(hi, soc);
    CHECK(v > 0.0);
    CHECK(virtual_cost(hi, soc * 1.5) < v);
    CHECK(virtual_cost(hi * 1.5, soc) > v);
  }
}
