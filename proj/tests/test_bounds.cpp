// Tests for the worst-case transition-time bounds, the azimuth-free time
// estimates and their error certificates, and the polar-angle sweep grid.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>
#include <vector>

#include "spinctrl/bounds.hpp"
#include "spinctrl/sweep.hpp"
#include "spinctrl/synthesis.hpp"

using namespace spinctrl;

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

const PhysicalParams kHydrogen{5.0e8, 5.0e4, 5.0e4, 5.0e4};
const PhysicalParams kMidScale{5.0e7, 5.0e4, 5.0e4, 5.0e4};
const PhysicalParams kDesk{1000.0, 100.0, 200.0, 200.0};

}  // namespace

TEST_CASE("worst-case bounds: reference values") {
  // Strong-field scale: the drive-cap term dominates, the carrier-period
  // corrections are down by omega1_max/omega0.
  CHECK(bound_apm3(kHydrogen) == doctest::Approx(2.512e-4).epsilon(1e-3));
  CHECK(bound_apm1(kHydrogen) == doctest::Approx(2.512e-4).epsilon(1e-3));
  CHECK(bound_apm3(kHydrogen) ==
        doctest::Approx(4.0 * kPi / 5.0e4 + 7.5 * kPi / 5.0e8).epsilon(1e-15));
  CHECK(bound_apm1(kHydrogen) ==
        doctest::Approx(4.0 * kPi / 5.0e4 + 6.0 * kPi / 5.0e8).epsilon(1e-15));
  CHECK(bound_fapm(kHydrogen) == doctest::Approx(6.28e-5).epsilon(2e-3));
  CHECK(bound_fapm(kMidScale) == doctest::Approx(6.28e-5).epsilon(1e-2));
  CHECK(bound_fapm(kHydrogen) ==
        doctest::Approx(kPi / 5.0e4 + 8.0 * kPi / 5.0e8).epsilon(1e-15));

  // Detuned single pulses are about four times faster in the worst case.
  const double ratio = bound_fapm(kHydrogen) / bound_apm1(kHydrogen);
  CHECK(ratio >= 0.24);
  CHECK(ratio <= 0.26);

  // Three-stage schedules pay 1.5 pi / omega0 more than the single pulse.
  CHECK(bound_apm1(kDesk) < bound_apm3(kDesk));
  CHECK(bound_apm3(kDesk) - bound_apm1(kDesk) ==
        doctest::Approx(1.5 * kPi / 1000.0).epsilon(1e-12));

  // Desk scale, by direct substitution.
  CHECK(bound_apm3(kDesk) ==
        doctest::Approx(4.0 * kPi / 100.0 + 7.5 * kPi / 1000.0).epsilon(1e-15));
  CHECK(bound_apm1(kDesk) ==
        doctest::Approx(4.0 * kPi / 100.0 + 6.0 * kPi / 1000.0).epsilon(1e-15));
  CHECK(bound_fapm(kDesk) ==
        doctest::Approx(kPi / 100.0 + 8.0 * kPi / 1000.0).epsilon(1e-15));

  // Drive cap equal to the precession rate collapses the resonant bound to
  // 11.5 carrier half-turns.
  const PhysicalParams saturated{1000.0, 1000.0, 999.0, 1000.0};
  CHECK(bound_apm3(saturated) == doctest::Approx(11.5 * kPi / 1000.0).epsilon(1e-15));

  // A narrow band, not the drive cap, limits the detuned family.
  const PhysicalParams narrow{1000.0, 100.0, 10.0, 2000.0};
  CHECK(bound_fapm(narrow) ==
        doctest::Approx(kPi / 10.0 + 8.0 * kPi / 1000.0).epsilon(1e-15));

  // Raising the drive cap can only shorten the worst case.
  const PhysicalParams strong{1000.0, 200.0, 200.0, 200.0};
  CHECK(bound_apm3(strong) < bound_apm3(kDesk));
  CHECK(bound_apm1(strong) < bound_apm1(kDesk));
  CHECK(bound_fapm(strong) < bound_fapm(kDesk));
}

TEST_CASE("time estimates: reference values and azimuth independence") {
  const BlochAngles fwd_a(kPi / 4, kPi / 4), fwd_b(3 * kPi / 4, 5 * kPi / 4);
  const BlochAngles rev_a(3 * kPi / 4, 5 * kPi / 4), rev_b(kPi / 4, kPi / 4);

  const ApproxEstimate e2f = approx_apm1(kHydrogen, fwd_a, fwd_b);
  CHECK(e2f.k_prime == 2500);
  CHECK(e2f.time_estimate == doctest::Approx(5000.0 * kPi / 5.0e8).epsilon(1e-12));
  CHECK(e2f.error_bound == doctest::Approx(4.0 * kPi / 5.0e8).epsilon(1e-15));

  const ApproxEstimate e2r = approx_apm1(kHydrogen, rev_a, rev_b);
  CHECK(e2r.k_prime == 17500);
  CHECK(e2r.time_estimate == doctest::Approx(35000.0 * kPi / 5.0e8).epsilon(1e-12));

  // Mirror-symmetric polar pair: the drive-amplitude term pins the index in
  // both directions.
  const ApproxEstimate e4f = approx_fapm1(kHydrogen, fwd_a, fwd_b);
  const ApproxEstimate e4r = approx_fapm1(kHydrogen, rev_a, rev_b);
  CHECK(e4f.k_prime == 5000);
  CHECK(e4r.k_prime == 5000);
  CHECK(e4f.time_estimate == doctest::Approx(10000.0 * kPi / 5.0e8).epsilon(1e-12));
  CHECK(e4f.error_bound == doctest::Approx(6.0 * kPi / 5.0e8).epsilon(1e-15));

  // Pole-to-pole identity: only the band term is active.
  const ApproxEstimate pole_desk =
      approx_fapm1(kDesk, BlochAngles(0.0, 0.0), BlochAngles(0.0, 0.0));
  CHECK(pole_desk.k_prime == 3);
  CHECK(pole_desk.time_estimate == doctest::Approx(6.0 * kPi / 1000.0).epsilon(1e-12));
  const ApproxEstimate pole_h =
      approx_fapm1(kHydrogen, BlochAngles(0.0, 0.0), BlochAngles(0.0, 0.0));
  CHECK(pole_h.k_prime == 5000);

  // Equal polar angles cost one carrier turn on the resonant side.
  const ApproxEstimate identity =
      approx_apm1(kDesk, BlochAngles(0.8, 2.2), BlochAngles(0.8, 5.5));
  CHECK(identity.k_prime == 1);
  CHECK(identity.time_estimate == doctest::Approx(kTwoPi / 1000.0).epsilon(1e-12));

  // Estimates never look at the azimuths.
  std::mt19937 rng(73);
  std::uniform_real_distribution<double> polar(0.0, kPi);
  std::uniform_real_distribution<double> azim(0.0, kTwoPi);
  for (int i = 0; i < 200; ++i) {
    const double th0 = polar(rng), thf = polar(rng);
    const ApproxEstimate a2 =
        approx_apm1(kDesk, BlochAngles(th0, azim(rng)), BlochAngles(thf, azim(rng)));
    const ApproxEstimate b2 =
        approx_apm1(kDesk, BlochAngles(th0, azim(rng)), BlochAngles(thf, azim(rng)));
    CHECK(a2.k_prime == b2.k_prime);
    CHECK(a2.time_estimate == b2.time_estimate);
    const ApproxEstimate a4 =
        approx_fapm1(kDesk, BlochAngles(th0, azim(rng)), BlochAngles(thf, azim(rng)));
    const ApproxEstimate b4 =
        approx_fapm1(kDesk, BlochAngles(th0, azim(rng)), BlochAngles(thf, azim(rng)));
    CHECK(a4.k_prime == b4.k_prime);
    CHECK(a4.time_estimate == b4.time_estimate);
  }

  // The detuned estimate needs a band to detune into.
  CHECK_THROWS_AS(approx_fapm1(PhysicalParams{1000.0, 100.0, 0.0, 0.0},
                               BlochAngles(0.1, 0.0), BlochAngles(0.2, 0.0)),
                  std::domain_error);
}

TEST_CASE("time estimates stay within their error certificates") {
  for (const PhysicalParams& p : {kHydrogen, kMidScale, kDesk}) {
    std::mt19937 rng(79);
    std::uniform_real_distribution<double> polar(0.0, kPi);
    std::uniform_real_distribution<double> azim(0.0, kTwoPi);
    for (int i = 0; i < 1000; ++i) {
      const BlochAngles init(polar(rng), azim(rng));
      const BlochAngles target(polar(rng), azim(rng));
      CAPTURE(init.theta);
      CAPTURE(init.phi);
      CAPTURE(target.theta);
      CAPTURE(target.phi);

      const ApproxEstimate e2 = approx_apm1(p, init, target);
      const double t2 = synth_apm1(p, init, target).transition_time;
      CHECK(std::abs(t2 - e2.time_estimate) <= e2.error_bound * (1.0 + 1e-12));

      const ApproxEstimate e4 = approx_fapm1(p, init, target);
      const double t4 = synth_fapm1(p, init, target).transition_time;
      CHECK(std::abs(t4 - e4.time_estimate) <= e4.error_bound * (1.0 + 1e-12));
    }
  }
}

TEST_CASE("estimated times order by sweep direction") {
  // Off the diagonal, raising the polar angle favors the resonant pulse's
  // index and lowering it favors the detuned pulse's, at any scale where the
  // precession rate exceeds the drive cap.
  for (const PhysicalParams& p : {kHydrogen, kDesk}) {
    const int n = 41;
    const double step = kPi / (n - 1);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        if (i == j) continue;
        const BlochAngles init(i * step, 0.0);
        const BlochAngles target(j * step, 0.0);
        const std::int64_t k2 = approx_apm1(p, init, target).k_prime;
        const std::int64_t k4 = approx_fapm1(p, init, target).k_prime;
        CAPTURE(i);
        CAPTURE(j);
        if (j > i) {
          CHECK(k2 <= k4);
        } else {
          CHECK(k2 > k4);
        }
      }
    }
  }
}

TEST_CASE("sweep grid layout and quantities") {
  CHECK_THROWS_AS(sweep_grid(kDesk, 1, SweepQuantity::Apm1), std::invalid_argument);
  CHECK_THROWS_AS(sweep_grid(kDesk, 0, SweepQuantity::Apm1), std::invalid_argument);
  CHECK_THROWS_AS(sweep_grid(PhysicalParams{0.0, 1.0, 1.0, 1.0}, 5,
                             SweepQuantity::Apm1),
                  std::invalid_argument);

  // 3x3 grid: theta0-major order, endpoints at 0 and pi.
  const auto rows = sweep_grid(kDesk, 3, SweepQuantity::Apm1);
  REQUIRE(rows.size() == 9);
  const double step = kPi / 2.0;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      const SweepRow& row = rows[static_cast<std::size_t>(i * 3 + j)];
      CHECK(row.theta0 == i * step);
      CHECK(row.thetaf == j * step);
      const double direct =
          approx_apm1(kDesk, BlochAngles(row.theta0, 0.0),
                      BlochAngles(row.thetaf, 0.0))
              .time_estimate;
      CHECK(row.value == direct);
    }
  }

  // The four quantities agree pointwise with their definitions.
  const int n = 11;
  const auto va = sweep_grid(kDesk, n, SweepQuantity::Apm1);
  const auto vf = sweep_grid(kDesk, n, SweepQuantity::Fapm1);
  const auto vd = sweep_grid(kDesk, n, SweepQuantity::Diff);
  const auto vm = sweep_grid(kDesk, n, SweepQuantity::HybridMin);
  REQUIRE(va.size() == vf.size());
  REQUIRE(va.size() == vd.size());
  REQUIRE(va.size() == vm.size());
  for (std::size_t idx = 0; idx < va.size(); ++idx) {
    CHECK(vd[idx].value == vf[idx].value - va[idx].value);
    CHECK(vm[idx].value == std::min(va[idx].value, vf[idx].value));
  }

  // Azimuth arguments must not change a single value.
  const auto base = sweep_grid(kHydrogen, 21, SweepQuantity::HybridMin, 0.0, 0.0);
  const auto moved = sweep_grid(kHydrogen, 21, SweepQuantity::HybridMin, 1.2, 4.5);
  REQUIRE(base.size() == moved.size());
  for (std::size_t idx = 0; idx < base.size(); ++idx) {
    CHECK(base[idx].value == moved[idx].value);
  }
}
