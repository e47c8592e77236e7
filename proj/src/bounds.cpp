#include "spinctrl/bounds.hpp"

#include <cmath>
#include <numbers>

namespace spinctrl {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}  // namespace

double bound_apm3(const PhysicalParams& params) {
  return 4.0 * kPi / params.omega1_max + 7.5 * kPi / params.omega0;
}

double bound_apm1(const PhysicalParams& params) {
  return 4.0 * kPi / params.omega1_max + 6.0 * kPi / params.omega0;
}

double bound_fapm(const PhysicalParams& params) {
  return kPi / params.min_rate() + 8.0 * kPi / params.omega0;
}

// Azimuth-free index estimates: drop the phase-alignment terms, whose
// contribution to the transition time is bounded by a few carrier periods.

ApproxEstimate approx_apm1(const PhysicalParams& params, const BlochAngles& init,
                           const BlochAngles& target) {
  params.validate();
  const double gap = target.theta - init.theta;
  const double sweep = gap >= 0.0 ? gap : 4.0 * kPi + gap;
  ApproxEstimate est;
  est.k_prime = ceil_pos_int(sweep * params.omega0 / (kTwoPi * params.omega1_max));
  est.time_estimate = kTwoPi * static_cast<double>(est.k_prime) / params.omega0;
  est.error_bound = 4.0 * kPi / params.omega0;
  return est;
}

ApproxEstimate approx_fapm1(const PhysicalParams& params, const BlochAngles& init,
                            const BlochAngles& target) {
  params.validate();
  ApproxEstimate est;
  est.k_prime = ceil_pos_int(fapm_envelope_bound(params, init, target));
  est.time_estimate = kTwoPi * static_cast<double>(est.k_prime) / params.omega0;
  est.error_bound = 6.0 * kPi / params.omega0;
  return est;
}

}  // namespace spinctrl
