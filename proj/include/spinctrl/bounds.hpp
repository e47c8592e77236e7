#pragma once

#include "spinctrl/synthesis.hpp"

namespace spinctrl {

// Closed-form transfer-time estimate, valid in the strong-field regime
// omega0 >> omega1_max. Depends on the polar angles only.
struct ApproxEstimate {
  std::int64_t k_prime = 1;
  double time_estimate = 0.0;  // seconds
  double error_bound = 0.0;    // seconds, guarantee on |exact - estimate|
};

// Worst-case transition times over all state pairs.
double bound_apm3(const PhysicalParams& params);  // 4pi/omega1_max + 7.5pi/omega0
double bound_apm1(const PhysicalParams& params);  // 4pi/omega1_max + 6pi/omega0
double bound_fapm(const PhysicalParams& params);  // pi/min_rate + 8pi/omega0

ApproxEstimate approx_apm1(const PhysicalParams& params, const BlochAngles& init,
                           const BlochAngles& target);
ApproxEstimate approx_fapm1(const PhysicalParams& params, const BlochAngles& init,
                            const BlochAngles& target);

}  // namespace spinctrl
