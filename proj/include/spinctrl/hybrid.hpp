#pragma once

#include "spinctrl/synthesis.hpp"

namespace spinctrl {

// True when the drive amplitude is the binding envelope constraint,
// min(omega1_max, omega_b_plus, omega_b_minus) = omega1_max. Both selectors
// below stay valid without it; only the shortcut's near-optimality rationale
// weakens, so callers should warn rather than fail.
bool drive_limited(const PhysicalParams& params);

// Runs both single-pulse syntheses and returns the faster one; ties go to the
// resonant variant (APM1).
SynthesisResult hybrid_select(const PhysicalParams& params, const BlochAngles& init,
                              const BlochAngles& target, double t0 = 0.0);

// Shortcut selector: the detuned pulse (FAPM1) when theta0 > thetaf, the
// resonant pulse (APM1) otherwise.
SynthesisResult simplified_hybrid(const PhysicalParams& params, const BlochAngles& init,
                                  const BlochAngles& target, double t0 = 0.0);

// |transition-time difference| between the two selectors; at most 11pi/omega0
// in the drive-limited regime.
double hybrid_discrepancy(const PhysicalParams& params, const BlochAngles& init,
                          const BlochAngles& target, double t0 = 0.0);

}  // namespace spinctrl
