#include "spinctrl/hybrid.hpp"

#include <stdexcept>
#include <utility>

namespace spinctrl {

bool drive_limited(const PhysicalParams& params) {
  return params.min_band() >= params.omega1_max;
}

SynthesisResult hybrid_select(const PhysicalParams& params, const BlochAngles& init,
                              const BlochAngles& target, double t0) {
  SynthesisResult resonant = synth_apm1(params, init, target, t0);
  SynthesisResult detuned;
  try {
    detuned = synth_fapm1(params, init, target, t0);
  } catch (const std::domain_error&) {
    return resonant;  // zero band: the detuned variant is unavailable
  }
  // Both times are phi_k / omega0, so comparing phase budgets compares times.
  return resonant.phi_k <= detuned.phi_k ? std::move(resonant) : std::move(detuned);
}

SynthesisResult simplified_hybrid(const PhysicalParams& params, const BlochAngles& init,
                                  const BlochAngles& target, double t0) {
  if (init.theta > target.theta) {
    try {
      return synth_fapm1(params, init, target, t0);
    } catch (const std::domain_error&) {
      // fall through: resonant transfer is always available
    }
  }
  return synth_apm1(params, init, target, t0);
}

double hybrid_discrepancy(const PhysicalParams& params, const BlochAngles& init,
                          const BlochAngles& target, double t0) {
  const double best = hybrid_select(params, init, target, t0).transition_time;
  const double shortcut = simplified_hybrid(params, init, target, t0).transition_time;
  return shortcut - best;  // nonnegative: hybrid_select attains the pair minimum
}

}  // namespace spinctrl
