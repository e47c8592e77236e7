#pragma once

#include <cstdint>

#include "spinctrl/propagator.hpp"
#include "spinctrl/spin_core.hpp"

namespace spinctrl {

// Hardware envelope: static-field precession rate omega0, drive amplitude cap
// omega1_max, and the admissible carrier band
//   [omega0 - omega_b_minus, omega0 + omega_b_plus].
struct PhysicalParams {
  double omega0 = 0.0;        // rad/s
  double omega1_max = 0.0;    // rad/s
  double omega_b_minus = 0.0; // rad/s
  double omega_b_plus = 0.0;  // rad/s

  void validate() const;  // throws std::invalid_argument
  double min_band() const;
  double min_rate() const;  // min(omega1_max, omega_b_plus, omega_b_minus)
};

enum class Algorithm { Apm3, Apm1, Fapm2, Fapm1 };

const char* algorithm_name(Algorithm algorithm);

struct SynthesisResult {
  Schedule schedule;
  Algorithm algorithm = Algorithm::Apm1;
  std::int64_t k_index = 1;      // winding index k, a positive integer
  double phi_k = 0.0;            // accumulated z-phase of the drive stage, radians
  double transition_time = 0.0;  // seconds; equals schedule.duration()
};

// Smallest k in Z+ = {1, 2, ...} with k >= x, treating values within 1e-9
// (relative) of an integer as that integer so boundary cases do not round up.
std::int64_t ceil_pos_int(double x);

// Envelope-driven lower bound on the detuned-pulse winding index: the larger of
// the drive-amplitude and carrier-band requirements for the tilted-axis pulse.
// Throws std::domain_error when the carrier band is empty (no room to detune).
double fapm_envelope_bound(const PhysicalParams& params, const BlochAngles& init,
                           const BlochAngles& target);

// Three stages on a resonant carrier: free precession to the pi/2 azimuth, one
// full-amplitude pulse sweeping the polar angle, free precession onto the
// target azimuth.
SynthesisResult synth_apm3(const PhysicalParams& params, const BlochAngles& init,
                           const BlochAngles& target, double t0 = 0.0);

// Single resonant pulse; the amplitude is tuned so the polar sweep and the
// azimuthal rewind finish together, and the carrier phase absorbs the initial
// azimuth.
SynthesisResult synth_apm1(const PhysicalParams& params, const BlochAngles& init,
                           const BlochAngles& target, double t0 = 0.0);

// Free precession to zero azimuth, then one detuned pulse whose rotating-frame
// axis bisects the initial and target polar angles.
SynthesisResult synth_fapm2(const PhysicalParams& params, const BlochAngles& init,
                            const BlochAngles& target, double t0 = 0.0);

// Single detuned pulse; the initial azimuth is absorbed into the carrier phase
// instead of a free-precession stage.
SynthesisResult synth_fapm1(const PhysicalParams& params, const BlochAngles& init,
                            const BlochAngles& target, double t0 = 0.0);

}  // namespace spinctrl
