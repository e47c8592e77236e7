#include "spinctrl/synthesis.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace spinctrl {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kHalfPi = 0.5 * std::numbers::pi;

PulseSegment free_segment(double duration, double omega0) {
  return PulseSegment{duration, 0.0, omega0, 0.0};
}

// Polar sweep requested from the drive, always forward: theta advances by
// thetaf - theta0, winding through 4pi when the direct gap is negative.
double polar_sweep(const BlochAngles& init, const BlochAngles& target) {
  const double gap = target.theta - init.theta;
  return gap >= 0.0 ? gap : 4.0 * kPi + gap;
}

SynthesisResult pack(Schedule schedule, Algorithm algorithm, std::int64_t k,
                     double phi_k) {
  SynthesisResult result;
  result.schedule = std::move(schedule);
  result.algorithm = algorithm;
  result.k_index = k;
  result.phi_k = phi_k;
  result.transition_time = result.schedule.duration();
  return result;
}

}  // namespace

void PhysicalParams::validate() const {
  if (!(omega0 > 0.0) || !std::isfinite(omega0))
    throw std::invalid_argument("params: omega0 must be positive");
  if (!(omega1_max > 0.0) || !std::isfinite(omega1_max))
    throw std::invalid_argument("params: omega1_max must be positive");
  if (omega_b_minus < 0.0 || omega_b_plus < 0.0 || !std::isfinite(omega_b_minus) ||
      !std::isfinite(omega_b_plus))
    throw std::invalid_argument("params: band extents must be nonnegative");
  if (!(omega0 > omega_b_minus))
    throw std::invalid_argument("params: omega0 must exceed omega_b_minus");
}

double PhysicalParams::min_band() const {
  return std::min(omega_b_minus, omega_b_plus);
}

double PhysicalParams::min_rate() const {
  return std::min({omega1_max, omega_b_plus, omega_b_minus});
}

const char* algorithm_name(Algorithm algorithm) {
  switch (algorithm) {
    case Algorithm::Apm3: return "APM3";
    case Algorithm::Apm1: return "APM1";
    case Algorithm::Fapm2: return "FAPM2";
    case Algorithm::Fapm1: return "FAPM1";
  }
  return "?";
}

std::int64_t ceil_pos_int(double x) {
  if (!std::isfinite(x))
    throw std::domain_error("ceil_pos_int: index bound is not finite");
  if (x > 4.5e15)
    throw std::domain_error("ceil_pos_int: index bound exceeds exact integer range");
  if (x <= 1.0) return 1;
  const double nearest = std::round(x);
  if (std::abs(x - nearest) <= 1e-9 * std::max(1.0, std::abs(x)))
    return static_cast<std::int64_t>(nearest);
  return static_cast<std::int64_t>(std::ceil(x));
}

// ---------------------------------------------------------------------------
// resonant-carrier constructions (APM)
// ---------------------------------------------------------------------------

SynthesisResult synth_apm3(const PhysicalParams& params, const BlochAngles& init,
                           const BlochAngles& target, double t0) {
  params.validate();
  const double w0 = params.omega0;
  const double w1 = params.omega1_max;

  // Stage 1: free precession carries the azimuth onto pi/2 (phi decreases at
  // rate omega0, so the wait is phi0 - pi/2 modulo a full turn).
  const double dur1 =
      (init.phi >= kHalfPi ? init.phi - kHalfPi : init.phi + 1.5 * kPi) / w0;

  // Stage 2: full-amplitude resonant pulse sweeps the polar angle.
  const double sweep = polar_sweep(init, target);
  const double dur2 = sweep / w1;

  // Stage 3: free precession onto the target azimuth; k makes its length
  // nonnegative while the total z-phase of stages 2+3 hits pi/2 - phif mod 2pi.
  const std::int64_t k =
      ceil_pos_int(sweep * w0 / (kTwoPi * w1) - 0.25 + target.phi / kTwoPi);
  const double dur3 =
      std::max(0.0, (2.0 * static_cast<double>(k) * kPi + kHalfPi - target.phi) / w0 -
                        dur2);

  const double t1 = t0 + dur1;
  Schedule schedule{t0,
                    {free_segment(dur1, w0), PulseSegment{dur2, w1, w0, -w0 * t1},
                     free_segment(dur3, w0)}};
  SynthesisResult result = pack(std::move(schedule), Algorithm::Apm3, k, 0.0);
  result.phi_k = w0 * result.transition_time;  // total precession phase
  return result;
}

SynthesisResult synth_apm1(const PhysicalParams& params, const BlochAngles& init,
                           const BlochAngles& target, double t0) {
  params.validate();
  const double w0 = params.omega0;

  const double sweep = polar_sweep(init, target);
  const std::int64_t k = ceil_pos_int(sweep * w0 / (kTwoPi * params.omega1_max) +
                                      (target.phi - init.phi) / kTwoPi);
  const double phi_k =
      2.0 * static_cast<double>(k) * kPi + init.phi - target.phi;  // = w0 (tf - t0)

  // At this amplitude the polar sweep completes exactly when the accumulated
  // precession phase closes on the target azimuth.
  const double omega1 = sweep * w0 / phi_k;
  const double phi1 = kHalfPi - init.phi;  // aligns the initial state with the x-axis rotation

  Schedule schedule{t0, {PulseSegment{phi_k / w0, omega1, w0, phi1 - w0 * t0}}};
  return pack(std::move(schedule), Algorithm::Apm1, k, phi_k);
}

// ---------------------------------------------------------------------------
// detuned-carrier constructions (FAPM)
// ---------------------------------------------------------------------------

double fapm_envelope_bound(const PhysicalParams& params, const BlochAngles& init,
                           const BlochAngles& target) {
  const double band = params.min_band();
  if (band <= 0.0)
    throw std::domain_error(
        "synthesis: detuned pulses need a positive carrier band");
  const double beta = 0.5 * (init.theta + target.theta);  // rotating-frame axis tilt
  const double sb = std::sin(beta);
  const double cb = std::cos(beta);
  return std::max(sb * params.omega0 / (2.0 * params.omega1_max),
                  std::abs(cb) * params.omega0 / (2.0 * band));
}

namespace {

// Shared tail of the two detuned constructions. zphase is the carrier phase
// omega_rf (tf - tstart) = 2 k pi - (azimuth mismatch); the pulse lasts
// phi_k / omega0 and performs a half-turn about the tilted axis.
PulseSegment fapm_pulse(const PhysicalParams& params, double zphase, double cos_beta,
                        double sin_beta, double* phi_k_out) {
  const double phi_k = zphase + kPi * cos_beta;
  const double omega1 = params.omega0 * (kPi * sin_beta / phi_k);
  const double omega_rf = params.omega0 * (zphase / phi_k);
  *phi_k_out = phi_k;
  return PulseSegment{phi_k / params.omega0, omega1, omega_rf, 0.0};
}

}  // namespace

SynthesisResult synth_fapm2(const PhysicalParams& params, const BlochAngles& init,
                            const BlochAngles& target, double t0) {
  params.validate();
  const double w0 = params.omega0;
  const double beta = 0.5 * (init.theta + target.theta);
  const double cb = std::cos(beta);
  const double sb = std::sin(beta);

  const double rate_bound = fapm_envelope_bound(params, init, target);
  const std::int64_t k =
      ceil_pos_int(rate_bound + (target.phi - kPi * cb) / kTwoPi);

  // Stage 1: free precession clears the initial azimuth.
  const double dur1 = init.phi / w0;
  const double t1 = t0 + dur1;

  // Stage 2: detuned half-turn about the axis tilted by beta.
  const double zphase = 2.0 * static_cast<double>(k) * kPi - target.phi;
  double phi_k = 0.0;
  PulseSegment pulse = fapm_pulse(params, zphase, cb, sb, &phi_k);
  pulse.phi = -pulse.omega_rf * t1;

  Schedule schedule{t0, {free_segment(dur1, w0), pulse}};
  return pack(std::move(schedule), Algorithm::Fapm2, k, phi_k);
}

SynthesisResult synth_fapm1(const PhysicalParams& params, const BlochAngles& init,
                            const BlochAngles& target, double t0) {
  params.validate();
  const double beta = 0.5 * (init.theta + target.theta);
  const double cb = std::cos(beta);
  const double sb = std::sin(beta);

  const double rate_bound = fapm_envelope_bound(params, init, target);
  const std::int64_t k =
      ceil_pos_int(rate_bound + (target.phi - init.phi - kPi * cb) / kTwoPi);

  const double zphase =
      2.0 * static_cast<double>(k) * kPi - target.phi + init.phi;
  double phi_k = 0.0;
  PulseSegment pulse = fapm_pulse(params, zphase, cb, sb, &phi_k);
  const double phi1 = -init.phi;  // absorbs the initial azimuth
  pulse.phi = phi1 - pulse.omega_rf * t0;

  Schedule schedule{t0, {pulse}};
  return pack(std::move(schedule), Algorithm::Fapm1, k, phi_k);
}

}  // namespace spinctrl
