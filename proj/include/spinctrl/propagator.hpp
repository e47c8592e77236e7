#pragma once

#include <cstdint>
#include <vector>

#include "spinctrl/spin_core.hpp"

namespace spinctrl {

// One piecewise-constant control interval. phi is the absolute-lab-time carrier
// phase: while the segment is active the drive term is
//   omega1 [Sx cos(omega_rf t + phi) - Sy sin(omega_rf t + phi)]
// with t the lab time. omega1 = 0 encodes free precession.
struct PulseSegment {
  double duration = 0.0;  // seconds, >= 0
  double omega1 = 0.0;    // rad/s, >= 0
  double omega_rf = 0.0;  // rad/s, > 0
  double phi = 0.0;       // radians
};

// Contiguous control program starting at lab time t0.
struct Schedule {
  double t0 = 0.0;
  std::vector<PulseSegment> segments;

  double duration() const;
  double end_time() const { return t0 + duration(); }
};

// Rotation rate and axis tilt seen in the frame co-rotating with the carrier.
// theta_u = 0 by convention in the degenerate case r_u = 0.
struct RotatingFrameParams {
  double r_u = 0.0;      // rad/s, sqrt((omega0 - omega_rf)^2 + omega1^2)
  double theta_u = 0.0;  // radians, in [0, pi] since omega1 >= 0
};

RotatingFrameParams rotating_frame_params(double omega0, const PulseSegment& seg);

// Closed-form propagator over one segment beginning at lab time tau:
//   exp{i [omega_rf dt + phi1] Sz} exp{i r_u dt S_u} exp{-i phi1 Sz},  dt = duration.
// phi1 is the drive phase referenced to the segment start; the 3-argument
// overload derives it from the stored absolute phase, phi1 = phi + omega_rf*tau.
Unitary2 segment_propagator(double omega0, const PulseSegment& seg, double tau);
Unitary2 segment_propagator(double omega0, const PulseSegment& seg, double tau,
                            double phi1);

// Applies the segment propagators in time order.
SpinState propagate(double omega0, const Schedule& schedule, const SpinState& psi0);

struct Rk4Stats {
  double max_step_drift = 0.0;     // largest |norm - 1| before a renormalization
  double max_segment_drift = 0.0;  // largest per-segment accumulated |norm - 1|
  std::int64_t steps = 0;
};

// Fixed-step classic 4th-order integration of the lab-frame equation of motion
//   d/dt psi = i {omega0 Sz + omega1 [Sx cos(omega_rf t + phi)
//                                     - Sy sin(omega_rf t + phi)]} psi,
// renormalizing after every step. dt caps the step size: each segment is
// integrated with h = duration/n <= dt, so segment boundaries are always step
// boundaries. Deliberately independent of the closed-form path above.
SpinState rk4_oracle(double omega0, const Schedule& schedule, const SpinState& psi0,
                     double dt, Rk4Stats* stats = nullptr);

// (2*pi / max(omega0, max segment omega_rf)) / 200, i.e. at least 200 samples
// per carrier period.
double default_oracle_dt(double omega0, const Schedule& schedule);

}  // namespace spinctrl
