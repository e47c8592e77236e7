#include "spinctrl/propagator.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace spinctrl {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}  // namespace

double Schedule::duration() const {
  double total = 0.0;
  for (const PulseSegment& seg : segments) total += seg.duration;
  return total;
}

RotatingFrameParams rotating_frame_params(double omega0, const PulseSegment& seg) {
  const double detuning = omega0 - seg.omega_rf;
  RotatingFrameParams frame;
  frame.r_u = std::hypot(detuning, seg.omega1);
  frame.theta_u = frame.r_u > 0.0 ? std::atan2(seg.omega1, detuning) : 0.0;
  return frame;
}

Unitary2 segment_propagator(double omega0, const PulseSegment& seg, double tau) {
  return segment_propagator(omega0, seg, tau, seg.phi + seg.omega_rf * tau);
}

Unitary2 segment_propagator(double omega0, const PulseSegment& seg, double tau,
                            double phi1) {
  (void)tau;  // the closed form depends on tau only through phi1
  const double dt = seg.duration;
  const RotatingFrameParams frame = rotating_frame_params(omega0, seg);
  return rot_z(seg.omega_rf * dt + phi1) *
         su2_exp(TiltedAxis(frame.theta_u), frame.r_u * dt) * rot_z(-phi1);
}

SpinState propagate(double omega0, const Schedule& schedule, const SpinState& psi0) {
  SpinState psi = psi0;
  double tau = schedule.t0;
  for (const PulseSegment& seg : schedule.segments) {
    psi = segment_propagator(omega0, seg, tau) * psi;
    tau += seg.duration;
  }
  return psi;
}

namespace {

// d/dt psi = i H(t) psi with H = [[w0/2, (w1/2) e^{i a}], [(w1/2) e^{-i a}, -w0/2]],
// a = omega_rf t + phi; the off-diagonal phase is Sx cos(a) - Sy sin(a).
SpinState lab_frame_derivative(double omega0, const PulseSegment& seg, double t,
                               const SpinState& psi) {
  const Complex off = std::polar(0.5 * seg.omega1, seg.omega_rf * t + seg.phi);
  const Complex i(0.0, 1.0);
  SpinState d;
  d(0) = i * (0.5 * omega0 * psi(0) + off * psi(1));
  d(1) = i * (std::conj(off) * psi(0) - 0.5 * omega0 * psi(1));
  return d;
}

}  // namespace

SpinState rk4_oracle(double omega0, const Schedule& schedule, const SpinState& psi0,
                     double dt, Rk4Stats* stats) {
  if (!(dt > 0.0) || !std::isfinite(dt))
    throw std::invalid_argument("rk4_oracle: dt must be positive and finite");

  SpinState psi = psi0;
  double t = schedule.t0;
  Rk4Stats local;
  for (const PulseSegment& seg : schedule.segments) {
    if (seg.duration > 0.0) {
      const auto n = static_cast<std::int64_t>(std::ceil(seg.duration / dt));
      const std::int64_t steps = std::max<std::int64_t>(1, n);
      const double h = seg.duration / static_cast<double>(steps);
      double segment_drift = 0.0;
      for (std::int64_t i = 0; i < steps; ++i) {
        const double ti = t + static_cast<double>(i) * h;
        const SpinState k1 = lab_frame_derivative(omega0, seg, ti, psi);
        const SpinState k2 =
            lab_frame_derivative(omega0, seg, ti + 0.5 * h, psi + (0.5 * h) * k1);
        const SpinState k3 =
            lab_frame_derivative(omega0, seg, ti + 0.5 * h, psi + (0.5 * h) * k2);
        const SpinState k4 = lab_frame_derivative(omega0, seg, ti + h, psi + h * k3);
        psi += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
        const double drift = std::abs(psi.norm() - 1.0);
        segment_drift += drift;
        local.max_step_drift = std::max(local.max_step_drift, drift);
        psi.normalize();
      }
      local.max_segment_drift = std::max(local.max_segment_drift, segment_drift);
      local.steps += steps;
    }
    t += seg.duration;
  }
  if (stats != nullptr) *stats = local;
  return psi;
}

double default_oracle_dt(double omega0, const Schedule& schedule) {
  double fastest = omega0;
  for (const PulseSegment& seg : schedule.segments)
    fastest = std::max(fastest, seg.omega_rf);
  return kTwoPi / fastest / 200.0;
}

}  // namespace spinctrl
