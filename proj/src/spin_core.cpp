#include "spinctrl/spin_core.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace spinctrl {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}  // namespace

double wrap_two_pi(double angle) {
  double wrapped = std::fmod(angle, kTwoPi);
  if (wrapped < 0.0) wrapped += kTwoPi;
  if (wrapped >= kTwoPi) wrapped = 0.0;  // fmod(-eps) + 2pi can round up to 2pi
  return wrapped;
}

BlochAngles::BlochAngles(double theta_in, double phi_in)
    : theta(std::clamp(theta_in, 0.0, kPi)), phi(wrap_two_pi(phi_in)) {}

TiltedAxis::TiltedAxis(double theta_u_in) : theta_u(std::clamp(theta_u_in, 0.0, kPi)) {}

SpinState bloch_to_state(const BlochAngles& angles) {
  SpinState state;
  state << std::cos(0.5 * angles.theta),
      std::polar(std::sin(0.5 * angles.theta), angles.phi);
  return state;
}

BlochAngles state_to_bloch(const SpinState& state) {
  const double up = std::abs(state(0));
  const double down = std::abs(state(1));
  const double theta = 2.0 * std::atan2(down, up);
  if (up == 0.0 || down == 0.0) return BlochAngles(theta, 0.0);
  return BlochAngles(theta, std::arg(state(1)) - std::arg(state(0)));
}

double fidelity(const SpinState& a, const SpinState& b) {
  return std::abs(a.dot(b));  // Eigen's dot conjugates the first factor
}

Unitary2 rot_z(double angle) {
  Unitary2 u = Unitary2::Zero();
  u(0, 0) = std::polar(1.0, 0.5 * angle);
  u(1, 1) = std::polar(1.0, -0.5 * angle);
  return u;
}

Unitary2 su2_exp(const TiltedAxis& axis, double angle) {
  // exp{i a S_u} = cos(a/2) I + i sin(a/2) (cos(theta_u) sigma_z + sin(theta_u) sigma_x)
  const double c = std::cos(0.5 * angle);
  const Complex is(0.0, std::sin(0.5 * angle));
  const double cu = std::cos(axis.theta_u);
  const double su = std::sin(axis.theta_u);
  Unitary2 u;
  u << c + is * cu, is * su,
       is * su,     c - is * cu;
  return u;
}

}  // namespace spinctrl
