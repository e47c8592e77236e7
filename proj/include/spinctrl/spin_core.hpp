#pragma once

#include <complex>

#include <Eigen/Dense>

namespace spinctrl {

using Complex = std::complex<double>;

// Normalized amplitude pair (amp_up, amp_down) of a pure spin-1/2 state.
using SpinState = Eigen::Vector2cd;

// Carrier for products of exponentials of spin operators.
using Unitary2 = Eigen::Matrix2cd;

// Pauli matrices and the spin-1/2 operators S = sigma/2.
inline const Unitary2 kSigmaX = (Unitary2() << 0.0, 1.0, 1.0, 0.0).finished();
inline const Unitary2 kSigmaY =
    (Unitary2() << 0.0, Complex(0.0, -1.0), Complex(0.0, 1.0), 0.0).finished();
inline const Unitary2 kSigmaZ = (Unitary2() << 1.0, 0.0, 0.0, -1.0).finished();
inline const Unitary2 kSx = 0.5 * kSigmaX;
inline const Unitary2 kSy = 0.5 * kSigmaY;
inline const Unitary2 kSz = 0.5 * kSigmaZ;

// Maps an angle to [0, 2*pi).
double wrap_two_pi(double angle);

// Polar/azimuthal parametrization of a pure state:
//   |psi> = cos(theta/2)|up> + e^{i phi} sin(theta/2)|down>.
// theta is clamped to [0, pi] and phi wrapped to [0, 2*pi) on construction.
struct BlochAngles {
  double theta = 0.0;
  double phi = 0.0;

  BlochAngles() = default;
  BlochAngles(double theta_in, double phi_in);
};

// Rotation generator tilted from z toward x in the x-z plane:
//   S_u = cos(theta_u) Sz + sin(theta_u) Sx.
struct TiltedAxis {
  double theta_u = 0.0;

  TiltedAxis() = default;
  explicit TiltedAxis(double theta_u_in);
};

SpinState bloch_to_state(const BlochAngles& angles);

// Inverse of bloch_to_state up to a global phase; phi is 0 by convention at the
// poles, where the azimuth is undefined.
BlochAngles state_to_bloch(const SpinState& state);

// |<a|b>|, insensitive to global phase; 1 means the same physical state.
double fidelity(const SpinState& a, const SpinState& b);

// exp{i angle Sz} = diag(e^{i angle/2}, e^{-i angle/2}).
Unitary2 rot_z(double angle);

// exp{i angle (cos(theta_u) Sz + sin(theta_u) Sx)}.
Unitary2 su2_exp(const TiltedAxis& axis, double angle);

}  // namespace spinctrl
