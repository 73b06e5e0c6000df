#include "deltashell/kinematics.hpp"

#include <cmath>

namespace deltashell {

QuantumChannel channel_from_kappa(int kappa) {
  if (kappa == 0)
    throw DomainError(ErrorCode::BadArgument, "kappa = 0 is not a Dirac channel");
  QuantumChannel ch{};
  ch.kappa = kappa;
  if (kappa > 0) {
    ch.l_upper = kappa;
    ch.l_lower = kappa - 1;
  } else {
    ch.l_upper = -kappa - 1;
    ch.l_lower = -kappa;
  }
  return ch;
}

double g0_from_s0(double s0) {
  // tanh(s0)/s0 -> 1 as s0 -> 0; series below the cutoff avoids the 0/0 form.
  if (s0 < 1e-2) {
    const double s2 = s0 * s0;
    return 1.0 - s2 / 3.0 + 2.0 * s2 * s2 / 15.0;
  }
  return std::tanh(s0) / s0;
}

DimensionlessPoint dimensionless_point(double epsilon, double rho) {
  if (!(epsilon > -1.0 && epsilon < 1.0))
    throw DomainError(ErrorCode::SpectralRange,
                      "epsilon must lie in the open interval (-1, 1)");
  if (!(rho > 0.0))
    throw DomainError(ErrorCode::DegenerateShell, "rho must be positive");

  DimensionlessPoint p{};
  p.epsilon = epsilon;
  p.rho = rho;
  p.s0 = rho * std::sqrt((1.0 - epsilon) * (1.0 + epsilon));
  p.u0 = rho * (1.0 + epsilon);
  p.g0 = g0_from_s0(p.s0);
  p.q = std::sqrt((1.0 - epsilon) / (1.0 + epsilon));
  return p;
}

double ShellCoupling::alpha() const {
  const double c = std::cos(angle_A);
  if (c == 0.0)
    throw DomainError(ErrorCode::TangentPole, "tan(A) undefined at A = pi/2 + n*pi");
  return std::tan(angle_A);
}

}  // namespace deltashell
