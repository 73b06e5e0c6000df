#pragma once

#include "deltashell/errors.hpp"

namespace deltashell {

//! One Dirac partial wave: kappa together with its (j, l) bookkeeping.
//!
//! kappa != 0, j = |kappa| - 1/2, and the upper/lower radial components carry
//! orbital numbers of opposite parity, |l_upper - l_lower| = 1.
struct QuantumChannel {
  int kappa;
  int l_upper;  // orbital number of the upper (G) component
  int l_lower;  // orbital number of the lower (F) component

  double j() const { return (kappa > 0 ? kappa : -kappa) - 0.5; }
};

//! Builds the unique channel for a given kappa. Throws for kappa = 0.
QuantumChannel channel_from_kappa(int kappa);

//! Scaled state (epsilon, rho) plus the derived quantities every matching
//! formula consumes. Energies in mc^2, lengths in hbar/mc.
struct DimensionlessPoint {
  double epsilon;  // in (-1, 1)
  double rho;      // > 0
  double s0;       // rho * sqrt(1 - epsilon^2) = k * r0
  double u0;       // rho * (1 + epsilon)
  double g0;       // tanh(s0) / s0
  double q;        // s0 / u0 = sqrt((1-eps)/(1+eps)), the kinematic prefactor
};

//! tanh(s0)/s0 with a short series below s0 = 1e-2.
double g0_from_s0(double s0);

DimensionlessPoint dimensionless_point(double epsilon, double rho);

//! The coupling a in units of hbar*c, with its tangent.
struct ShellCoupling {
  double angle_A;  // >= 0

  //! tan(angle_A); throws TANGENT_POLE where the tangent is infinite.
  double alpha() const;
};

}  // namespace deltashell
