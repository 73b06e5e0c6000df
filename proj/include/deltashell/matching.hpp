#pragma once

#include <array>
#include <utility>

#include "deltashell/bessel.hpp"
#include "deltashell/kinematics.hpp"

namespace deltashell {

//! The 2x2 rotation relating (F, G) on the two sides of the shell. Norm
//! preserving (det +1), so F^2 + G^2 is continuous across the support.
struct TransferMatrix {
  std::array<std::array<double, 2>, 2> m;

  std::pair<double, double> apply(double F, double G) const {
    return {m[0][0] * F + m[0][1] * G, m[1][0] * F + m[1][1] * G};
  }
};

//! Rotation by angle A: [[cos A, -sin A], [sin A, cos A]].
TransferMatrix transfer_matrix(double A);

//! Maps an angle into (-pi/2, pi/2] by subtracting the nearest multiple of pi.
double wrap_half_pi(double m);

//! F/G of the regular (Bessel-I) interior solution evaluated at radius r.
double free_inner_ratio_at(double epsilon, double r, const QuantumChannel& channel);

//! F/G of the decaying (Bessel-K) exterior solution evaluated at radius r.
double free_outer_ratio_at(double epsilon, double r, const QuantumChannel& channel);

//! F_I/G_I at the shell: q * I-ratio evaluated at s0.
double inner_ratio(const DimensionlessPoint& point, const QuantumChannel& channel);

//! F_II/G_II at the shell: -q * K-ratio evaluated at s0.
double outer_ratio(const DimensionlessPoint& point, const QuantumChannel& channel);

//! Wrapped residual of the phase-jump condition,
//!   wrap(theta_inner - theta_outer - A),
//! zero iff arctan(F+/G+) - arctan(F-/G-) = -A holds modulo pi.
double phase_mismatch(const DimensionlessPoint& point, const QuantumChannel& channel,
                      double A);

//! The unique alpha = tan(a/hbar c) solving the matching condition at this
//! point. For kappa = -1 this is the closed form
//!   s0 u0 (1 + g0 s0) / (g0 s0 u0^2 - s0 (s0+1)(1 - g0)),
//! obtained by eliminating F/G from the boundary condition with the
//! inner/outer ratios; other channels go through tan(theta_in - theta_out).
double alpha_matching(const DimensionlessPoint& point, const QuantumChannel& channel);

//! The printed eigenvalue formula
//!   alpha = s0 u0 (1 + g0 s0) / (u0^2 - (s0+1) s0 (1 - g0)),
//! kept verbatim for the errata comparison (ground-state channel only).
double alpha_avn_printed(const DimensionlessPoint& point);

//! Left minus right side of the printed transcendental eigenvalue equation,
//! verbatim, at the given alpha (ground-state channel only).
double autoval_residual(const DimensionlessPoint& point, double alpha);

//! The side-by-side comparison record for the errata report.
struct AlphaComparison {
  double alpha_matching;
  double alpha_avn_printed;
  double autoval_residual;  // at the matching alpha
};

AlphaComparison compare_alphas(const DimensionlessPoint& point);

}  // namespace deltashell
