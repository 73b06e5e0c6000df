#pragma once

#include <optional>
#include <vector>

#include "deltashell/solver.hpp"

namespace deltashell {

//! Rectangular regularization of the shell: a well of the given width
//! centered on rho with depth * width = A, so the integrated strength
//! matches the delta.
struct WellProfile {
  double rho;
  double width;
  double depth;  // = A / width

  double coupling() const { return depth * width; }
  double r_inner() const { return rho - 0.5 * width; }
  double r_outer() const { return rho + 0.5 * width; }
};

WellProfile make_well(double rho, double A, double width);

//! Reduced radial amplitudes at one radius, F = r f, G = r g.
struct RadialState {
  double F;
  double G;
  double r;
};

//! Result of integrating the raw coupled radial equations across the well.
struct WellIntegration {
  RadialState edge;      // unit-normalized (F, G) at r_outer
  double rotation;       // accumulated angle change of arctan2(F, G)
  double log_norm_gain;  // log of |(F,G)| growth across the well
};

//! Integrates dF/dr = kappa F/r - (eps - v - 1) G,
//!            dG/dr = -kappa G/r + (eps - v + 1) F
//! from the regular interior form at r_inner across the well with fixed-step
//! RK4 (step <= width/400), renormalizing each step and tracking the angle.
WellIntegration integrate_well(const WellProfile& profile, double epsilon, int kappa);

//! F/G at the outer edge of the well.
double integrate_radial(const WellProfile& profile, double epsilon, int kappa);

//! Ground-state energy of the finite well by shooting: the epsilon at which
//! the integrated outer ratio matches the decaying exterior form. Empty when
//! no sign change exists (unbound).
std::optional<double> well_bound_state(const WellProfile& profile, int kappa);

struct ConvergenceRow {
  double width;
  std::optional<double> epsilon_well;
  std::optional<double> epsilon_delta;
  double abs_error;  // NaN unless both energies exist
};

//! Sharp-limit convergence table: one row per width, delta reference from the
//! transfer-matrix solver.
std::vector<ConvergenceRow> convergence_study(double rho, double A,
                                              const std::vector<double>& widths);

}  // namespace deltashell
