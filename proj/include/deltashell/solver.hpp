#pragma once

#include <vector>

#include "deltashell/matching.hpp"

namespace deltashell {

enum class SpectrumStatus { Bound, Unbound, Supercritical };

const char* to_string(SpectrumStatus status);

//! Per-(rho, A, kappa) outcome of the bound-state search.
struct SpectrumResult {
  double rho;
  double coupling_A;
  int kappa;
  SpectrumStatus status;
  std::vector<double> energies;  // strictly increasing, empty unless Bound
  int bracket_count;             // sign-change brackets examined (diagnostics)
};

//! Scans epsilon over (-1 + delta, 1 - delta) for sign changes of the wrapped
//! phase mismatch and refines each by bisection. Roots are certified by
//! |phase_mismatch| <= 1e-10 (bisection also converges onto the pi/2 wrap
//! jumps; those fail certification and are discarded).
SpectrumResult find_bound_states(double rho, double A, int kappa, int cells = 2000);

struct GroundState {
  SpectrumStatus status;
  double epsilon;  // valid only when status == Bound
};

//! Largest root of the kappa = -1 channel.
GroundState ground_state_energy(double rho, double A);

struct CriticalCoupling {
  double rho;
  double a_crit;
  int branch_index;
};

//! a_crit = pi - arctan(3/(2 rho)) + branch*pi; branch 0 is the minimum
//! positive solution of tan(a_crit) = -3/(2 rho).
CriticalCoupling critical_coupling(double rho, int branch = 0);

//! A_th = arctan(1/(2 rho)), the coupling at which the ground state detaches
//! from the upper continuum.
double threshold_coupling(double rho);

struct SweepRow {
  double rho;
  double coupling_A;
  SpectrumStatus status;
  double epsilon;  // valid only when status == Bound
};

//! Ground-state curve over a (rho, A) grid, rows ordered by (rho, A).
//! Grid points are independent; this version runs them under OpenMP.
std::vector<SweepRow> sweep(const std::vector<double>& rho_list, double A_min,
                            double A_max, int steps);

//! Serial reference for the parallel sweep; identical output by construction.
std::vector<SweepRow> sweep_serial(const std::vector<double>& rho_list, double A_min,
                                   double A_max, int steps);

}  // namespace deltashell
