#include "deltashell/solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace deltashell {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kEdgeClip = 1e-8;        // search window (-1+clip, 1-clip)
constexpr double kBisectWidth = 1e-12;    // bisection interval target
constexpr double kCertify = 1e-10;        // |mismatch| bound for a root

double mismatch_at(double eps, double rho, const QuantumChannel& ch, double A) {
  return phase_mismatch(dimensionless_point(eps, rho), ch, A);
}

// Bisect a sign-change bracket down to kBisectWidth; returns the midpoint.
double bisect(double a, double b, double fa, double rho, const QuantumChannel& ch,
              double A) {
  while (b - a > kBisectWidth) {
    const double m = 0.5 * (a + b);
    if (m <= a || m >= b) break;  // hit machine spacing
    const double fm = mismatch_at(m, rho, ch, A);
    if (fa * fm <= 0.0) {
      b = m;
    } else {
      a = m;
      fa = fm;
    }
  }
  return 0.5 * (a + b);
}

void scan(double rho, const QuantumChannel& ch, double A, int cells,
          std::vector<double>& roots, int& brackets) {
  const double lo = -1.0 + kEdgeClip, hi = 1.0 - kEdgeClip;
  const double h = (hi - lo) / cells;
  double prev_e = lo;
  double prev_f = mismatch_at(prev_e, rho, ch, A);
  for (int i = 1; i <= cells; ++i) {
    const double e = (i == cells) ? hi : lo + i * h;
    const double f = mismatch_at(e, rho, ch, A);
    if (prev_f == 0.0) {
      roots.push_back(prev_e);
    } else if (prev_f * f < 0.0) {
      ++brackets;
      const double root = bisect(prev_e, e, prev_f, rho, ch, A);
      // Wrap jumps bisect to |mismatch| ~ pi/2 and are rejected here.
      if (std::abs(mismatch_at(root, rho, ch, A)) <= kCertify) roots.push_back(root);
    }
    prev_e = e;
    prev_f = f;
  }
}

// Edge-of-window values of theta_in - theta_out; for kappa = -1 these are the
// analytic a_crit(rho) and A_th(rho), for other channels the same role is
// played by the numerically evaluated limits of the decreasing phase gap.
void channel_window(double rho, const QuantumChannel& ch, double& A_low,
                    double& A_high) {
  if (ch.kappa == -1) {
    A_low = std::atan(1.0 / (2.0 * rho));
    A_high = kPi - std::atan(3.0 / (2.0 * rho));
    return;
  }
  auto gap = [&](double eps) {
    const auto p = dimensionless_point(eps, rho);
    return std::atan(inner_ratio(p, ch)) - std::atan(outer_ratio(p, ch));
  };
  A_high = gap(-1.0 + kEdgeClip);
  A_low = gap(1.0 - kEdgeClip);
}

}  // namespace

const char* to_string(SpectrumStatus status) {
  switch (status) {
    case SpectrumStatus::Bound:         return "BOUND";
    case SpectrumStatus::Unbound:       return "UNBOUND";
    case SpectrumStatus::Supercritical: return "SUPERCRITICAL";
  }
  return "UNKNOWN";
}

SpectrumResult find_bound_states(double rho, double A, int kappa, int cells) {
  if (!(rho > 0.0))
    throw DomainError(ErrorCode::DegenerateShell, "rho must be positive");
  if (!std::isfinite(A))
    throw DomainError(ErrorCode::BadArgument, "coupling must be finite");
  const QuantumChannel ch = channel_from_kappa(kappa);

  SpectrumResult res{};
  res.rho = rho;
  res.coupling_A = A;
  res.kappa = kappa;
  res.bracket_count = 0;

  scan(rho, ch, A, cells, res.energies, res.bracket_count);
  if (res.energies.empty()) {
    // One refinement pass guards against a missed near-tangent pair.
    scan(rho, ch, A, 4 * cells, res.energies, res.bracket_count);
  }

  std::sort(res.energies.begin(), res.energies.end());
  res.energies.erase(std::unique(res.energies.begin(), res.energies.end(),
                                 [](double a, double b) { return b - a < 1e-9; }),
                     res.energies.end());

  if (!res.energies.empty()) {
    res.status = SpectrumStatus::Bound;
    return res;
  }

  // Root absence alone cannot tell the two empty cases apart: compare the
  // branch-0 coupling against the channel's existence window.
  double A_low, A_high;
  channel_window(rho, ch, A_low, A_high);
  const double A_red = A - kPi * std::floor(A / kPi);
  res.status = (A_red > A_high) ? SpectrumStatus::Supercritical
                                : SpectrumStatus::Unbound;
  return res;
}

GroundState ground_state_energy(double rho, double A) {
  const SpectrumResult res = find_bound_states(rho, A, -1);
  if (res.status == SpectrumStatus::Bound)
    return GroundState{res.status, res.energies.back()};
  return GroundState{res.status, std::numeric_limits<double>::quiet_NaN()};
}

CriticalCoupling critical_coupling(double rho, int branch) {
  if (!(rho > 0.0))
    throw DomainError(ErrorCode::DegenerateShell, "rho must be positive");
  if (branch < 0)
    throw DomainError(ErrorCode::BadArgument, "branch index must be >= 0");
  return CriticalCoupling{rho, kPi - std::atan(3.0 / (2.0 * rho)) + branch * kPi,
                          branch};
}

double threshold_coupling(double rho) {
  if (!(rho > 0.0))
    throw DomainError(ErrorCode::DegenerateShell, "rho must be positive");
  return std::atan(1.0 / (2.0 * rho));
}

namespace {

SweepRow sweep_row(double rho, double A) {
  const GroundState gs = ground_state_energy(rho, A);
  return SweepRow{rho, A, gs.status, gs.epsilon};
}

std::vector<SweepRow> sweep_impl(const std::vector<double>& rho_list, double A_min,
                                 double A_max, int steps, bool parallel) {
  if (!(A_min < A_max))
    throw DomainError(ErrorCode::BadArgument, "need A_min < A_max");
  if (steps < 2) throw DomainError(ErrorCode::BadArgument, "need steps >= 2");

  const long n_rho = static_cast<long>(rho_list.size());
  std::vector<SweepRow> rows(static_cast<size_t>(n_rho) * steps);
  const double dA = (A_max - A_min) / (steps - 1);

  // Rows are independent pure computations; output order is fixed by index.
#pragma omp parallel for collapse(2) schedule(dynamic) if (parallel)
  for (long i = 0; i < n_rho; ++i) {
    for (int j = 0; j < steps; ++j) {
      const double A = (j == steps - 1) ? A_max : A_min + j * dA;
      rows[static_cast<size_t>(i) * steps + j] = sweep_row(rho_list[i], A);
    }
  }
  return rows;
}

}  // namespace

std::vector<SweepRow> sweep(const std::vector<double>& rho_list, double A_min,
                            double A_max, int steps) {
  return sweep_impl(rho_list, A_min, A_max, steps, true);
}

std::vector<SweepRow> sweep_serial(const std::vector<double>& rho_list, double A_min,
                                   double A_max, int steps) {
  return sweep_impl(rho_list, A_min, A_max, steps, false);
}

}  // namespace deltashell
