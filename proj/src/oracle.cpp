#include "deltashell/oracle.hpp"

#include <cmath>
#include <limits>

namespace deltashell {

namespace {

constexpr int kMinSteps = 400;  // step <= width/400
constexpr double kEdgeClip = 1e-8;
constexpr double kWellCertify = 1e-6;  // loose vs the delta solver: O(w) physics

struct Deriv {
  double dF, dG;
};

Deriv radial_rhs(double r, double F, double G, double eps, double v, int kappa) {
  return {kappa * F / r - (eps - v - 1.0) * G,
          -kappa * G / r + (eps - v + 1.0) * F};
}

double well_mismatch(const WellProfile& profile, double eps,
                     const QuantumChannel& ch) {
  const WellIntegration w = integrate_well(profile, eps, ch.kappa);
  const double theta = std::atan2(w.edge.F, w.edge.G);
  const double theta_out =
      std::atan(free_outer_ratio_at(eps, profile.r_outer(), ch));
  return wrap_half_pi(theta - theta_out);
}

}  // namespace

WellProfile make_well(double rho, double A, double width) {
  if (!(rho > 0.0))
    throw DomainError(ErrorCode::DegenerateShell, "rho must be positive");
  if (!(width > 0.0) || !(rho - 0.5 * width > 0.0))
    throw DomainError(ErrorCode::BadArgument,
                      "need 0 < width and rho - width/2 > 0");
  if (!(A >= 0.0) || !std::isfinite(A))
    throw DomainError(ErrorCode::BadArgument, "coupling must be finite and >= 0");
  return WellProfile{rho, width, A / width};
}

WellIntegration integrate_well(const WellProfile& profile, double epsilon,
                               int kappa) {
  if (!(epsilon > -1.0 && epsilon < 1.0))
    throw DomainError(ErrorCode::SpectralRange, "epsilon must lie in (-1, 1)");
  const QuantumChannel ch = channel_from_kappa(kappa);

  const double r0 = profile.r_inner();
  const double r1 = profile.r_outer();
  const int n = kMinSteps;
  const double h = (r1 - r0) / n;
  const double v = -profile.depth;  // attractive well

  // Start on the regular interior solution; magnitude is arbitrary.
  const double theta0 = std::atan(free_inner_ratio_at(epsilon, r0, ch));
  double F = std::sin(theta0), G = std::cos(theta0);
  double rotation = 0.0, log_gain = 0.0;

  for (int i = 0; i < n; ++i) {
    const double r = r0 + i * h;
    const double F0 = F, G0 = G;
    const Deriv k1 = radial_rhs(r, F, G, epsilon, v, kappa);
    const Deriv k2 = radial_rhs(r + 0.5 * h, F + 0.5 * h * k1.dF,
                                G + 0.5 * h * k1.dG, epsilon, v, kappa);
    const Deriv k3 = radial_rhs(r + 0.5 * h, F + 0.5 * h * k2.dF,
                                G + 0.5 * h * k2.dG, epsilon, v, kappa);
    const Deriv k4 = radial_rhs(r + h, F + h * k3.dF, G + h * k3.dG, epsilon, v,
                                kappa);
    F += h / 6.0 * (k1.dF + 2.0 * k2.dF + 2.0 * k3.dF + k4.dF);
    G += h / 6.0 * (k1.dG + 2.0 * k2.dG + 2.0 * k3.dG + k4.dG);
    if (!std::isfinite(F) || !std::isfinite(G))
      throw DomainError(ErrorCode::IntegrationFailure,
                        "non-finite radial state inside the well");

    // Angle increment of (F, G) against the pre-step direction; the depth
    // scales like A/width, so only the angle and log-magnitude are stable
    // currencies across the well.
    rotation += std::atan2(F * G0 - G * F0, F * F0 + G * G0);
    const double norm = std::hypot(F, G);
    log_gain += std::log(norm);
    F /= norm;
    G /= norm;
  }

  return WellIntegration{RadialState{F, G, r1}, rotation, log_gain};
}

double integrate_radial(const WellProfile& profile, double epsilon, int kappa) {
  const WellIntegration w = integrate_well(profile, epsilon, kappa);
  return w.edge.F / w.edge.G;
}

std::optional<double> well_bound_state(const WellProfile& profile, int kappa) {
  const QuantumChannel ch = channel_from_kappa(kappa);
  const int cells = 2000;
  const double lo = -1.0 + kEdgeClip, hi = 1.0 - kEdgeClip;
  const double h = (hi - lo) / cells;

  std::optional<double> best;
  double prev_e = lo;
  double prev_f = well_mismatch(profile, prev_e, ch);
  for (int i = 1; i <= cells; ++i) {
    const double e = (i == cells) ? hi : lo + i * h;
    const double f = well_mismatch(profile, e, ch);
    if (prev_f * f < 0.0) {
      double a = prev_e, b = e, fa = prev_f;
      while (b - a > 1e-12) {
        const double m = 0.5 * (a + b);
        if (m <= a || m >= b) break;
        const double fm = well_mismatch(profile, m, ch);
        if (fa * fm <= 0.0) {
          b = m;
        } else {
          a = m;
          fa = fm;
        }
      }
      const double root = 0.5 * (a + b);
      if (std::abs(well_mismatch(profile, root, ch)) <= kWellCertify) best = root;
    }
    prev_e = e;
    prev_f = f;
  }
  return best;  // largest root = ground state of the channel
}

std::vector<ConvergenceRow> convergence_study(double rho, double A,
                                              const std::vector<double>& widths) {
  const GroundState delta = ground_state_energy(rho, A);
  std::optional<double> eps_delta;
  if (delta.status == SpectrumStatus::Bound) eps_delta = delta.epsilon;

  std::vector<ConvergenceRow> rows;
  rows.reserve(widths.size());
  for (double w : widths) {
    ConvergenceRow row{};
    row.width = w;
    row.epsilon_well = well_bound_state(make_well(rho, A, w), -1);
    row.epsilon_delta = eps_delta;
    row.abs_error = (row.epsilon_well && eps_delta)
                        ? std::abs(*row.epsilon_well - *eps_delta)
                        : std::numeric_limits<double>::quiet_NaN();
    rows.push_back(row);
  }
  return rows;
}

}  // namespace deltashell
