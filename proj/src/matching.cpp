#include "deltashell/matching.hpp"

#include <cmath>
#include <numbers>

namespace deltashell {

namespace {
constexpr double kPi = std::numbers::pi;
}

TransferMatrix transfer_matrix(double A) {
  if (!std::isfinite(A))
    throw DomainError(ErrorCode::BadArgument, "transfer angle must be finite");
  const double c = std::cos(A), s = std::sin(A);
  return TransferMatrix{{{{c, -s}, {s, c}}}};
}

double wrap_half_pi(double m) {
  double r = std::remainder(m, kPi);  // in [-pi/2, pi/2]
  if (r <= -kPi / 2.0) r += kPi;
  return r;
}

double free_inner_ratio_at(double epsilon, double r, const QuantumChannel& channel) {
  const double k = std::sqrt((1.0 - epsilon) * (1.0 + epsilon));
  const double q = std::sqrt((1.0 - epsilon) / (1.0 + epsilon));
  return q * ik_ratio(channel, k * r, Region::Inner);
}

double free_outer_ratio_at(double epsilon, double r, const QuantumChannel& channel) {
  const double k = std::sqrt((1.0 - epsilon) * (1.0 + epsilon));
  const double q = std::sqrt((1.0 - epsilon) / (1.0 + epsilon));
  return -q * ik_ratio(channel, k * r, Region::Outer);
}

double inner_ratio(const DimensionlessPoint& point, const QuantumChannel& channel) {
  return point.q * ik_ratio(channel, point.s0, Region::Inner);
}

double outer_ratio(const DimensionlessPoint& point, const QuantumChannel& channel) {
  return -point.q * ik_ratio(channel, point.s0, Region::Outer);
}

double phase_mismatch(const DimensionlessPoint& point, const QuantumChannel& channel,
                      double A) {
  const double theta_in = std::atan(inner_ratio(point, channel));
  const double theta_out = std::atan(outer_ratio(point, channel));
  return wrap_half_pi(theta_in - theta_out - A);
}

double alpha_matching(const DimensionlessPoint& point, const QuantumChannel& channel) {
  if (channel.kappa == -1) {
    const double s0 = point.s0, u0 = point.u0, g0 = point.g0;
    const double num = s0 * u0 * (1.0 + g0 * s0);
    const double den = g0 * s0 * u0 * u0 - s0 * (s0 + 1.0) * (1.0 - g0);
    if (den == 0.0)
      throw DomainError(ErrorCode::TangentPole,
                        "theta_inner - theta_outer = pi/2 mod pi");
    return num / den;
  }
  const double t_in = inner_ratio(point, channel);
  const double t_out = outer_ratio(point, channel);
  const double den = 1.0 + t_in * t_out;
  if (den == 0.0)
    throw DomainError(ErrorCode::TangentPole,
                      "theta_inner - theta_outer = pi/2 mod pi");
  return (t_in - t_out) / den;
}

double alpha_avn_printed(const DimensionlessPoint& point) {
  const double s0 = point.s0, u0 = point.u0, g0 = point.g0;
  const double den = u0 * u0 - (s0 + 1.0) * s0 * (1.0 - g0);
  if (den == 0.0)
    throw DomainError(ErrorCode::Pole, "printed eigenvalue formula denominator vanishes");
  return s0 * u0 * (1.0 + g0 * s0) / den;
}

double autoval_residual(const DimensionlessPoint& point, double alpha) {
  // Printed transcendental equation, left minus right, with
  // q = k hbar c / (E + mc^2) and T = (1 - tanh(kr0)) / tanh(kr0).
  const double q = point.q, s0 = point.s0;
  const double t = std::tanh(s0);
  const double T = (1.0 - t) / t;
  const double edge = 1.0 + 1.0 / s0;
  const double lhs = q * edge + alpha * q * q * edge * T;
  const double rhs = q * T - alpha;
  return lhs - rhs;
}

AlphaComparison compare_alphas(const DimensionlessPoint& point) {
  const QuantumChannel ground = channel_from_kappa(-1);
  AlphaComparison cmp{};
  cmp.alpha_matching = alpha_matching(point, ground);
  cmp.alpha_avn_printed = alpha_avn_printed(point);
  cmp.autoval_residual = autoval_residual(point, cmp.alpha_matching);
  return cmp;
}

}  // namespace deltashell
