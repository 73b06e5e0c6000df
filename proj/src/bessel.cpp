#include "deltashell/bessel.hpp"

#include <cmath>
#include <limits>
#include <numbers>

namespace deltashell {

namespace {

constexpr double kPi = std::numbers::pi;

void require_positive(double x) {
  if (!(x > 0.0))
    throw DomainError(ErrorCode::BadArgument, "bessel argument must be positive");
}

// Ascending series for I_{nu}(x), nu = l + 1/2. All terms are positive, so
// there is no cancellation at any x; used below the switchover where the
// sinh/cosh closed forms and the subtractive recurrence lose digits.
double i_half_series(int l, double x) {
  const double nu = l + 0.5;
  const double h = 0.5 * x;
  double term = std::pow(h, nu) / std::tgamma(nu + 1.0);
  double sum = term;
  for (int k = 0; k < 60; ++k) {
    term *= h * h / ((k + 1.0) * (nu + k + 1.0));
    sum += term;
    if (term < sum * std::numeric_limits<double>::epsilon()) break;
  }
  return sum;
}

}  // namespace

double bessel_i_half(int l, double x) {
  require_positive(x);
  if (l < 0) throw DomainError(ErrorCode::BadArgument, "order l must be >= 0");

  // The closed form for l = 1 cancels like x^2 and each recurrence step
  // amplifies roundoff by ~(2/x)^2, so the series takes over below x = 1.
  if (x < 1.0) return i_half_series(l, x);

  const double pref = std::sqrt(2.0 / (kPi * x));
  const double i0 = pref * std::sinh(x);
  if (l == 0) return i0;
  const double i1 = pref * (std::cosh(x) - std::sinh(x) / x);
  if (l == 1) return i1;

  // I_{nu+1}(x) = I_{nu-1}(x) - (2 nu / x) I_nu(x)
  double prev = i0, cur = i1;
  for (int m = 1; m < l; ++m) {
    const double nu = m + 0.5;
    const double next = prev - (2.0 * nu / x) * cur;
    prev = cur;
    cur = next;
  }
  return cur;
}

double bessel_k_half(int l, double x) {
  require_positive(x);
  if (l < 0) throw DomainError(ErrorCode::BadArgument, "order l must be >= 0");

  const double pref = std::sqrt(kPi / (2.0 * x)) * std::exp(-x);
  const double k0 = pref;
  if (l == 0) return k0;
  const double k1 = pref * (1.0 + 1.0 / x);
  if (l == 1) return k1;

  // K_{nu+1}(x) = K_{nu-1}(x) + (2 nu / x) K_nu(x); all terms positive.
  double prev = k0, cur = k1;
  for (int m = 1; m < l; ++m) {
    const double nu = m + 0.5;
    const double next = prev + (2.0 * nu / x) * cur;
    prev = cur;
    cur = next;
  }
  return cur;
}

double ik_ratio(const QuantumChannel& channel, double x, Region region) {
  require_positive(x);

  if (channel.kappa == -1) {
    // Ground-state channel: the ratios collapse to elementary expressions.
    if (region == Region::Inner) {
      if (x < 1e-2) {
        const double x2 = x * x;
        return x / 3.0 - x * x2 / 45.0 + 2.0 * x2 * x2 * x / 945.0;
      }
      return 1.0 / std::tanh(x) - 1.0 / x;
    }
    return 1.0 + 1.0 / x;
  }

  if (region == Region::Inner)
    return bessel_i_half(channel.l_lower, x) / bessel_i_half(channel.l_upper, x);
  return bessel_k_half(channel.l_lower, x) / bessel_k_half(channel.l_upper, x);
}

}  // namespace deltashell
