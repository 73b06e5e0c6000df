#pragma once

#include "deltashell/kinematics.hpp"

namespace deltashell {

//! Modified Bessel function I_{l+1/2}(x), x > 0, l >= 0.
//!
//! Closed forms for l = 0, 1; recurrence for higher l; ascending power
//! series at small x where the closed forms cancel.
double bessel_i_half(int l, double x);

//! Modified Bessel function K_{l+1/2}(x), x > 0, l >= 0.
double bessel_k_half(int l, double x);

enum class Region { Inner, Outer };

//! Pure Bessel ratio of the lower-component order over the upper-component
//! order: I_{l_lower+1/2}(x)/I_{l_upper+1/2}(x) inside the shell,
//! K_{l_lower+1/2}(x)/K_{l_upper+1/2}(x) outside. For kappa = -1 these
//! reduce to coth(x) - 1/x and 1 + 1/x.
double ik_ratio(const QuantumChannel& channel, double x, Region region);

}  // namespace deltashell
