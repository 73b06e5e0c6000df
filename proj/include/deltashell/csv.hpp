#pragma once

#include <string>

namespace deltashell {

//! Positional decimal with the given number of significant digits, trailing
//! zeros kept, '.' separator. Used for every float field in the CSV outputs.
std::string format_sig(double x, int sig_digits = 12);

}  // namespace deltashell
