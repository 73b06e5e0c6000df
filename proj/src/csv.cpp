#include "deltashell/csv.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstring>

namespace deltashell {

std::string format_sig(double x, int sig_digits) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";

  char buf[64];
  // Round in scientific form first so the decimal exponent is the post-
  // rounding one (9.9995 -> 1.00e+1), then re-print positionally.
  std::snprintf(buf, sizeof(buf), "%.*e", sig_digits - 1, x);
  const char* epos = std::strchr(buf, 'e');
  const int exp10 = epos ? std::atoi(epos + 1) : 0;
  int decimals = sig_digits - 1 - exp10;
  if (decimals < 0) decimals = 0;
  std::snprintf(buf, sizeof(buf), "%.*f", decimals, x);
  return buf;
}

}  // namespace deltashell
