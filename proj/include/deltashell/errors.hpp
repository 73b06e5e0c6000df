#pragma once

#include <stdexcept>
#include <string>

namespace deltashell {

enum class ErrorCode {
  SpectralRange,      // epsilon outside the open interval (-1, 1)
  DegenerateShell,    // rho <= 0; the r0 -> 0 limit is not well defined
  TangentPole,        // theta_inner - theta_outer = pi/2 mod pi
  Pole,               // zero denominator in a printed comparison formula
  IntegrationFailure, // non-finite state during radial integration
  BadArgument,
};

inline const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::SpectralRange:      return "SPECTRAL_RANGE";
    case ErrorCode::DegenerateShell:    return "DEGENERATE_SHELL";
    case ErrorCode::TangentPole:        return "TANGENT_POLE";
    case ErrorCode::Pole:               return "POLE";
    case ErrorCode::IntegrationFailure: return "INTEGRATION_FAILURE";
    case ErrorCode::BadArgument:        return "BAD_ARGUMENT";
  }
  return "UNKNOWN";
}

class DomainError : public std::domain_error {
public:
  DomainError(ErrorCode code, const std::string& what)
      : std::domain_error(std::string(to_string(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

private:
  ErrorCode code_;
};

}  // namespace deltashell
