#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace poncelet {

enum class ErrorCode {
  NotDivisible,
  ZeroPolynomial,
  NegativePExponent,
  UnsupportedDegree,
  NotQuartic,
  DegenerateParabola,
  OnLatusRectumLine,
  OnUnitCircle,
  AtFocus,
  ExcludedCenter,
  UnsupportedN,
  NotOnCircle,
  NotOnLine,
  DegenerateStep,
  BranchPoint,
  Pole,
  SingularDenominator,
  SingularInput,
  CheckFailed,
  Parse,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library carries one of the codes above so
/// callers (and the CLI) can dispatch without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace poncelet
