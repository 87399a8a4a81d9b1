#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace annulab {

// Domain failures named by the operation contracts. Precondition violations
// on malformed input raise std::invalid_argument instead.
enum class ErrorCode {
  NotInvertible,
  ZeroDegree,
  InvalidPoint,
  MidpointOfInfinite,
  ModulusMismatch,
  UnknownEdge,
  NotHarmonic,
  ResidueOfZero,
  NonIntegralRadius,
  DenominatorVanishes,
  DenominatorResidueZero,
  NormOnlyRepresentative,
  OffAnnulus,
  BridgeEdge,
  MissingEdgeClass,
  NonMonotoneProfile,
};

std::string_view error_name(ErrorCode code);

class DomainError : public std::runtime_error {
 public:
  DomainError(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_name(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace annulab
