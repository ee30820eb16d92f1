#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace sepset {

enum class ErrorCode {
  PreconditionViolated,
  MissingEntry,
  DomainMismatch,
  CarrierMismatch,
  CarrierTooLarge,
  NotInjective,
  NotASubfamily,
  NotAMetric,
  MissingTransport,
  IndexNotDiscrete,
  NotInPiSet,
  NotAffine,
  NotCompatible,
  EmptyValueUniverse,
  MalformedRational,
  ArithmeticOverflow,
  ParseError,
  UndeclaredName,
  DuplicateName,
  UnknownLawId,
};

std::string_view to_string(ErrorCode code);

/// Contract violation raised by an operation. Law failures are never
/// reported this way; they come back as verdicts with witnesses.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace sepset
