#pragma once

#include <stdexcept>
#include <string>

namespace cx {

enum class ErrorKind {
  UnknownIdentifier,
  DuplicateIdentifier,
  CornerMismatch,
  IdentityViolation,
  MissingFacet,
  DimensionGap,
  InvalidSlot,
  SyntaxError,
  PartitionMismatch,
  NotConnected,
  InvalidLabeling,
  UnknownName,
  NotLocallyInjective,
  NotVhPreserving,
  NotSimplexified,
  CliqueBudgetExceeded,
  UsageError,
  IoError,
};

const char* to_string(ErrorKind k);

/// Thrown for malformed inputs and violated preconditions. Checkers that
/// produce verdicts (npc, vh, sixlarge) report failures through certificates
/// instead of throwing.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
  throw Error(kind, message);
}

}  // namespace cx
