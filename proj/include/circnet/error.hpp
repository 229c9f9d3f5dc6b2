#pragma once

#include <stdexcept>
#include <string>

namespace circnet {

enum class ErrorKind {
  DisconnectedNetwork,
  SizeLimitExceeded,
  NotEligible,
  MissingRotation,
  NotSymmetric,
  NonzeroDiagonal,
  RankMismatch,
  ZeroColumn,
  NotInvolution,
  RoundTripFailure,
  NotElectrical,
  ParseError,
  ValidationError,
  UsageError,
  Internal,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message);
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] void fail(ErrorKind kind, const std::string& message);

}  // namespace circnet
