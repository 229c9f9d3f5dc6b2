#include "circnet/error.hpp"

namespace circnet {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DisconnectedNetwork: return "DisconnectedNetwork";
    case ErrorKind::SizeLimitExceeded: return "SizeLimitExceeded";
    case ErrorKind::NotEligible: return "NotEligible";
    case ErrorKind::MissingRotation: return "MissingRotation";
    case ErrorKind::NotSymmetric: return "NotSymmetric";
    case ErrorKind::NonzeroDiagonal: return "NonzeroDiagonal";
    case ErrorKind::RankMismatch: return "RankMismatch";
    case ErrorKind::ZeroColumn: return "ZeroColumn";
    case ErrorKind::NotInvolution: return "NotInvolution";
    case ErrorKind::RoundTripFailure: return "RoundTripFailure";
    case ErrorKind::NotElectrical: return "NotElectrical";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::ValidationError: return "ValidationError";
    case ErrorKind::UsageError: return "UsageError";
    case ErrorKind::Internal: return "Internal";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

void fail(ErrorKind kind, const std::string& message) {
  throw Error(kind, message);
}

}  // namespace circnet
