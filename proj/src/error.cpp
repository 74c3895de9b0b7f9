#include "error.hpp"

namespace hypbound {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::IoError: return "IoError";
    case ErrorCode::NotInDomain: return "NotInDomain";
    case ErrorCode::NotOnBoundary: return "NotOnBoundary";
    case ErrorCode::EmptySet: return "EmptySet";
    case ErrorCode::HypothesisViolated: return "HypothesisViolated";
    case ErrorCode::TruncationExceeded: return "TruncationExceeded";
    case ErrorCode::MalformedPath: return "MalformedPath";
    case ErrorCode::ZeroArgument: return "ZeroArgument";
    case ErrorCode::OutOfDomain: return "OutOfDomain";
    case ErrorCode::RejectionStarvation: return "RejectionStarvation";
    case ErrorCode::BadDelta: return "BadDelta";
  }
  return "Unknown";
}

}  // namespace hypbound
