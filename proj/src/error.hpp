#pragma once

#include <stdexcept>
#include <string>

namespace hypbound {

enum class ErrorCode {
  InvalidArgument,
  ParseError,
  IoError,
  NotInDomain,
  NotOnBoundary,
  EmptySet,
  HypothesisViolated,
  TruncationExceeded,
  MalformedPath,
  ZeroArgument,
  OutOfDomain,
  RejectionStarvation,
  BadDelta,
};

const char* to_string(ErrorCode code) noexcept;

/// Every failure raised by the core carries one of the codes above; the C API
/// maps them one-to-one onto hb_status values.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace hypbound
