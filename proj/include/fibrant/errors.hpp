#pragma once

#include <stdexcept>
#include <string>

namespace fibrant {

enum class ErrorCode {
  kStructural,
  kResourceLimit,
  kNotPrimary,
  kNoStabilization,
  kContainment,
  kNotAReductionWithinBound,
  kSearchExhausted,
  kHypothesis,
  kRegularityNotEstablished,
  kInsufficientDepth,
  kMissingRationalForm,
  kInternalInconsistency,
  kParse,
};

const char* to_string(ErrorCode code);

/// Base error type for every failure raised by the library.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace fibrant
