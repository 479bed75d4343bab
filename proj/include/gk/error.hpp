#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace gk {

enum class ErrorCode {
  InvalidArgument,
  MagnitudeExceeded,
  IllegalSpec,
  Unsupported,
  InvalidExponent,
  BoundTooSmall,
  Domain,
  Parse,
};

// Stable machine-readable tag, e.g. "E_MAGNITUDE".
std::string_view error_tag(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

}  // namespace gk
