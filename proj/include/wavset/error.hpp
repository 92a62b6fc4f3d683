#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace wavset {

/// Machine-readable classification of library failures. The CLI reports the
/// code string alongside the message.
enum class ErrorCode {
  InvalidInput,    // malformed data (bad interval, bad JSON, bad table)
  Precondition,    // operation called outside its contract
  OutOfRange,      // family parameter outside its admissible range
  Infeasible,      // decomposition hypothesis (majorization) fails
  NotWaveletSet,   // a wavelet set was required and the verdict was negative
  OrbitExhausted,  // point not reachable in the bounded dilation scan
  RefinementLimit, // map composition exceeded the piece cap
  Internal,        // a postcondition check failed
};

std::string_view error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace wavset
