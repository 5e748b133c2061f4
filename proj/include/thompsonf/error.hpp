#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace thompsonf {

enum class ErrorCode {
  ParseError,
  NotPowerOfTwo,
  NotMonotone,
  SlopeNotPowerOfTwo,
  CoordinateOutOfRange,
  OutOfRange,
  NotInOrbital,
  IterationCap,
  BadInput,
  NegativeIndex,
  SyntaxError,
  UnboundName,
  SupportOutOfRange,
  NotFiniteIndex,
};

std::string_view error_code_name(ErrorCode code);

// Parse and validation failures (as opposed to mathematical ones such as
// NotFiniteIndex). The CLI maps these to exit code 2, the rest to 3.
bool is_validation_error(ErrorCode code);

class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

private:
  ErrorCode code_;
};

class SyntaxError : public Error {
public:
  SyntaxError(std::size_t position, const std::string& message)
      : Error(ErrorCode::SyntaxError, message + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

private:
  std::size_t position_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace thompsonf
