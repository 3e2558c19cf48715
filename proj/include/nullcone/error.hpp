#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace nullcone {

enum class ErrorCode {
  InvalidArgument,
  Parse,
  Eval,
  Signature,
  DomainExit,
  NonNull,
  PastPointing,
  DegenerateOrbit,
  StepUnderflow,
  Io,
};

const char* to_string(ErrorCode code);

// All recoverable failures in the library are reported through this type.
// `offset` is the source position for parse and evaluation errors.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message,
        std::optional<std::size_t> offset = std::nullopt);

  ErrorCode code() const noexcept { return code_; }
  std::optional<std::size_t> offset() const noexcept { return offset_; }

 private:
  ErrorCode code_;
  std::optional<std::size_t> offset_;
};

}  // namespace nullcone
