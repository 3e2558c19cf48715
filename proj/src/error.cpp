#include "nullcone/error.hpp"

namespace nullcone {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return "invalid argument";
    case ErrorCode::Parse: return "parse error";
    case ErrorCode::Eval: return "evaluation error";
    case ErrorCode::Signature: return "signature violation";
    case ErrorCode::DomainExit: return "domain exit";
    case ErrorCode::NonNull: return "non-null vector";
    case ErrorCode::PastPointing: return "past-pointing vector";
    case ErrorCode::DegenerateOrbit: return "degenerate orbit";
    case ErrorCode::StepUnderflow: return "step underflow";
    case ErrorCode::Io: return "i/o error";
  }
  return "unknown error";
}

namespace {
std::string decorate(ErrorCode code, const std::string& message,
                     std::optional<std::size_t> offset) {
  std::string out = std::string(to_string(code)) + ": " + message;
  if (offset) out += " (at offset " + std::to_string(*offset) + ")";
  return out;
}
}  // namespace

Error::Error(ErrorCode code, const std::string& message,
             std::optional<std::size_t> offset)
    : std::runtime_error(decorate(code, message, offset)),
      code_(code),
      offset_(offset) {}

}  // namespace nullcone
