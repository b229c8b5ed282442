#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace fibcomm {

enum class ErrorCode {
  InvalidArgument,
  ZeroClass,
  ArityMismatch,
  ZeroPolynomial,
  Unsupported,
  NoRootAboveOne,
  DimensionMismatch,
  DegenerateNorm,
  UnboundedCone,
  MissingPolynomial,
  NotInCone,
  NotPrimitive,
  NotOnFace,
  OrbitOverflow,
  HypothesisUnmet,
  ParseError,
  ValidationError,
  Internal,
};

std::string_view to_string(ErrorCode code);

/// Every domain failure in the library is reported as an Error carrying a
/// stable code; the CLI maps these to exit status 1.
class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

private:
  ErrorCode code_;
};

[[noreturn]] void fail(ErrorCode code, const std::string& what);

} // namespace fibcomm
