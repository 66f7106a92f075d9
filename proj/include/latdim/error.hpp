#pragma once

#include <stdexcept>
#include <string>

namespace latdim {

enum class ErrorCode {
  InvalidInput,
  NotAssociative,
  NotLatinSquare,
  NoIdentity,
  BoundExceeded,
  DimensionMismatch,
  NotAbelian,
  NotIrreducible,
  WindowNotUnit,
  PreconditionFailed,
  NotHermitian,
  Infeasible,
  Internal,
};

const char* to_string(ErrorCode code) noexcept;

/// Single exception type for the library; `code()` tells callers which
/// contract was violated.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace latdim
