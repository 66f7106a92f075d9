#include "latdim/error.hpp"

namespace latdim {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidInput: return "InvalidInput";
    case ErrorCode::NotAssociative: return "NotAssociative";
    case ErrorCode::NotLatinSquare: return "NotLatinSquare";
    case ErrorCode::NoIdentity: return "NoIdentity";
    case ErrorCode::BoundExceeded: return "BoundExceeded";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NotAbelian: return "NotAbelian";
    case ErrorCode::NotIrreducible: return "NotIrreducible";
    case ErrorCode::WindowNotUnit: return "WindowNotUnit";
    case ErrorCode::PreconditionFailed: return "PreconditionFailed";
    case ErrorCode::NotHermitian: return "NotHermitian";
    case ErrorCode::Infeasible: return "Infeasible";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

}  // namespace latdim
