#pragma once

#include <stdexcept>
#include <string>

namespace galorb {

/// Error categories raised by the library. The CLI maps each to an exit code.
enum class ErrorCode {
  InvalidArgument,    ///< precondition or invariant violated by the caller
  DimensionMismatch,
  Parse,              ///< malformed textual input
  UnsupportedType,    ///< indecomposable outside the built-in catalog
  AffineScope,        ///< affine core outside the built-in catalog
  NonaffineScope,     ///< nonaffine core outside the built-in catalog
  IndexMismatch,      ///< summand indices cannot be placed in the ambient form
  NotRealizable,      ///< no rational representative for the requested data
};

inline const char* error_code_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::InvalidArgument: return "INVALID_ARGUMENT";
    case ErrorCode::DimensionMismatch: return "DIMENSION_MISMATCH";
    case ErrorCode::Parse: return "PARSE_ERROR";
    case ErrorCode::UnsupportedType: return "UNSUPPORTED_TYPE";
    case ErrorCode::AffineScope: return "AFFINE_SCOPE";
    case ErrorCode::NonaffineScope: return "NONAFFINE_SCOPE";
    case ErrorCode::IndexMismatch: return "INDEX_MISMATCH";
    case ErrorCode::NotRealizable: return "NOT_REALIZABLE";
  }
  return "UNKNOWN";
}

/// True for errors that mean "valid input, but beyond what the catalog covers".
inline bool is_scope_error(ErrorCode c) {
  return c == ErrorCode::UnsupportedType || c == ErrorCode::AffineScope ||
         c == ErrorCode::NonaffineScope || c == ErrorCode::IndexMismatch ||
         c == ErrorCode::NotRealizable;
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

inline void require(bool cond, const std::string& what) {
  if (!cond) fail(ErrorCode::InvalidArgument, what);
}

}  // namespace galorb
