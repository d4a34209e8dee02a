#pragma once

#include <stdexcept>
#include <string>

namespace gql {

/// Stable error classification; the CLI maps these onto exit codes.
enum class ErrorCode {
  Parse = 2,
  Precondition = 3,
  Invariant = 4,
};

class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

  /// Short machine-readable tag used in structured error output.
  const char* tag() const noexcept {
    switch (code_) {
      case ErrorCode::Parse: return "parse_error";
      case ErrorCode::Precondition: return "precondition_failed";
      case ErrorCode::Invariant: return "invariant_violation";
    }
    return "unknown";
  }

private:
  ErrorCode code_;
};

struct ParseError : Error {
  explicit ParseError(const std::string& what) : Error(ErrorCode::Parse, what) {}
};

struct DomainError : Error {
  explicit DomainError(const std::string& what)
      : Error(ErrorCode::Precondition, what) {}
};

struct InvariantError : Error {
  explicit InvariantError(const std::string& what)
      : Error(ErrorCode::Invariant, what) {}
};

}  // namespace gql
