#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cpg {

// Numeric values double as CLI exit codes.
enum class ErrorCode : int {
  kInput = 2,
  kBudgetExhausted = 3,
  kInternal = 4,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Malformed or out-of-contract input: bad syntax, wrong arity, violated
/// parameter constraints, degree caps.
class InputError : public Error {
 public:
  explicit InputError(const std::string& what)
      : Error(ErrorCode::kInput, what) {}
};

/// Syntax error carrying the 0-based character offset into the source text.
class ParseError : public InputError {
 public:
  ParseError(const std::string& what, std::size_t position)
      : InputError(what + " at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// A mathematical precondition failed. `witness` names the offending object
/// (for example a permutation in cycle notation).
class PreconditionError : public InputError {
 public:
  PreconditionError(const std::string& what, std::string witness)
      : InputError(witness.empty() ? what : what + " (witness " + witness + ")"),
        witness_(std::move(witness)) {}
  const std::string& witness() const noexcept { return witness_; }

 private:
  std::string witness_;
};

/// A search or enumeration ran past its configured budget. The answer is
/// unknown, not negative.
class BudgetExhausted : public Error {
 public:
  explicit BudgetExhausted(const std::string& what)
      : Error(ErrorCode::kBudgetExhausted, what) {}
};

/// A certified step failed. Always a bug in this library, never bad input.
class CertificationFailure : public Error {
 public:
  explicit CertificationFailure(const std::string& what)
      : Error(ErrorCode::kInternal, what) {}
};

}  // namespace cpg
