#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace msop {

enum class ErrorCode {
  kInvalidChain,
  kNotASuperset,
  kNotInFamily,
  kSolverStall,
  kNonMonotone,
  kInfeasibleInitialSet,
  kNotWellFounded,
  kTooLarge,
  kNoFeasiblePermutation,
  kNoFeasibleSuperset,
  kMissingCertificate,
  kCyclicInput,
  kNotInitial,
  kNotInforest,
  kNotMultitree,
  kInfeasibleOrder,
  kEmptyRemainder,
  kDisconnectedInput,
  kParseError,
  kValidationError,
  kBadParams,
  kInvalidArgument,
};

std::string_view error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

/// A permutation prefix left the feasible family.
class InfeasibleInitialSetError : public Error {
 public:
  InfeasibleInitialSetError(int prefix_length, const std::string& message)
      : Error(ErrorCode::kInfeasibleInitialSet, message), prefix_length_(prefix_length) {}

  int prefix_length() const { return prefix_length_; }

 private:
  int prefix_length_;
};

class ParseError : public Error {
 public:
  ParseError(int line, int column, const std::string& message)
      : Error(ErrorCode::kParseError,
              "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " +
                  message),
        line_(line),
        column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

}  // namespace msop
