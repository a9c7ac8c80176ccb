#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace sbp {

enum class ErrorKind {
  InvalidGroup,
  InvalidElement,
  UnsupportedGroup,
  UnsupportedDegree,
  InvalidParameter,
  InvalidInput,
  InvalidTransform,
  Parse,
  InvalidId,
  InvalidPair,
  InvalidLabel,
  NotSplit,
  TheoremViolation,
  SearchBudget,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library carries one of the kinds above.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Raised by parseTable; position is the zero-based entry index, or -1 for arity errors.
class ParseError : public Error {
 public:
  ParseError(long position, const std::string& message)
      : Error(ErrorKind::Parse, message), position_(position) {}

  long position() const noexcept { return position_; }

 private:
  long position_;
};

}  // namespace sbp
