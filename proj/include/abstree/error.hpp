#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace abstree {

enum class ErrorCode {
  NotATree,
  BadLabel,
  DuplicateEdge,
  NotAnEdge,
  BadPartition,
  BadArity,
  ShapeMismatch,
  BadAssignment,
  BadParameters,
  OutOfRange,
  DegenerateEdge,
  UnknownLemma,
  ParseError,
};

std::string_view error_code_name(ErrorCode code) noexcept;

// Every domain failure in the library is reported as an Error carrying a code.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace abstree
