#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace linarr {

enum class ErrorKind {
  parse,
  invalid_argument,
  duplicate_line,
  not_bipencil,
  unknown_reference,
  budget_exceeded,
  non_isolated,
  inconclusive,
  missing_datum,
  internal,
};

std::string_view to_string(ErrorKind kind);

/// Domain error raised by every module. The kind is stable and is what the
/// CLI reports in its machine-readable error object.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace linarr
