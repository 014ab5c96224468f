#pragma once

#include <exception>
#include <string>
#include <string_view>

namespace stegodct {

// Every failure the library reports carries one of these kinds. The CLI
// maps them onto exit codes: 2 usage, 3 capacity/format, 4 integrity.
enum class ErrorKind {
  InvalidArgument,
  MalformedHex,
  InvalidPadding,
  LengthMismatch,
  CharsetViolation,
  DimensionNotMultipleOf8,
  NonFiniteCoefficient,
  InsufficientCapacity,
  PlanPlaneMismatch,
  DimensionMismatch,
  NotFound,
  BadMagic,
  MaxvalNot255,
  TruncatedData,
  TooSmall,
  IoFailure,
  KeyfileMalformed,
};

const char* to_string(ErrorKind kind) noexcept;

class Error : public std::exception {
 public:
  Error(ErrorKind kind, std::string message);

  const char* what() const noexcept override { return what_.c_str(); }
  ErrorKind kind() const noexcept { return kind_; }
  const std::string& stage() const noexcept { return stage_; }
  const std::string& message() const noexcept { return message_; }

  // Pipeline stages tag errors once so callers can see where a run failed.
  // A stage that is already set is kept.
  void set_stage(std::string_view stage);

 private:
  void rebuild_what();

  ErrorKind kind_;
  std::string stage_;
  std::string message_;
  std::string what_;
};

[[noreturn]] void raise(ErrorKind kind, std::string message);

}  // namespace stegodct
