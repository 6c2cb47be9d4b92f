#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ribbonlink {

enum class ErrorKind {
  EmptyInput,
  Syntax,
  LabelMultiplicity,
  Orientation,
  NonPlanar,
  UnknownEdge,
  NotAlternating,
  SignIncompatible,
  HypothesisViolation,
  InvalidPresentation,
  NotRotated,
  TrivialComponent,
  LimitExceeded,
  UnknownCensusEntry,
  InvalidArgument,
};

const char* to_string(ErrorKind kind);

// Every recoverable failure in the library is reported through this type.
// `position` is a byte offset into the parsed text for syntax errors and
// npos otherwise.
class Error : public std::runtime_error {
 public:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  Error(ErrorKind kind, const std::string& message, std::size_t position = npos)
      : std::runtime_error(message), kind_(kind), position_(position) {}

  ErrorKind kind() const noexcept { return kind_; }
  std::size_t position() const noexcept { return position_; }

 private:
  ErrorKind kind_;
  std::size_t position_;
};

}  // namespace ribbonlink
