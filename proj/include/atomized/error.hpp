#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace atomized {

enum class ErrorKind {
  EmptySignature,
  DuplicateConstant,
  InvalidConstantName,
  UnknownConstant,
  SignatureMismatch,
  EmptyAtom,
  EmptyTerm,
  ZeroAtomHasNoPinningTerm,
  CapExceeded,
  EmptyRestrictionSet,
  UnknownTargetConstant,
  RenameMapIncomplete,
  NameCollision,
  TrivialModel,
  InvalidArgument,
  ParseError,
  UndeclaredConstant,
};

const char* to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

// Script and document errors; `line` is 1-based, 0 when not tied to a line.
class ParseError : public Error {
 public:
  ParseError(ErrorKind kind, std::size_t line, const std::string& message)
      : Error(kind, "line " + std::to_string(line) + ": " + message), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace atomized
