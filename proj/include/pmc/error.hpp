#pragma once

#include <stdexcept>
#include <string>

namespace pmc {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A value violates a precondition (bad label, mixed dimensions, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Malformed facet-list or map input; carries the 1-based position.
class ParseError : public Error {
 public:
  ParseError(int line, int column, const std::string& what)
      : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}
  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  int line_;
  int column_;
};

/// A file could not be read or written.
class IoError : public Error {
 public:
  using Error::Error;
};

/// A bistellar move was requested on a face that is not removable.
class MoveError : public Error {
 public:
  using Error::Error;
};

/// A move script failed at a given (0-based) step.
class ScriptError : public MoveError {
 public:
  ScriptError(std::size_t step, const std::string& face, const std::string& why)
      : MoveError("step " + std::to_string(step + 1) + " (" + face + "): " + why), step_(step), face_(face) {}
  std::size_t step() const noexcept { return step_; }
  const std::string& face() const noexcept { return face_; }

 private:
  std::size_t step_;
  std::string face_;
};

/// A non-neighbourly input admitted no bistellar 1-move.
class NoOneMoveError : public Error {
 public:
  using Error::Error;
};

/// Catalog or census data disagrees with itself.
class IntegrityError : public Error {
 public:
  using Error::Error;
};

}  // namespace pmc
