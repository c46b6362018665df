#pragma once

#include <stdexcept>
#include <string>

namespace asg {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed automaton document. Line and column are 1-based.
class ParseError : public Error {
 public:
  ParseError(int line, int column, const std::string& what)
      : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

/// Well-formed document describing an invalid automaton.
class ValidationError : public Error {
 public:
  using Error::Error;
};

class LimitExceeded : public Error {
 public:
  using Error::Error;
};

/// Raised by operations that need a bounded automaton.
class NotBounded : public Error {
 public:
  using Error::Error;
};

class NotLevelTransitive : public Error {
 public:
  using Error::Error;
};

class NotACovering : public Error {
 public:
  NotACovering(int vertex, const std::string& reason)
      : Error("not an unramified covering at total vertex " + std::to_string(vertex) + ": " + reason),
        vertex_(vertex) {}

  int vertex() const { return vertex_; }

 private:
  int vertex_;
};

class NotNormal : public Error {
 public:
  using Error::Error;
};

class NonAbelianUnsupported : public Error {
 public:
  using Error::Error;
};

class LoopsUnsupported : public Error {
 public:
  using Error::Error;
};

class DisconnectedGraph : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

/// An exact division left a remainder. Indicates a bug in the caller.
class ExactDivisionFailure : public Error {
 public:
  using Error::Error;
};

class OrderMismatch : public Error {
 public:
  using Error::Error;
};

class NotRationalInteger : public Error {
 public:
  explicit NotRationalInteger(int index)
      : Error("coefficient " + std::to_string(index) + " is not a rational integer"), index_(index) {}

  int index() const { return index_; }

 private:
  int index_;
};

}  // namespace asg
