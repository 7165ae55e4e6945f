#pragma once

#include <stdexcept>
#include <string>

namespace subsume {

/// Base class for errors raised by the engine and its front ends.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Syntax or semantic error in an input file, with a 1-based source position.
class ParseError : public Error {
public:
  ParseError(const std::string& msg, int line, int column)
      : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + msg),
        line_(line),
        column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

private:
  int line_;
  int column_;
};

}  // namespace subsume
