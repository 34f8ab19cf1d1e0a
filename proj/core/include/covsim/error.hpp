#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace covsim {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input text. Line and column are 1-based.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message)
      : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// Structurally invalid alphabet or transition system.
class InvalidSystem : public Error {
 public:
  using Error::Error;
};

/// Two systems over different alphabets (or partitions) were compared.
class AlphabetMismatch : public Error {
 public:
  using Error::Error;
};

}  // namespace covsim
