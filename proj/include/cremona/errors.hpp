#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace cremona {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input outside an operation's mathematical domain (zero divisor, degenerate
// matrix, forbidden parameter value, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

// A map has no inverse available in its current representation.
class InverseUnavailable : public Error {
 public:
  using Error::Error;
};

// Argument does not have the shape an operation requires.
class ShapeError : public Error {
 public:
  using Error::Error;
};

// A resource cap (degree, term count) was exceeded.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::string message, int line, int column,
             std::vector<std::string> expected = {});

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }
  const std::vector<std::string>& expected() const noexcept { return expected_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  std::string detail_;
  int line_;
  int column_;
  std::vector<std::string> expected_;
};

// Structured document does not match its schema; path names the offending field.
class SchemaError : public Error {
 public:
  SchemaError(std::string path, const std::string& message)
      : Error(path + ": " + message), path_(std::move(path)) {}

  const std::string& path() const noexcept { return path_; }

 private:
  std::string path_;
};

}  // namespace cremona
