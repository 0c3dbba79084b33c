#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace steiner {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed external input (edge lists, weight files, certificates).
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  explicit ParseError(const std::string& what) : Error(what) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_ = 0;
};

/// An operation was called outside its domain (disconnected graph, k out of
/// range, graph with a triangle where triangle-freeness is required, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A required parameter was not supplied.
class UsageError : public Error {
 public:
  using Error::Error;
};

/// A fixed-width accumulator would have wrapped around.
class OverflowError : public Error {
 public:
  using Error::Error;
};

}  // namespace steiner
