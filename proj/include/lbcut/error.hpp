#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace lbcut {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input text. `line()` is 1-based, 0 when not tied to a line.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
        line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// A caller passed arguments that violate an operation's contract.
class ArgumentError : public Error {
 public:
  using Error::Error;
};

/// A structure handed between pipeline stages is inconsistent.
class StructuralError : public Error {
 public:
  using Error::Error;
};

/// Work refused because it would exceed a configured cap.
class ResourceError : public Error {
 public:
  ResourceError(const std::string& what, double projected, double cap)
      : Error(what), projected_(projected), cap_(cap) {}
  double projected() const noexcept { return projected_; }
  double cap() const noexcept { return cap_; }

 private:
  double projected_;
  double cap_;
};

/// Broken internal invariant; always a bug.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace lbcut
