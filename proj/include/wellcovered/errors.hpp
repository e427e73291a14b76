#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace wc {

/// Root of every error the library throws.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class VertexRangeError : public Error {
 public:
  using Error::Error;
};

class SelfLoopError : public Error {
 public:
  using Error::Error;
};

class DisconnectedGraphError : public Error {
 public:
  using Error::Error;
};

/// A caller violated an operation's precondition (e.g. dependent input to
/// greedy_extend, non-SCCG input to the count formula).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

class DimensionMismatchError : public Error {
 public:
  using Error::Error;
};

class FieldMismatchError : public Error {
 public:
  using Error::Error;
};

/// Enumeration or search exceeded a configured size limit.
class ResourceLimitError : public Error {
 public:
  ResourceLimitError(const std::string& what, std::size_t limit)
      : Error(what), limit_(limit) {}
  std::size_t limit() const noexcept { return limit_; }

 private:
  std::size_t limit_;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& message)
      : Error("line " + std::to_string(line) + ": " + message), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace wc
