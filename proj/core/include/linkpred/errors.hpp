#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace linkpred {

// Malformed input data. `line` is 1-based; 0 means "not line-addressable".
class ParseError : public std::runtime_error {
 public:
  ParseError(std::string message, std::size_t line = 0)
      : std::runtime_error(std::move(message)), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// A node id or label that does not exist in the graph.
class LookupError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An operation applied outside its domain (e.g. ALC on a non-edge).
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Filesystem-level failure (missing or unwritable path).
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace linkpred
