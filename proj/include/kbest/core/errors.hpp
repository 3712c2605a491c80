#pragma once

#include <stdexcept>
#include <string>

namespace kbest {

/// Malformed path or edge linkage.
class StructureError : public std::runtime_error {
 public:
  StructureError(const std::string& what, std::size_t index)
      : std::runtime_error(what), index_(index) {}
  std::size_t index() const noexcept { return index_; }

 private:
  std::size_t index_;
};

/// A caller broke an operation's precondition (e.g. asked about an unclosed state).
class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// An internal invariant was violated; indicates an engine bug rather than bad input.
class InvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Enumeration walk revisited a (state, residual) pair on its own stack: a zero-weight cycle.
class EnumerationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Rejected configuration (inconsistent heuristic, empty algorithm list, ...).
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input file parse failure. `line()` is 1-based, 0 when not applicable.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line)
      : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace kbest
