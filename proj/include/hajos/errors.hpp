#ifndef HAJOS_ERRORS_HPP
#define HAJOS_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hajos {

/// Vertices passed to identify() share an arc (or are the same vertex).
class NotIndependentError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Instance exceeds a brute-force size cap (isomorphism n>9, dichromatic n>10).
class TooLargeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Text input rejected; `line` is the 1-based offending line.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// A script statement failed its precondition; `step` is the 1-based statement index.
class ReplayError : public std::runtime_error {
 public:
  ReplayError(std::size_t step, const std::string& what)
      : std::runtime_error("statement " + std::to_string(step) + ": " + what), step_(step) {}
  std::size_t step() const { return step_; }

 private:
  std::size_t step_;
};

/// Lineage store holds a dangling parent reference.
class CorruptStoreError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Population member has no arcs, so no join arc can be drawn.
class CannotRecombineError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A fitness-0 genome that is not the symmetric 5-cycle.
class AnomalyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace hajos

#endif
