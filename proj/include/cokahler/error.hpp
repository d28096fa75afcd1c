#pragma once

#include <stdexcept>
#include <string>

namespace cokahler {

/// Raised when inputs violate a structural precondition: mismatched
/// algebras, degree mismatches, unknown generators, non-closed subspaces.
class StructuralError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when an operation is asked to act outside its hypotheses, e.g.
/// the Lefschetz map on a form that is not invariant under the Reeb field.
class RefusedError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Model-file parse failure with a line number (0 when not line-specific).
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

}  // namespace cokahler
