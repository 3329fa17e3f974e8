#pragma once

#include <stdexcept>
#include <string>

namespace unimod {

/// Operand shapes do not agree (vector lengths, matrix orders).
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A search did not reach its target within the configured budget.
class NotFoundError : public std::runtime_error {
 public:
  NotFoundError(const std::string& what, double best)
      : std::runtime_error(what), best_(best) {}
  double best() const { return best_; }

 private:
  double best_;
};

/// A computation contradicts a proved statement. Always an implementation bug.
class TheoremViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Malformed input file; carries the byte offset reported by the parser.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : std::runtime_error(what), offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

/// A file could not be opened or written.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace unimod
