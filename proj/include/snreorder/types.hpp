#ifndef SNREORDER_TYPES_HPP_
#define SNREORDER_TYPES_HPP_

#include <cstdint>
#include <stdexcept>
#include <string>

namespace snr {

// Row/column/supernode indices. All indices are 0-based internally.
using Index = std::int32_t;

// Counts that can exceed the index range (nnz(L), flops).
using Count = std::int64_t;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input text. `line()` is 1-based, 0 when not tied to a line.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Inconsistent structures handed between pipeline stages.
class StructureError : public Error {
 public:
  using Error::Error;
};

// Non-positive pivot met while factoring.
class NotPositiveDefinite : public Error {
 public:
  explicit NotPositiveDefinite(Index column)
      : Error("matrix is not positive definite (pivot at column " +
              std::to_string(column) + ")"),
        column_(column) {}
  Index column() const { return column_; }

 private:
  Index column_;
};

}  // namespace snr

#endif  // SNREORDER_TYPES_HPP_
