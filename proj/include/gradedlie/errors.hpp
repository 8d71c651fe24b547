#pragma once
// Error types shared across the library.

#include <stdexcept>
#include <string>

namespace gradedlie {

// Violation of a mathematical or interface contract on otherwise well formed input.
struct DomainError : std::runtime_error {
  explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

// Syntax error in an element or presentation file, with 1-based position info.
struct ParseError : std::runtime_error {
  ParseError(const std::string& what, int line_no, int column_no)
      : std::runtime_error("line " + std::to_string(line_no) + ", column " +
                           std::to_string(column_no) + ": " + what),
        line(line_no),
        column(column_no) {}

  int line;
  int column;
};

}  // namespace gradedlie
