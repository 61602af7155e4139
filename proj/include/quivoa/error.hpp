#pragma once

#include <stdexcept>
#include <string>

namespace quivoa {

// Domain-level failure: bad input, mismatched graphs, corrupted descriptors.
class DomainError : public std::runtime_error {
public:
  explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

// Input exceeds a documented capacity guard (e.g. |V| > 24 subset sweeps).
class CapacityError : public DomainError {
public:
  explicit CapacityError(const std::string& what) : DomainError(what) {}
};

// Parse failure with a source position.
class ParseError : public DomainError {
public:
  ParseError(const std::string& what, int line, int column)
      : DomainError(what + " (line " + std::to_string(line) + ", col " +
                    std::to_string(column) + ")"),
        line(line), column(column) {}
  int line;
  int column;
};

}  // namespace quivoa
