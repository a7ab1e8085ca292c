#pragma once

#include <stdexcept>
#include <string>

namespace extgraph {

// A precondition on the mathematical input failed (disconnected graph, odd
// target, non-regular input, ...). The CLI maps this to exit code 1.
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Graph construction violated simplicity or range invariants.
class GraphError : public DomainError {
 public:
  using DomainError::DomainError;
};

enum class ParseErrorKind {
  MalformedHeader,
  MalformedEdge,
  VertexOutOfRange,
  DuplicateEdge,
  Loop,
  NegativeWeight,
  BadWeight,
  EdgeCountMismatch,
  MalformedRotation,
};

const char* to_string(ParseErrorKind kind);

class ParseError : public DomainError {
 public:
  ParseError(ParseErrorKind kind, int line, const std::string& detail)
      : DomainError("line " + std::to_string(line) + ": " + to_string(kind) + ": " + detail),
        kind_(kind),
        line_(line) {}

  ParseErrorKind kind() const { return kind_; }
  int line() const { return line_; }

 private:
  ParseErrorKind kind_;
  int line_;
};

}  // namespace extgraph
