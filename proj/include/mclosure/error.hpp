#pragma once

#include <stdexcept>
#include <string>

namespace mclosure {

// Malformed text or manifest input.
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// Shapes that do not fit together (lengths, ranks, rings, variable roles).
class StructuralError : public std::runtime_error {
 public:
  explicit StructuralError(const std::string& what) : std::runtime_error(what) {}
};

// Well-formed input outside the domain of an operation.
class DomainError : public std::runtime_error {
 public:
  explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

// Input the implementation recognises but does not handle.
class UnsupportedInput : public std::runtime_error {
 public:
  explicit UnsupportedInput(const std::string& what) : std::runtime_error(what) {}
};

// An internal identity check failed. Indicates a bug, never bad input.
class InternalError : public std::logic_error {
 public:
  explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace mclosure
