#pragma once

#include <stdexcept>
#include <string>

namespace chordkit {

// Precondition violation (bad parameter range, diagram outside the class an
// operation requires, ...). The CLI maps this to exit status 1.
class DomainError : public std::runtime_error {
 public:
  explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

// Malformed diagram text.
class ParseError : public DomainError {
 public:
  explicit ParseError(const std::string& what) : DomainError(what) {}
};

}  // namespace chordkit
