#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mulprob {

// Violated precondition of a mathematical operation (empty urn, zero
// validity, support outside a channel domain, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Malformed ket text. `position` is a 0-based byte offset into the input.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : std::runtime_error(message + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

// An enumeration would exceed the MULPROB_MAX_CELLS budget.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace mulprob
