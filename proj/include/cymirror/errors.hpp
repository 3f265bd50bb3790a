#pragma once

#include <stdexcept>
#include <string>

namespace cymirror {

/// Input violates a mathematical precondition (non-IP weights, non-reflexive
/// polytope, wrong dimension, ...).
class DomainError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// Malformed textual input.
class ParseError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace cymirror
