#pragma once

#include <stdexcept>
#include <string>

namespace mayerkit {

// Requested size is beyond what the exhaustive/brute-force routines support.
class CapacityError : public std::length_error {
 public:
  using std::length_error::length_error;
};

// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Malformed or inconsistent user input (configs, coefficient tables, tuples).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An integral that should be finite is not.
class DivergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace mayerkit
