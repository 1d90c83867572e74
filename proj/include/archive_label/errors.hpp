#pragma once

#include <stdexcept>
#include <string>

namespace archive_label {

// A digit outside [0, b-1] was supplied for a base-b numeral.
class InvalidDigit : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Sticker text that cannot be parsed or violates the sticker rules.
class InvalidSticker : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Argument outside the mathematical domain of an operation (x = 0 where
// x >= 1 is required, k < n for boundary counts, min_x > bound, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Caller broke a documented precondition (e.g. a place index beyond the
// numeral).
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace archive_label
