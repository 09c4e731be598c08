#pragma once

#include <stdexcept>
#include <string>

namespace jtvo {

// Matrix dimensions do not fit the operation.
class ShapeError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

// An integer parameter lies outside the admissible range.
class RangeError : public std::out_of_range {
public:
  using std::out_of_range::out_of_range;
};

// An argument lies outside the domain of a map (foreign generators,
// malformed Frobenius coordinates, ...).
class DomainError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

// Malformed textual literal (shape, state, coefficient, word).
class ParseError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

// The requested computation is not defined for this generator family.
class UnsupportedFamily : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

// An identity that must hold exactly was found violated. Thrown by the
// built-in self-checks; it always signals a bug in a family or in the code.
class IdentityViolation : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

}  // namespace jtvo
