#pragma once

#include <stdexcept>
#include <string>

namespace biperiodic {

// Zero base with a negative exponent, or inversion of a singular matrix.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Parameters for which a K-based result is undefined (discriminant zero).
class DegenerateParameterError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// det(I - K^m) == 0: the partial-sum geometric series has no closed form.
class SingularSeriesError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// a, b or c equal to zero, or an otherwise invalid argument.
class InvalidParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Malformed rational literal.
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Unknown catalog key or wrong argument count.
class LookupError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

}  // namespace biperiodic
