#ifndef JACKIDEAL_ERRORS_HPP
#define JACKIDEAL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace jackideal {

struct DivisionByZero : std::domain_error {
  DivisionByZero() : std::domain_error("division by zero") {}
};

/// Evaluation of a rational function at a pole.
struct PoleError : std::domain_error {
  explicit PoleError(int order)
      : std::domain_error("pole of order " + std::to_string(order)), order(order) {}
  int order;
};

struct InvalidParameters : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct DegreeMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct NotSymmetric : std::domain_error {
  NotSymmetric() : std::domain_error("polynomial is not symmetric") {}
};

struct InvalidNode : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct DegreeOverflow : std::out_of_range {
  using std::out_of_range::out_of_range;
};

/// Raised when an expansion would exceed the configured term budget.
struct ResourceLimit : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace jackideal

#endif  // JACKIDEAL_ERRORS_HPP
