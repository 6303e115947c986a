#ifndef POLYADJ_ERRORS_HPP
#define POLYADJ_ERRORS_HPP

#include <stdexcept>

namespace polyadj {

/// Malformed or inconsistent user input (documents, polynomial text, indices).
class InputError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// A geometric precondition does not hold: not full-dimensional, unbounded,
/// empty, point not interior, vertex mapped to infinity.
class GeometryError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// A computation contradicted a result that is guaranteed to hold, e.g. the
/// two adjoint routes disagree or the interpolation kernel is not a line.
class TheoremViolation : public std::logic_error {
  public:
    using std::logic_error::logic_error;
};

/// The numerator of a form vanishes on the residue hyperplane, or is not
/// divisible by the non-incident facet forms.
class ResiduePreconditionError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

class NotDivisible : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Vanishing order queries are undefined on the zero polynomial.
class ZeroPolynomial : public std::domain_error {
  public:
    using std::domain_error::domain_error;
};

}  // namespace polyadj

#endif
