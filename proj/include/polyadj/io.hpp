#ifndef POLYADJ_IO_HPP
#define POLYADJ_IO_HPP

// Text formats: exact rationals, polynomials, the JSON polytope document and
// plain matrix files.
//
// Polynomial format: terms in descending graded-lex order, variables X0..Xn,
// `*` between factors, `^k` for k >= 2, no spaces, coefficient 1 elided.
// Example: -X0^4+2*X0^2*X1^2+3*X3^4.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "polyadj/poly.hpp"
#include "polyadj/polytope.hpp"

namespace polyadj {

/// "p" or "p/q" with q > 0; throws InputError.
Rational parse_rational(std::string_view text);
std::string format_rational(const Rational& x);

std::string format_polynomial(const HomoPoly& f);
/// Parses the polynomial format; spaces are ignored and coefficients may be
/// rational. Throws InputError on syntax errors, unknown variables (index >=
/// nvars) and inhomogeneous input.
HomoPoly parse_polynomial(std::string_view text, Index nvars);

/// {"dim": n, "vertices": [[..]], "inequalities": [[a0, .., an]]}; entries are
/// strings "p" or "p/q" or JSON integers.
struct PolytopeDocument {
    Index dim = 0;
    std::optional<std::vector<QVector>> vertices;
    std::optional<std::vector<QVector>> inequalities;
};

PolytopeDocument parse_document(std::string_view text);
std::string write_document(const PolytopeDocument& doc);

/// Builds the polytope from whichever representations are present.
Polytope to_polytope(const PolytopeDocument& doc);

/// Whitespace-separated rows of rationals; blank lines and `#` comments skipped.
QMatrix parse_matrix(std::string_view text);

/// Entries joined by single spaces.
std::string format_row(const QVector& v);

}  // namespace polyadj

#endif
