#ifndef POLYADJ_POLY_HPP
#define POLYADJ_POLY_HPP

// Homogeneous polynomials in X0..Xn with exact rational coefficients, and the
// vanishing orders mu_x(f) and mu_L(f) along points and linear subspaces.

#include <map>
#include <vector>

#include "polyadj/exactlin.hpp"
#include "polyadj/projective.hpp"

namespace polyadj {

using Monomial = std::vector<int>;

/// Graded lexicographic order, largest first (X0 > X1 > ... > Xn).
struct GradedLexGreater {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

class HomoPoly {
  public:
    using Terms = std::map<Monomial, Rational, GradedLexGreater>;

    /// The zero polynomial of the given nominal degree.
    HomoPoly(Index nvars, int degree);

    static HomoPoly constant(Index nvars, const Rational& c);
    static HomoPoly variable(Index nvars, Index i);
    static HomoPoly linear(const QVector& coeffs);

    Index nvars() const { return nvars_; }
    int degree() const { return degree_; }
    bool is_zero() const { return terms_.empty(); }
    const Terms& terms() const { return terms_; }
    Rational coefficient(const Monomial& m) const;
    /// Coefficient of the graded-lex leading monomial; zero for f = 0.
    Rational leading_coefficient() const;

    /// Adds c * m; m must have the polynomial's degree.
    void add_term(const Monomial& m, const Rational& c);

    Rational operator()(const QVector& x) const;

    HomoPoly operator-() const;
    HomoPoly& operator+=(const HomoPoly& other);
    HomoPoly& operator-=(const HomoPoly& other);
    HomoPoly& operator*=(const Rational& c);

    friend HomoPoly operator+(HomoPoly a, const HomoPoly& b) { return a += b; }
    friend HomoPoly operator-(HomoPoly a, const HomoPoly& b) { return a -= b; }
    friend HomoPoly operator*(HomoPoly a, const Rational& c) { return a *= c; }
    friend HomoPoly operator*(const Rational& c, HomoPoly a) { return a *= c; }
    friend HomoPoly operator*(const HomoPoly& a, const HomoPoly& b);
    bool operator==(const HomoPoly& other) const;

  private:
    Index nvars_;
    int degree_;
    Terms terms_;
};

HomoPoly add(const HomoPoly& f, const HomoPoly& g);
HomoPoly multiply(const HomoPoly& f, const HomoPoly& g);
HomoPoly scale(const HomoPoly& f, const Rational& c);
HomoPoly power(const HomoPoly& f, int k);

/// q with q * g = f; throws NotDivisible otherwise.
HomoPoly exact_divide(const HomoPoly& f, const HomoPoly& g);

HomoPoly partial_derivative(const HomoPoly& f, Index var);

/// f o m: substitutes X_i -> sum_j m(i, j) Y_j.
HomoPoly linear_substitute(const HomoPoly& f, const QMatrix& m);

/// Substitutes X_pivot = -(sum_{i != pivot} a_i X_i) / a_pivot and drops the
/// pivot variable. The substitution is exact; no rescaling is applied.
HomoPoly restrict_to_hyperplane(const HomoPoly& f, const QVector& h, Index pivot);
HomoPoly restrict_to_hyperplane(const HomoPoly& f, const LinearForm& h, Index pivot);

/// Primitive integer coefficients, positive leading coefficient.
HomoPoly normalized(const HomoPoly& f);
/// f = c g for some nonzero rational c.
bool proportional(const HomoPoly& f, const HomoPoly& g);
/// The scalar c with f = c g, if any.
std::optional<Rational> proportionality_factor(const HomoPoly& f, const HomoPoly& g);

/// mu_x(f): D minus the top power of Y0 after moving x to (1:0:...:0).
int vanishing_order_at_point(const HomoPoly& f, const QVector& x);
int vanishing_order_at_point(const HomoPoly& f, const ProjectivePoint& x);

/// mu_L(f) for the subspace spanned by the columns of basis.
int vanishing_order_along(const HomoPoly& f, const QMatrix& basis);
int vanishing_order_along(const HomoPoly& f, const LinearSubspace& L);

/// All exponent vectors of the given degree, in graded-lex descending order.
std::vector<Monomial> monomials_of_degree(Index nvars, int degree);

}  // namespace polyadj

#endif
