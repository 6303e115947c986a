#ifndef POLYADJ_PROJECTIVE_HPP
#define POLYADJ_PROJECTIVE_HPP

// Homogeneous objects in P^n. Coordinate 0 is the homogenizing coordinate X0,
// so the affine point x in R^n is (1 : x_1 : ... : x_n).

#include <vector>

#include "polyadj/exactlin.hpp"

namespace polyadj {

/// l(X) = a_0 X_0 + ... + a_n X_n, stored as a primitive integer vector.
///
/// Facet forms of a polytope keep their orientation (l >= 0 on the polytope),
/// so the sign is left alone unless canonical() is requested.
struct LinearForm {
    QVector coeffs;

    /// Primitive scaling, sign preserved.
    static LinearForm oriented(const QVector& c);
    /// Primitive scaling with a positive first nonzero coefficient.
    static LinearForm canonical(const QVector& c);

    Index nvars() const { return coeffs.size(); }
    Rational operator()(const QVector& homogeneous) const { return coeffs.dot(homogeneous); }
    /// Value on the affine chart X0 = 1.
    Rational at_affine(const QVector& x) const;

    bool proportional_to(const LinearForm& other) const { return proportional(coeffs, other.coeffs); }
    bool operator==(const LinearForm& other) const { return equal(coeffs, other.coeffs); }
};

/// Point of P^n in primitive integer coordinates with a positive first nonzero entry.
struct ProjectivePoint {
    QVector coords;

    static ProjectivePoint from(const QVector& c);
    static ProjectivePoint from_affine(const QVector& x);

    bool is_affine() const { return coords.size() > 0 && coords[0] != 0; }
    QVector affine() const;
    bool operator==(const ProjectivePoint& other) const { return equal(coords, other.coords); }
};

/// A projective linear subspace given both by independent defining forms and
/// by spanning points; #forms + #points = n + 1.
struct LinearSubspace {
    std::vector<LinearForm> defining_forms;
    std::vector<ProjectivePoint> spanning_points;

    /// Projective dimension; -1 for the empty subspace.
    Index dim() const { return static_cast<Index>(spanning_points.size()) - 1; }
    Index codim() const { return static_cast<Index>(defining_forms.size()); }
    /// Spanning points as the columns of an (n+1) x (dim+1) matrix.
    QMatrix basis() const;

    /// Subspace cut out by the given forms (which may be dependent; an
    /// independent subset is kept).
    static LinearSubspace cut_out_by(const std::vector<LinearForm>& forms, Index nvars);
};

/// Restrict a linear form to the hyperplane h by substituting the pivot
/// variable; returns the coefficients in the remaining variables (order kept).
QVector restrict_linear(const QVector& form, const QVector& h, Index pivot);

/// Highest-index variable with a nonzero coefficient.
Index default_pivot(const QVector& h);

}  // namespace polyadj

#endif
