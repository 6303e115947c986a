#ifndef POLYADJ_TESTS_FIXTURES_HPP
#define POLYADJ_TESTS_FIXTURES_HPP

#include <initializer_list>
#include <random>
#include <vector>

#include "polyadj/adjoint.hpp"
#include "polyadj/io.hpp"
#include "polyadj/polytope.hpp"

namespace fixtures {

using polyadj::Index;
using polyadj::LinearForm;
using polyadj::Polytope;
using polyadj::QMatrix;
using polyadj::QVector;
using polyadj::Rational;

inline QVector vec(std::initializer_list<Rational> xs)
{
    QVector v(static_cast<Index>(xs.size()));
    Index i = 0;
    for (const Rational& x : xs)
        v[i++] = x;
    return v;
}

inline LinearForm form(std::initializer_list<Rational> xs) { return LinearForm::oriented(vec(xs)); }

inline Polytope segment() { return Polytope::from_vertices({vec({0}), vec({1})}); }

inline Polytope unit_square()
{
    return Polytope::from_vertices({vec({0, 0}), vec({1, 0}), vec({0, 1}), vec({1, 1})});
}

inline Polytope square_pm()
{
    return Polytope::from_vertices({vec({-1, -1}), vec({1, -1}), vec({-1, 1}), vec({1, 1})});
}

inline Polytope cube_pm()
{
    std::vector<QVector> v;
    for (int a : {-1, 1})
        for (int b : {-1, 1})
            for (int c : {-1, 1})
                v.push_back(vec({a, b, c}));
    return Polytope::from_vertices(v);
}

inline Polytope unit_cube()
{
    std::vector<QVector> v;
    for (int a : {0, 1})
        for (int b : {0, 1})
            for (int c : {0, 1})
                v.push_back(vec({a, b, c}));
    return Polytope::from_vertices(v);
}

inline Polytope octahedron()
{
    return Polytope::from_vertices({vec({1, 0, 0}), vec({-1, 0, 0}), vec({0, 1, 0}), vec({0, -1, 0}),
                                    vec({0, 0, 1}), vec({0, 0, -1})});
}

/// Standard simplex scaled by 4 with two truncated vertices.
inline Polytope truncated_simplex()
{
    return Polytope::from_inequalities({form({0, 1, 0, 0, 0}), form({0, 0, 1, 0, 0}), form({0, 0, 0, 1, 0}),
                                        form({0, 0, 0, 0, 1}), form({4, -1, -1, -1, -1}),
                                        form({6, -2, 0, -1, 0}), form({6, 0, -2, 0, 1})},
                                       4);
}

inline Polytope standard_simplex(Index n)
{
    std::vector<QVector> v{QVector::Zero(n)};
    for (Index i = 0; i < n; ++i)
        v.push_back(QVector::Unit(n, i));
    return Polytope::from_vertices(v);
}

/// Reference octahedron adjoint written with the
/// homogenizing coordinate last; variables renamed here to put it first.
inline polyadj::HomoPoly octahedron_quartic()
{
    const polyadj::HomoPoly last = polyadj::parse_polynomial(
        "-X0^4+2*X0^2*X1^2+2*X0^2*X2^2-2*X0^2*X3^2-X1^4+2*X1^2*X2^2-2*X1^2*X3^2-X2^4-2*X2^2*X3^2+3*X3^4", 4);
    QMatrix rename = QMatrix::Zero(4, 4);
    rename(0, 1) = 1;
    rename(1, 2) = 1;
    rename(2, 3) = 1;
    rename(3, 0) = 1;
    return polyadj::linear_substitute(last, rename);
}

/// Pyramid with apex (0, 0, h) over the polygon placed at height 0.
inline Polytope pyramid(const std::vector<QVector>& polygon, const Rational& h)
{
    std::vector<QVector> v;
    for (const QVector& p : polygon)
        v.push_back(vec({p[0], p[1], 0}));
    v.push_back(vec({0, 0, h}));
    return Polytope::from_vertices(v);
}

/// Convex hull of random integer points in [-range, range]^n, retried until
/// full-dimensional with at most max_facets facets.
inline Polytope random_hull(std::mt19937& rng, Index n, int points, int range, Index max_facets)
{
    std::uniform_int_distribution<int> coord(-range, range);
    for (;;) {
        std::vector<QVector> pts;
        for (int k = 0; k < points; ++k) {
            QVector x(n);
            for (Index i = 0; i < n; ++i)
                x[i] = coord(rng);
            pts.push_back(x);
        }
        try {
            Polytope p = Polytope::from_vertices(pts);
            if (p.num_facets() <= max_facets && p.num_facets() > n + 1)
                return p;
        } catch (const std::exception&) {
        }
    }
}

/// The box [-2, 2]^n cut by random halfspaces containing the origin; the
/// parallel box facets give points at infinity.
inline Polytope random_cut_box(std::mt19937& rng, Index n, int cuts, Index max_facets)
{
    std::uniform_int_distribution<int> coef(-3, 3);
    std::uniform_int_distribution<int> offset(2, 5);
    for (;;) {
        std::vector<LinearForm> forms;
        for (Index i = 0; i < n; ++i) {
            QVector lo = QVector::Zero(n + 1);
            lo[0] = 2;
            lo[i + 1] = 1;
            QVector hi = QVector::Zero(n + 1);
            hi[0] = 2;
            hi[i + 1] = -1;
            forms.push_back(LinearForm::oriented(lo));
            forms.push_back(LinearForm::oriented(hi));
        }
        for (int k = 0; k < cuts; ++k) {
            QVector c(n + 1);
            bool nonzero = false;
            for (Index i = 1; i <= n; ++i) {
                c[i] = coef(rng);
                nonzero = nonzero || c[i] != 0;
            }
            if (!nonzero)
                continue;
            c[0] = offset(rng);
            forms.push_back(LinearForm::oriented(c));
        }
        try {
            Polytope p = Polytope::from_inequalities(forms, n);
            if (p.num_facets() <= max_facets)
                return p;
        } catch (const std::exception&) {
        }
    }
}

}  // namespace fixtures

#endif
