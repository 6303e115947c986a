#ifndef POLYADJ_ADJOINT_HPP
#define POLYADJ_ADJOINT_HPP

// The adjoint polynomial adj_P, by Warren's triangulation formula over the
// polar dual and by interpolation of the vanishing orders on the point
// residual, plus checks of the order inequalities.

#include <optional>
#include <vector>

#include "polyadj/arrangement.hpp"
#include "polyadj/poly.hpp"
#include "polyadj/polytope.hpp"

namespace polyadj {

/// A permutation of vertex indices, smallest first.
using VertexOrder = std::vector<Index>;

struct Simplex {
    /// n+1 sorted vertex indices.
    std::vector<Index> vertices;
    /// |det| of the edge matrix.
    Rational volume;
};

struct Triangulation {
    std::vector<Simplex> simplices;

    Rational total_volume() const;
};

/// Vertex indices sorted lexicographically by coordinates.
VertexOrder lexicographic_order(const Polytope& q);

/// Pulls the order-minimal vertex over the pulled facets that miss it.
Triangulation pulling_triangulation(const Polytope& q, const VertexOrder& order);

/// An order with v first and the other vertices by index. Throws InputError
/// when face is not a face of q or v is not in it, and TheoremViolation when
/// some simplex meets the face outside a facet of the face away from v.
VertexOrder face_constrained_order(const Polytope& q, const std::vector<Index>& face, Index v);

/// True when every simplex meets the face, apart from v, inside a facet of the face.
bool meets_face_in_facets(const Polytope& q, const Triangulation& t,
                          const std::vector<Index>& face, Index v);

struct WarrenOptions {
    /// Interior point used for the polar dual; the vertex centroid by default.
    std::optional<QVector> interior;
    /// Order on the dual vertices (= facets of p); lexicographic by default.
    std::optional<VertexOrder> order;
};

/// Warren's sum over a pulling triangulation of the polar dual, pulled back
/// through the translation, normalized.
HomoPoly warren_adjoint(const Polytope& p, const WarrenOptions& options = {});

struct InterpolationSystem {
    /// One row per (residual point, derivative multi-index); one column per monomial.
    QMatrix matrix;
    std::vector<Monomial> monomials;
    int degree = 0;
};

/// Vanishing conditions on the point residual for degree d-n-1 polynomials.
InterpolationSystem interpolation_system(const Polytope& p);

struct InterpolationResult {
    HomoPoly adjoint;
    Index kernel_dim = 0;
    Index rows = 0;
    Index unknowns = 0;
};

/// Solves the interpolation system. The kernel dimension is reported, and
/// adjoint is the normalized generator when it is one (zero otherwise).
InterpolationResult solve_interpolation(const Polytope& p);

/// The interpolation generator; throws TheoremViolation unless the kernel
/// has dimension one.
HomoPoly interpolation_adjoint(const Polytope& p);

struct OrderRow {
    FlatData flat;
    int mu = 0;
    bool satisfied = false;
    bool strict = false;
};

struct OrderReport {
    std::vector<OrderRow> rows;
    bool all_satisfied() const;
};

/// mu_L(f) against ord_P(L) for every proper flat.
OrderReport verify_orders(const Polytope& p, const HomoPoly& f);

struct TermCheck {
    int order = 0;
    /// Smallest mu_L over the summands of the chosen triangulation.
    int min_term_mu = 0;
    std::size_t simplices = 0;
    bool satisfied() const { return min_term_mu >= order; }
};

/// Builds the triangulation of the existence argument for the flat (pulled
/// from a vertex of the dual face of L n P whose facet misses L) and measures
/// the vanishing order of every summand of Warren's formula along L.
TermCheck per_term_check(const Polytope& p, const FlatData& flat);

}  // namespace polyadj

#endif
