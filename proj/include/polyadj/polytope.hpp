#ifndef POLYADJ_POLYTOPE_HPP
#define POLYADJ_POLYTOPE_HPP

// Full-dimensional rational polytopes with paired V- and H-representations.
//
// Conversions enumerate n-subsets (of vertices or of facets) and are exact.
// That is cubic-ish in the subset count and fine for the sizes this library
// targets (n <= 5, a few dozen vertices); it is not a double description
// implementation.

#include <span>
#include <vector>

#include "polyadj/exactlin.hpp"
#include "polyadj/projective.hpp"

namespace polyadj {

using Incidence = Eigen::Array<bool, Eigen::Dynamic, Eigen::Dynamic>;

class Polytope {
  public:
    /// Convex hull of the points; non-extreme points are dropped.
    static Polytope from_vertices(const std::vector<QVector>& points);
    /// Solution set of l >= 0 on the chart X0 = 1. Redundant inequalities are
    /// dropped; the remaining facets keep their input order.
    static Polytope from_inequalities(const std::vector<LinearForm>& inequalities, Index dim);
    /// Both representations given; they are validated against each other.
    static Polytope from_both(const std::vector<QVector>& vertices,
                              const std::vector<LinearForm>& facets);
    /// The zero-dimensional polytope P^0 whose single facet form is X0.
    static Polytope point();

    Index dim() const { return dim_; }
    Index num_vertices() const { return static_cast<Index>(vertices_.size()); }
    Index num_facets() const { return static_cast<Index>(facets_.size()); }
    const std::vector<QVector>& vertices() const { return vertices_; }
    const std::vector<LinearForm>& facets() const { return facets_; }
    const QVector& vertex(Index i) const { return vertices_[static_cast<std::size_t>(i)]; }
    const LinearForm& facet(Index j) const { return facets_[static_cast<std::size_t>(j)]; }

    /// vertex x facet; true where the facet form vanishes at the vertex.
    const Incidence& incidence() const { return incidence_; }
    bool incident(Index vertex, Index facet) const { return incidence_(vertex, facet); }
    std::vector<Index> facet_vertices(Index facet) const;
    std::vector<Index> vertex_facets(Index vertex) const;

    /// Index of the facet proportional to the form, or -1.
    Index find_facet(const LinearForm& form) const;
    /// Index of the vertex equal to x, or -1.
    Index find_vertex(const QVector& x) const;

    bool is_simplex() const { return num_vertices() == dim_ + 1; }

  private:
    Polytope(Index dim, std::vector<QVector> vertices, std::vector<LinearForm> facets);
    void validate() const;

    Index dim_ = 0;
    std::vector<QVector> vertices_;
    std::vector<LinearForm> facets_;
    Incidence incidence_;
};

/// Affine dimension of a point set (-1 for the empty set).
Index affine_dimension(std::span<const QVector> points);
Index affine_dimension(const std::vector<QVector>& points, std::span<const Index> subset);

/// Complete, duplicate-free facet list of conv(vertices), each oriented >= 0.
std::vector<LinearForm> hull_facets(const std::vector<QVector>& vertices);

/// Vertices of { x : l(1, x) >= 0 for all l }, sorted lexicographically.
std::vector<QVector> vertex_enumeration(const std::vector<LinearForm>& facets, Index dim);

/// Vertex centroid.
QVector interior_point(const Polytope& p);

/// Polar dual of p - z. Vertex j of the dual corresponds to facet j of p and
/// facet i of the dual to vertex i of p.
Polytope polar_dual(const Polytope& p, const QVector& z);

struct FacetPolytope {
    Polytope polytope;
    /// Facet indices G of the parent with G | H, in the order of polytope.facets().
    std::vector<Index> incident_facets;
    Index pivot;
};

/// The facet P n H as a polytope in P^{n-1}, coordinates X_pivot eliminated.
/// Default pivot: highest-index variable with a nonzero coefficient in l_H.
FacetPolytope facet_polytope(const Polytope& p, Index facet, Index pivot);
FacetPolytope facet_polytope(const Polytope& p, Index facet);

/// True when facets g and h meet in a codimension-2 face.
bool facets_adjacent(const Polytope& p, Index g, Index h);

struct Face {
    std::vector<Index> vertices;
    Index dim;  // -1 for the empty face
};

/// The face L n P for a subspace L cut out by facet forms of p.
Face face_of_subspace(const Polytope& p, const LinearSubspace& L);

/// Image under the projective map X -> m X (homogeneous, X0 first).
Polytope apply_projective_map(const Polytope& p, const QMatrix& m);

/// Facets of the face with the given vertex set (as vertex subsets), computed
/// from the incidence of the ambient polytope.
std::vector<std::vector<Index>> facets_of_face(const Polytope& p, const std::vector<Index>& face);

/// Smallest face containing the vertices: all vertices on every facet that
/// contains them.
std::vector<Index> face_closure(const Polytope& p, const std::vector<Index>& vertices);

}  // namespace polyadj

#endif
