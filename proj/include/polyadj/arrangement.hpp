#ifndef POLYADJ_ARRANGEMENT_HPP
#define POLYADJ_ARRANGEMENT_HPP

// The linear matroid of the facet hyperplanes of a polytope: ranks, closures,
// the lattice of proper flats with nullity and order, and the point residual.

#include <span>
#include <vector>

#include "polyadj/polytope.hpp"

namespace polyadj {

/// The facet hyperplanes of a polytope. Rows of covectors() are the facet
/// forms in the polytope's facet order.
class Arrangement {
  public:
    explicit Arrangement(Polytope p);

    const Polytope& polytope() const { return polytope_; }
    Index size() const { return covectors_.rows(); }
    /// Ambient projective dimension n.
    Index ambient_dim() const { return polytope_.dim(); }
    const QMatrix& covectors() const { return covectors_; }
    const LinearForm& form(Index i) const { return polytope_.facet(i); }

  private:
    Polytope polytope_;
    QMatrix covectors_;
};

using IndexSet = std::vector<Index>;

struct FlatData {
    IndexSet members;
    LinearSubspace subspace;
    Index rank = 0;
    Index nullity = 0;
    /// dim(L n P); -1 when L misses P.
    Index face_dim = -1;
    int order = 0;

    Index dim() const { return subspace.dim(); }
};

struct ResidualPoint {
    ProjectivePoint point;
    IndexSet members;
    int order = 0;
    bool is_vertex = false;
};

/// codim of the intersection of the hyperplanes in s (n+1 when empty).
Index rank_of(const Arrangement& a, std::span<const Index> s);

/// All hyperplanes containing the intersection of s; every index when the
/// intersection is empty.
IndexSet closure(const Arrangement& a, std::span<const Index> s);

/// Flat data for a closed set of rank at most n.
FlatData make_flat(const Arrangement& a, IndexSet members);

/// Every proper flat of rank >= 1, sorted by (rank, members).
std::vector<FlatData> flats(const Arrangement& a);

/// Rank-n flats as points with their orders, sorted by coordinates.
std::vector<ResidualPoint> point_residual(const Arrangement& a);

/// Nullity, plus one when L n P is not a face of dimension dim L.
int order_of(const Arrangement& a, const FlatData& flat);

/// Uniform matroid of rank n+1 (no n+1 hyperplanes through a point).
bool is_simple_arrangement(const Arrangement& a);

}  // namespace polyadj

#endif
