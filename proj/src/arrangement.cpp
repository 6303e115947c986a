#include "polyadj/arrangement.hpp"

#include <algorithm>
#include <set>

#include "polyadj/detail/combinations.hpp"
#include "polyadj/errors.hpp"

namespace polyadj {

namespace {

QMatrix rows_of(const Arrangement& a, std::span<const Index> s)
{
    QMatrix m(static_cast<Index>(s.size()), a.ambient_dim() + 1);
    for (std::size_t i = 0; i < s.size(); ++i)
        m.row(static_cast<Index>(i)) = a.covectors().row(s[i]);
    return m;
}

bool flat_less(const FlatData& x, const FlatData& y)
{
    if (x.rank != y.rank)
        return x.rank < y.rank;
    return x.members < y.members;
}

}  // namespace

Arrangement::Arrangement(Polytope p) : polytope_(std::move(p))
{
    const Index d = polytope_.num_facets();
    covectors_.resize(d, polytope_.dim() + 1);
    for (Index j = 0; j < d; ++j)
        covectors_.row(j) = polytope_.facet(j).coeffs.transpose();
    if (rank(covectors_) != polytope_.dim() + 1)
        throw GeometryError("arrangement: facet hyperplanes have a common point");
}

Index rank_of(const Arrangement& a, std::span<const Index> s)
{
    if (s.empty())
        return 0;
    return rank(rows_of(a, s));
}

IndexSet closure(const Arrangement& a, std::span<const Index> s)
{
    IndexSet out;
    const Index n1 = a.ambient_dim() + 1;
    if (rank_of(a, s) == n1) {
        for (Index i = 0; i < a.size(); ++i)
            out.push_back(i);
        return out;
    }
    std::vector<QVector> kernel;
    if (s.empty()) {
        for (Index i = 0; i < n1; ++i)
            kernel.push_back(QVector::Unit(n1, i));
    } else {
        kernel = kernel_basis(rows_of(a, s));
    }
    for (Index i = 0; i < a.size(); ++i) {
        const bool contains = std::all_of(kernel.begin(), kernel.end(), [&](const QVector& v) {
            return a.covectors().row(i).dot(v.transpose()) == 0;
        });
        if (contains)
            out.push_back(i);
    }
    return out;
}

FlatData make_flat(const Arrangement& a, IndexSet members)
{
    FlatData f;
    f.members = std::move(members);
    f.rank = rank_of(a, f.members);
    f.nullity = static_cast<Index>(f.members.size()) - f.rank;

    std::vector<LinearForm> forms;
    for (Index i : f.members)
        forms.push_back(a.form(i));
    f.subspace = LinearSubspace::cut_out_by(forms, a.ambient_dim() + 1);

    std::vector<Index> on;
    for (Index v = 0; v < a.polytope().num_vertices(); ++v) {
        const bool inside = std::all_of(f.members.begin(), f.members.end(),
                                        [&](Index j) { return a.polytope().incident(v, j); });
        if (inside)
            on.push_back(v);
    }
    f.face_dim = affine_dimension(a.polytope().vertices(), on);
    f.order = order_of(a, f);
    return f;
}

std::vector<FlatData> flats(const Arrangement& a)
{
    const Index n1 = a.ambient_dim() + 1;
    std::set<IndexSet> seen;
    std::vector<IndexSet> level;
    for (Index i = 0; i < a.size(); ++i) {
        const Index single[] = {i};
        IndexSet c = closure(a, single);
        if (seen.insert(c).second)
            level.push_back(std::move(c));
    }
    std::vector<IndexSet> all = level;
    while (!level.empty()) {
        std::vector<IndexSet> next;
        for (const IndexSet& flat : level) {
            for (Index e = 0; e < a.size(); ++e) {
                if (std::binary_search(flat.begin(), flat.end(), e))
                    continue;
                IndexSet grown = flat;
                grown.insert(std::upper_bound(grown.begin(), grown.end(), e), e);
                if (rank_of(a, grown) == n1)
                    continue;
                IndexSet c = closure(a, grown);
                if (seen.insert(c).second)
                    next.push_back(std::move(c));
            }
        }
        all.insert(all.end(), next.begin(), next.end());
        level = std::move(next);
    }

    std::vector<FlatData> out;
    out.reserve(all.size());
    for (IndexSet& members : all)
        out.push_back(make_flat(a, std::move(members)));
    std::sort(out.begin(), out.end(), flat_less);
    return out;
}

std::vector<ResidualPoint> point_residual(const Arrangement& a)
{
    const Index n = a.ambient_dim();
    std::set<IndexSet> seen;
    std::vector<ResidualPoint> out;
    // Every rank-n flat is the closure of some n independent hyperplanes.
    detail::for_each_combination(a.size(), n, [&](const std::vector<Index>& subset) {
        if (rank_of(a, subset) != n)
            return true;
        IndexSet members = closure(a, subset);
        if (!seen.insert(members).second)
            return true;
        const std::vector<QVector> kernel = kernel_basis(rows_of(a, members));
        ResidualPoint r;
        r.point = ProjectivePoint::from(kernel.front());
        r.members = std::move(members);
        r.is_vertex = r.point.is_affine() && a.polytope().find_vertex(r.point.affine()) >= 0;
        const int count = static_cast<int>(r.members.size());
        r.order = r.is_vertex ? count - static_cast<int>(n) : count - static_cast<int>(n) + 1;

        // The vertex test and the face dimension of the flat must agree.
        const FlatData flat = make_flat(a, r.members);
        if ((flat.face_dim == 0) != r.is_vertex || flat.order != r.order)
            throw TheoremViolation("point_residual: vertex test disagrees with the flat's face");
        out.push_back(std::move(r));
        return true;
    });
    std::sort(out.begin(), out.end(), [](const ResidualPoint& x, const ResidualPoint& y) {
        return lex_less(x.point.coords, y.point.coords);
    });
    return out;
}

int order_of(const Arrangement& /*a*/, const FlatData& flat)
{
    const int nullity = static_cast<int>(flat.nullity);
    return flat.face_dim == flat.dim() ? nullity : nullity + 1;
}

bool is_simple_arrangement(const Arrangement& a)
{
    const Index n1 = a.ambient_dim() + 1;
    bool uniform = true;
    detail::for_each_combination(a.size(), std::min(n1, a.size()), [&](const std::vector<Index>& s) {
        if (rank_of(a, s) != static_cast<Index>(s.size())) {
            uniform = false;
            return false;
        }
        return true;
    });
    return uniform;
}

}  // namespace polyadj
