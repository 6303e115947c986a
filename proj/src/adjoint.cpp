#include "polyadj/adjoint.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "polyadj/errors.hpp"

namespace polyadj {

namespace {

using VertexSet = std::vector<Index>;

Rational simplex_volume(const Polytope& q, const VertexSet& s)
{
    const Index n = q.dim();
    QMatrix edges(n, n);
    for (Index k = 1; k <= n; ++k)
        edges.col(k - 1) = q.vertex(s[static_cast<std::size_t>(k)]) - q.vertex(s[0]);
    Rational det = determinant(edges);
    return det < 0 ? Rational(-det) : det;
}

void pull(const Polytope& q, const std::vector<Index>& rank_of_vertex, const VertexSet& face,
          std::vector<VertexSet>& out)
{
    const Index k = affine_dimension(q.vertices(), face);
    if (static_cast<Index>(face.size()) == k + 1) {
        out.push_back(face);
        return;
    }
    const Index apex = *std::min_element(face.begin(), face.end(), [&](Index a, Index b) {
        return rank_of_vertex[static_cast<std::size_t>(a)] < rank_of_vertex[static_cast<std::size_t>(b)];
    });
    for (const VertexSet& facet : facets_of_face(q, face)) {
        if (std::binary_search(facet.begin(), facet.end(), apex))
            continue;
        std::vector<VertexSet> sub;
        pull(q, rank_of_vertex, facet, sub);
        for (VertexSet& s : sub) {
            s.insert(std::upper_bound(s.begin(), s.end(), apex), apex);
            out.push_back(std::move(s));
        }
    }
}

Rational falling_factorial(int m, int k)
{
    Rational r = 1;
    for (int i = 0; i < k; ++i)
        r *= m - i;
    return r;
}

Rational int_power(const Rational& x, int k)
{
    Rational r = 1;
    for (int i = 0; i < k; ++i)
        r *= x;
    return r;
}

/// d^alpha X^m evaluated at x.
Rational derivative_at(const Monomial& m, const Monomial& alpha, const QVector& x)
{
    Rational r = 1;
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (alpha[i] > m[i])
            return 0;
        r *= falling_factorial(m[i], alpha[i]);
        r *= int_power(x[static_cast<Index>(i)], m[i] - alpha[i]);
        if (r == 0)
            return 0;
    }
    return r;
}

HomoPoly product_of_forms(const Polytope& p, const std::vector<Index>& facets)
{
    HomoPoly t = HomoPoly::constant(p.dim() + 1, 1);
    for (Index j : facets)
        t = t * HomoPoly::linear(p.facet(j).coeffs);
    return t;
}

}  // namespace

Rational Triangulation::total_volume() const
{
    Rational sum = 0;
    for (const Simplex& s : simplices)
        sum += s.volume;
    return sum;
}

VertexOrder lexicographic_order(const Polytope& q)
{
    VertexOrder order(static_cast<std::size_t>(q.num_vertices()));
    std::iota(order.begin(), order.end(), Index{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](Index a, Index b) { return lex_less(q.vertex(a), q.vertex(b)); });
    return order;
}

Triangulation pulling_triangulation(const Polytope& q, const VertexOrder& order)
{
    const auto m = static_cast<std::size_t>(q.num_vertices());
    if (order.size() != m)
        throw InputError("pulling_triangulation: order is not a permutation of the vertices");
    std::vector<Index> rank_of_vertex(m, -1);
    for (std::size_t pos = 0; pos < m; ++pos) {
        const Index v = order[pos];
        if (v < 0 || static_cast<std::size_t>(v) >= m || rank_of_vertex[static_cast<std::size_t>(v)] >= 0)
            throw InputError("pulling_triangulation: order is not a permutation of the vertices");
        rank_of_vertex[static_cast<std::size_t>(v)] = static_cast<Index>(pos);
    }

    VertexSet all(m);
    std::iota(all.begin(), all.end(), Index{0});
    std::vector<VertexSet> sets;
    pull(q, rank_of_vertex, all, sets);

    Triangulation t;
    for (VertexSet& s : sets) {
        Rational vol = q.dim() == 0 ? Rational(1) : simplex_volume(q, s);
        t.simplices.push_back({std::move(s), std::move(vol)});
    }
    return t;
}

bool meets_face_in_facets(const Polytope& q, const Triangulation& t, const std::vector<Index>& face,
                          Index v)
{
    const std::vector<std::vector<Index>> face_facets = facets_of_face(q, face);
    for (const Simplex& s : t.simplices) {
        std::vector<Index> meet;
        std::set_intersection(s.vertices.begin(), s.vertices.end(), face.begin(), face.end(),
                              std::back_inserter(meet));
        meet.erase(std::remove(meet.begin(), meet.end(), v), meet.end());
        if (meet.empty())
            continue;
        const bool inside = std::any_of(face_facets.begin(), face_facets.end(), [&](const std::vector<Index>& f) {
            return std::includes(f.begin(), f.end(), meet.begin(), meet.end());
        });
        if (!inside)
            return false;
    }
    return true;
}

VertexOrder face_constrained_order(const Polytope& q, const std::vector<Index>& face, Index v)
{
    std::vector<Index> sorted = face;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    if (sorted.empty() || face_closure(q, sorted) != sorted)
        throw InputError("face_constrained_order: vertex set is not a face");
    if (!std::binary_search(sorted.begin(), sorted.end(), v))
        throw InputError("face_constrained_order: vertex is not in the face");

    VertexOrder order{v};
    for (Index i = 0; i < q.num_vertices(); ++i) {
        if (i != v)
            order.push_back(i);
    }
    if (!meets_face_in_facets(q, pulling_triangulation(q, order), sorted, v))
        throw TheoremViolation("face_constrained_order: a simplex meets the face outside its facets");
    return order;
}

HomoPoly warren_adjoint(const Polytope& p, const WarrenOptions& options)
{
    const Index n = p.dim();
    const Index d = p.num_facets();
    if (n == 0 || p.is_simplex())
        return HomoPoly::constant(n + 1, 1);

    const QVector z = options.interior ? *options.interior : interior_point(p);
    const Polytope q = polar_dual(p, z);
    const VertexOrder order = options.order ? *options.order : lexicographic_order(q);
    const Triangulation t = pulling_triangulation(q, order);

    std::vector<HomoPoly> dual_forms;
    for (Index j = 0; j < d; ++j) {
        QVector c(n + 1);
        c[0] = 1;
        c.tail(n) = q.vertex(j);
        dual_forms.push_back(HomoPoly::linear(c));
    }

    const int degree = static_cast<int>(d - n - 1);
    HomoPoly sum(n + 1, degree);
    for (const Simplex& s : t.simplices) {
        HomoPoly term = HomoPoly::constant(n + 1, s.volume);
        for (Index j = 0; j < d; ++j) {
            if (!std::binary_search(s.vertices.begin(), s.vertices.end(), j))
                term = term * dual_forms[static_cast<std::size_t>(j)];
        }
        sum += term;
    }

    QMatrix back = QMatrix::Identity(n + 1, n + 1);
    for (Index i = 1; i <= n; ++i)
        back(i, 0) = -z[i - 1];
    const HomoPoly adj = linear_substitute(sum, back);
    if (adj.is_zero() || adj.degree() != degree)
        throw TheoremViolation("warren_adjoint: result has the wrong degree");
    return normalized(adj);
}

InterpolationSystem interpolation_system(const Polytope& p)
{
    const Index n = p.dim();
    InterpolationSystem sys;
    sys.degree = static_cast<int>(p.num_facets() - n - 1);
    sys.monomials = monomials_of_degree(n + 1, sys.degree);

    std::vector<std::vector<Rational>> rows;
    for (const ResidualPoint& r : point_residual(Arrangement(p))) {
        for (int t = 0; t < r.order; ++t) {
            for (const Monomial& alpha : monomials_of_degree(n + 1, t)) {
                std::vector<Rational> row;
                row.reserve(sys.monomials.size());
                for (const Monomial& m : sys.monomials)
                    row.push_back(derivative_at(m, alpha, r.point.coords));
                rows.push_back(std::move(row));
            }
        }
    }
    sys.matrix.resize(static_cast<Index>(rows.size()), static_cast<Index>(sys.monomials.size()));
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[i].size(); ++j)
            sys.matrix(static_cast<Index>(i), static_cast<Index>(j)) = rows[i][j];
    return sys;
}

InterpolationResult solve_interpolation(const Polytope& p)
{
    const Index n = p.dim();
    InterpolationResult res{HomoPoly::constant(n + 1, 1), 1, 0, 1};
    if (p.num_facets() == n + 1)
        return res;

    const InterpolationSystem sys = interpolation_system(p);
    res.rows = sys.matrix.rows();
    res.unknowns = sys.matrix.cols();
    res.adjoint = HomoPoly(n + 1, sys.degree);
    if (res.rows == 0) {
        res.kernel_dim = res.unknowns;
        return res;
    }
    const std::vector<QVector> kernel = kernel_basis(sys.matrix);
    res.kernel_dim = static_cast<Index>(kernel.size());
    if (kernel.size() != 1)
        return res;
    for (std::size_t j = 0; j < sys.monomials.size(); ++j) {
        const Rational& c = kernel.front()[static_cast<Index>(j)];
        if (c != 0)
            res.adjoint.add_term(sys.monomials[j], c);
    }
    res.adjoint = normalized(res.adjoint);
    return res;
}

HomoPoly interpolation_adjoint(const Polytope& p)
{
    InterpolationResult res = solve_interpolation(p);
    if (res.kernel_dim != 1)
        throw TheoremViolation("interpolation_adjoint: kernel has dimension " + std::to_string(res.kernel_dim));
    return std::move(res.adjoint);
}

bool OrderReport::all_satisfied() const
{
    return std::all_of(rows.begin(), rows.end(), [](const OrderRow& r) { return r.satisfied; });
}

OrderReport verify_orders(const Polytope& p, const HomoPoly& f)
{
    if (f.is_zero())
        throw ZeroPolynomial("verify_orders: polynomial is zero");
    if (f.nvars() != p.dim() + 1)
        throw DimensionMismatch("verify_orders: polynomial has the wrong number of variables");
    OrderReport report;
    for (FlatData& flat : flats(Arrangement(p))) {
        OrderRow row;
        row.mu = vanishing_order_along(f, flat.subspace);
        row.satisfied = row.mu >= flat.order;
        row.strict = row.mu > flat.order;
        row.flat = std::move(flat);
        report.rows.push_back(std::move(row));
    }
    return report;
}

TermCheck per_term_check(const Polytope& p, const FlatData& flat)
{
    const Polytope q = polar_dual(p, interior_point(p));
    TermCheck check;
    check.order = flat.order;

    VertexOrder order = lexicographic_order(q);
    if (flat.face_dim != flat.dim()) {
        // Dual face of L n P: the facets of p containing it.
        std::vector<Index> face_vertices;
        for (Index v = 0; v < p.num_vertices(); ++v) {
            const bool on = std::all_of(flat.members.begin(), flat.members.end(),
                                        [&](Index j) { return p.incident(v, j); });
            if (on)
                face_vertices.push_back(v);
        }
        std::vector<Index> dual_face;
        for (Index j = 0; j < p.num_facets(); ++j) {
            const bool contains = std::all_of(face_vertices.begin(), face_vertices.end(),
                                              [&](Index v) { return p.incident(v, j); });
            if (contains)
                dual_face.push_back(j);
        }
        const auto witness = std::find_if(dual_face.begin(), dual_face.end(), [&](Index j) {
            return !std::binary_search(flat.members.begin(), flat.members.end(), j);
        });
        if (witness == dual_face.end())
            throw TheoremViolation("per_term_check: no facet contains L n P without containing L");
        order = face_constrained_order(q, dual_face, *witness);
    }

    const Triangulation t = pulling_triangulation(q, order);
    check.simplices = t.simplices.size();
    check.min_term_mu = std::numeric_limits<int>::max();
    for (const Simplex& s : t.simplices) {
        std::vector<Index> rest;
        for (Index j = 0; j < p.num_facets(); ++j) {
            if (!std::binary_search(s.vertices.begin(), s.vertices.end(), j))
                rest.push_back(j);
        }
        const int mu = vanishing_order_along(product_of_forms(p, rest), flat.subspace);
        check.min_term_mu = std::min(check.min_term_mu, mu);
    }
    return check;
}

}  // namespace polyadj
