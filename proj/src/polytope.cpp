#include "polyadj/polytope.hpp"

#include <algorithm>
#include <string>

#include "polyadj/detail/combinations.hpp"
#include "polyadj/errors.hpp"

namespace polyadj {

namespace {

QVector homogenize(const QVector& x)
{
    QVector h(x.size() + 1);
    h[0] = 1;
    h.tail(x.size()) = x;
    return h;
}

bool contains_vector(const std::vector<QVector>& list, const QVector& v)
{
    return std::any_of(list.begin(), list.end(), [&](const QVector& w) { return equal(w, v); });
}

bool contains_proportional(const std::vector<LinearForm>& list, const LinearForm& f)
{
    return std::any_of(list.begin(), list.end(),
                       [&](const LinearForm& g) { return g.proportional_to(f); });
}

void check_lengths(const std::vector<QVector>& points, Index n, const char* what)
{
    for (const QVector& p : points) {
        if (p.size() != n)
            throw InputError(std::string(what) + ": coordinate vectors of different lengths");
    }
}

}  // namespace

Index affine_dimension(std::span<const QVector> points)
{
    if (points.empty())
        return -1;
    const Index n = points.front().size();
    QMatrix rows(static_cast<Index>(points.size()), n + 1);
    for (std::size_t i = 0; i < points.size(); ++i)
        rows.row(static_cast<Index>(i)) = homogenize(points[i]).transpose();
    return rank(rows) - 1;
}

Index affine_dimension(const std::vector<QVector>& points, std::span<const Index> subset)
{
    std::vector<QVector> chosen;
    chosen.reserve(subset.size());
    for (Index i : subset)
        chosen.push_back(points[static_cast<std::size_t>(i)]);
    return affine_dimension(chosen);
}

std::vector<LinearForm> hull_facets(const std::vector<QVector>& vertices)
{
    if (vertices.empty())
        throw GeometryError("hull_facets: no points");
    const Index n = vertices.front().size();
    check_lengths(vertices, n, "hull_facets");
    if (n == 0)
        return {LinearForm{QVector::Ones(1)}};
    if (affine_dimension(vertices) != n)
        throw GeometryError("hull_facets: points are not full-dimensional");

    std::vector<QVector> homogeneous;
    homogeneous.reserve(vertices.size());
    for (const QVector& v : vertices)
        homogeneous.push_back(homogenize(v));

    std::vector<LinearForm> facets;
    const Index m = static_cast<Index>(vertices.size());
    detail::for_each_combination(m, n, [&](const std::vector<Index>& subset) {
        QMatrix rows(n, n + 1);
        for (Index r = 0; r < n; ++r)
            rows.row(r) = homogeneous[static_cast<std::size_t>(subset[static_cast<std::size_t>(r)])].transpose();
        const std::vector<QVector> kernel = kernel_basis(rows);
        if (kernel.size() != 1)
            return true;
        QVector a = kernel.front();
        bool pos = false;
        bool neg = false;
        for (const QVector& h : homogeneous) {
            const Rational value = a.dot(h);
            pos = pos || value > 0;
            neg = neg || value < 0;
            if (pos && neg)
                return true;
        }
        if (neg)
            a = -a;
        LinearForm f = LinearForm::oriented(a);
        if (!contains_proportional(facets, f))
            facets.push_back(std::move(f));
        return true;
    });
    return facets;
}

std::vector<QVector> vertex_enumeration(const std::vector<LinearForm>& facets, Index dim)
{
    const Index n = dim;
    if (n == 0)
        return {QVector(0)};
    for (const LinearForm& f : facets) {
        if (f.nvars() != n + 1)
            throw InputError("vertex_enumeration: inequality has wrong length");
    }
    const Index d = static_cast<Index>(facets.size());

    std::vector<QVector> points;
    detail::for_each_combination(d, n, [&](const std::vector<Index>& subset) {
        QMatrix a(n, n);
        QVector b(n);
        for (Index r = 0; r < n; ++r) {
            const QVector& c = facets[static_cast<std::size_t>(subset[static_cast<std::size_t>(r)])].coeffs;
            a.row(r) = c.tail(n).transpose();
            b[r] = -c[0];
        }
        if (rank(a) < n)
            return true;
        const std::optional<QVector> x = solve(a, b);
        if (!x)
            return true;
        for (const LinearForm& f : facets) {
            if (f.at_affine(*x) < 0)
                return true;
        }
        if (!contains_vector(points, *x))
            points.push_back(*x);
        return true;
    });

    // A nonzero recession direction is an extreme ray of {d : A d >= 0}, hence
    // spanned by the kernel of some n-1 normals of rank n-1.
    bool unbounded = false;
    detail::for_each_combination(d, n - 1, [&](const std::vector<Index>& subset) {
        QMatrix a(n - 1, n);
        for (Index r = 0; r < n - 1; ++r)
            a.row(r) = facets[static_cast<std::size_t>(subset[static_cast<std::size_t>(r)])].coeffs.tail(n).transpose();
        const std::vector<QVector> kernel = kernel_basis(a);
        if (kernel.size() != 1)
            return true;
        for (int sign : {1, -1}) {
            const QVector dir = kernel.front() * Rational(sign);
            bool ray = true;
            for (const LinearForm& f : facets) {
                if (f.coeffs.tail(n).dot(dir) < 0) {
                    ray = false;
                    break;
                }
            }
            if (ray) {
                unbounded = true;
                return false;
            }
        }
        return true;
    });
    if (d == 0)
        unbounded = true;

    if (points.empty())
        throw GeometryError(unbounded ? "vertex_enumeration: unbounded region"
                                      : "vertex_enumeration: empty region");
    if (unbounded)
        throw GeometryError("vertex_enumeration: unbounded region");
    if (affine_dimension(points) != n)
        throw GeometryError("vertex_enumeration: region is not full-dimensional");
    std::sort(points.begin(), points.end(), lex_less);
    return points;
}

Polytope::Polytope(Index dim, std::vector<QVector> vertices, std::vector<LinearForm> facets)
    : dim_(dim), vertices_(std::move(vertices)), facets_(std::move(facets))
{
    incidence_.resize(num_vertices(), num_facets());
    for (Index i = 0; i < num_vertices(); ++i) {
        const QVector h = homogenize(vertices_[static_cast<std::size_t>(i)]);
        for (Index j = 0; j < num_facets(); ++j)
            incidence_(i, j) = facets_[static_cast<std::size_t>(j)](h) == 0;
    }
}

void Polytope::validate() const
{
    if (dim_ == 0) {
        if (num_vertices() != 1 || num_facets() != 1)
            throw GeometryError("zero-dimensional polytope must be a single point");
        return;
    }
    if (affine_dimension(vertices_) != dim_)
        throw GeometryError("polytope is not full-dimensional");
    for (const LinearForm& f : facets_) {
        if (f.nvars() != dim_ + 1)
            throw InputError("facet form has wrong length");
    }
    for (Index i = 0; i < num_vertices(); ++i) {
        const QVector h = homogenize(vertex(i));
        for (Index j = 0; j < num_facets(); ++j) {
            if (facet(j)(h) < 0)
                throw GeometryError("a vertex violates a facet inequality");
        }
    }
    for (Index j = 0; j < num_facets(); ++j) {
        const std::vector<Index> on = facet_vertices(j);
        if (affine_dimension(vertices_, on) != dim_ - 1)
            throw GeometryError("facet form does not support a facet");
        for (Index k = 0; k < j; ++k) {
            if (facet(j).proportional_to(facet(k)))
                throw GeometryError("repeated facet hyperplane");
        }
    }
}

Polytope Polytope::from_vertices(const std::vector<QVector>& points)
{
    if (points.empty())
        throw GeometryError("from_vertices: no points");
    const Index n = points.front().size();
    check_lengths(points, n, "from_vertices");
    std::vector<QVector> unique;
    for (const QVector& p : points) {
        if (!contains_vector(unique, p))
            unique.push_back(p);
    }
    if (n == 0)
        return point();
    std::vector<LinearForm> facets = hull_facets(unique);

    std::vector<QVector> extreme;
    for (const QVector& p : unique) {
        const QVector h = homogenize(p);
        QMatrix normals(0, n);
        for (const LinearForm& f : facets) {
            if (f(h) == 0) {
                normals.conservativeResize(normals.rows() + 1, Eigen::NoChange);
                normals.row(normals.rows() - 1) = f.coeffs.tail(n).transpose();
            }
        }
        if (rank(normals) == n)
            extreme.push_back(p);
    }
    Polytope out(n, std::move(extreme), std::move(facets));
    out.validate();
    return out;
}

Polytope Polytope::from_inequalities(const std::vector<LinearForm>& inequalities, Index dim)
{
    if (dim < 0)
        throw InputError("from_inequalities: negative dimension");
    if (dim == 0)
        return point();
    std::vector<LinearForm> normalized;
    for (const LinearForm& f : inequalities) {
        if (f.nvars() != dim + 1)
            throw InputError("from_inequalities: inequality has wrong length");
        normalized.push_back(LinearForm::oriented(f.coeffs));
    }
    std::vector<QVector> vertices = vertex_enumeration(normalized, dim);

    std::vector<LinearForm> facets;
    for (const LinearForm& f : normalized) {
        std::vector<QVector> on;
        for (const QVector& v : vertices) {
            if (f.at_affine(v) == 0)
                on.push_back(v);
        }
        if (affine_dimension(on) == dim - 1 && !contains_proportional(facets, f))
            facets.push_back(f);
    }
    Polytope out(dim, std::move(vertices), std::move(facets));
    out.validate();
    return out;
}

Polytope Polytope::from_both(const std::vector<QVector>& vertices,
                             const std::vector<LinearForm>& facets)
{
    if (vertices.empty())
        throw GeometryError("from_both: no vertices");
    const Index n = vertices.front().size();
    check_lengths(vertices, n, "from_both");
    if (n == 0) {
        Polytope out = point();
        for (const LinearForm& f : facets) {
            if (f.nvars() != 1 || f.coeffs[0] <= 0)
                throw GeometryError("from_both: invalid facet of a point");
        }
        return out;
    }
    std::vector<LinearForm> oriented;
    for (const LinearForm& f : facets)
        oriented.push_back(LinearForm::oriented(f.coeffs));
    Polytope out(n, vertices, std::move(oriented));
    out.validate();

    const std::vector<LinearForm> hull = hull_facets(vertices);
    if (hull.size() != out.facets_.size())
        throw GeometryError("from_both: facet list does not match the convex hull");
    for (const LinearForm& f : hull) {
        if (out.find_facet(f) < 0)
            throw GeometryError("from_both: facet list does not match the convex hull");
    }
    for (Index i = 0; i < out.num_vertices(); ++i) {
        QMatrix normals(0, n);
        for (Index j : out.vertex_facets(i)) {
            normals.conservativeResize(normals.rows() + 1, Eigen::NoChange);
            normals.row(normals.rows() - 1) = out.facet(j).coeffs.tail(n).transpose();
        }
        if (rank(normals) != n)
            throw GeometryError("from_both: a listed point is not a vertex");
    }
    return out;
}

Polytope Polytope::point()
{
    return Polytope(0, {QVector(0)}, {LinearForm{QVector::Ones(1)}});
}

std::vector<Index> Polytope::facet_vertices(Index facet) const
{
    std::vector<Index> out;
    for (Index i = 0; i < num_vertices(); ++i) {
        if (incidence_(i, facet))
            out.push_back(i);
    }
    return out;
}

std::vector<Index> Polytope::vertex_facets(Index vertex) const
{
    std::vector<Index> out;
    for (Index j = 0; j < num_facets(); ++j) {
        if (incidence_(vertex, j))
            out.push_back(j);
    }
    return out;
}

Index Polytope::find_facet(const LinearForm& form) const
{
    for (Index j = 0; j < num_facets(); ++j) {
        if (facet(j).proportional_to(form))
            return j;
    }
    return -1;
}

Index Polytope::find_vertex(const QVector& x) const
{
    for (Index i = 0; i < num_vertices(); ++i) {
        if (equal(vertex(i), x))
            return i;
    }
    return -1;
}

QVector interior_point(const Polytope& p)
{
    QVector sum = QVector::Zero(p.dim());
    for (const QVector& v : p.vertices())
        sum += v;
    return sum / Rational(p.num_vertices());
}

Polytope polar_dual(const Polytope& p, const QVector& z)
{
    const Index n = p.dim();
    if (z.size() != n)
        throw DimensionMismatch("polar_dual: interior point has wrong dimension");
    std::vector<QVector> dual_vertices;
    for (const LinearForm& f : p.facets()) {
        const Rational value = f.at_affine(z);
        if (value <= 0)
            throw GeometryError("polar_dual: point is not interior");
        dual_vertices.push_back(f.coeffs.tail(n) / value);
    }
    std::vector<LinearForm> dual_facets;
    for (const QVector& w : p.vertices()) {
        QVector c(n + 1);
        c[0] = 1;
        c.tail(n) = w - z;
        dual_facets.push_back(LinearForm::oriented(c));
    }
    return Polytope::from_both(dual_vertices, dual_facets);
}

bool facets_adjacent(const Polytope& p, Index g, Index h)
{
    if (g == h)
        return false;
    std::vector<Index> common;
    for (Index i = 0; i < p.num_vertices(); ++i) {
        if (p.incident(i, g) && p.incident(i, h))
            common.push_back(i);
    }
    return affine_dimension(p.vertices(), common) >= p.dim() - 2;
}

FacetPolytope facet_polytope(const Polytope& p, Index facet, Index pivot)
{
    const Index n = p.dim();
    if (facet < 0 || facet >= p.num_facets())
        throw InputError("facet_polytope: facet index out of range");
    const QVector& h = p.facet(facet).coeffs;
    if (pivot < 1 || pivot > n || h[pivot] == 0)
        throw InputError("facet_polytope: pivot coefficient is zero");

    FacetPolytope out{Polytope::point(), {}, pivot};
    std::vector<LinearForm> forms;
    for (Index g = 0; g < p.num_facets(); ++g) {
        if (!facets_adjacent(p, g, facet))
            continue;
        out.incident_facets.push_back(g);
        forms.push_back(LinearForm::oriented(restrict_linear(p.facet(g).coeffs, h, pivot)));
    }
    if (n == 1) {
        if (out.incident_facets.size() != 1)
            throw GeometryError("facet_polytope: a segment endpoint must see exactly one other facet");
        return out;
    }
    std::vector<QVector> projected;
    for (Index i : p.facet_vertices(facet)) {
        const QVector& v = p.vertex(i);
        QVector w(n - 1);
        Index k = 0;
        for (Index c = 0; c < n; ++c) {
            if (c + 1 != pivot)
                w[k++] = v[c];
        }
        projected.push_back(w);
    }
    out.polytope = Polytope::from_both(projected, forms);
    return out;
}

FacetPolytope facet_polytope(const Polytope& p, Index facet)
{
    if (facet < 0 || facet >= p.num_facets())
        throw InputError("facet_polytope: facet index out of range");
    return facet_polytope(p, facet, default_pivot(p.facet(facet).coeffs));
}

Face face_of_subspace(const Polytope& p, const LinearSubspace& L)
{
    std::vector<Index> facet_ids;
    for (const LinearForm& f : L.defining_forms) {
        const Index j = p.find_facet(f);
        if (j < 0)
            throw InputError("face_of_subspace: subspace is not cut out by facet forms");
        facet_ids.push_back(j);
    }
    Face face;
    for (Index i = 0; i < p.num_vertices(); ++i) {
        const bool on = std::all_of(facet_ids.begin(), facet_ids.end(),
                                    [&](Index j) { return p.incident(i, j); });
        if (on)
            face.vertices.push_back(i);
    }
    face.dim = affine_dimension(p.vertices(), face.vertices);
    return face;
}

Polytope apply_projective_map(const Polytope& p, const QMatrix& m)
{
    const Index n = p.dim();
    if (m.rows() != n + 1 || m.cols() != n + 1)
        throw DimensionMismatch("apply_projective_map: matrix has wrong size");
    if (determinant(m) == 0)
        throw GeometryError("apply_projective_map: matrix is not invertible");

    std::vector<QVector> images;
    int sign = 0;
    for (const QVector& v : p.vertices()) {
        const QVector y = m * homogenize(v);
        if (y[0] == 0)
            throw GeometryError("apply_projective_map: a vertex is sent to infinity");
        const int s = y[0] > 0 ? 1 : -1;
        if (sign != 0 && s != sign)
            throw GeometryError("apply_projective_map: image is not contained in the affine chart");
        sign = s;
        images.push_back(y.tail(n) / y[0]);
    }
    const QMatrix inv = inverse(m);
    std::vector<LinearForm> forms;
    for (const LinearForm& f : p.facets()) {
        const QVector c = (f.coeffs.transpose() * inv).transpose() * Rational(sign);
        forms.push_back(LinearForm::oriented(c));
    }
    return Polytope::from_both(images, forms);
}

std::vector<std::vector<Index>> facets_of_face(const Polytope& p, const std::vector<Index>& face)
{
    const Index k = affine_dimension(p.vertices(), face);
    std::vector<std::vector<Index>> out;
    if (k <= 0)
        return out;
    for (Index j = 0; j < p.num_facets(); ++j) {
        std::vector<Index> meet;
        for (Index i : face) {
            if (p.incident(i, j))
                meet.push_back(i);
        }
        if (meet.size() == face.size())
            continue;
        if (affine_dimension(p.vertices(), meet) != k - 1)
            continue;
        if (std::find(out.begin(), out.end(), meet) == out.end())
            out.push_back(std::move(meet));
    }
    return out;
}

std::vector<Index> face_closure(const Polytope& p, const std::vector<Index>& vertices)
{
    std::vector<Index> out;
    for (Index i = 0; i < p.num_vertices(); ++i) {
        bool keep = true;
        for (Index j = 0; j < p.num_facets() && keep; ++j) {
            const bool contains_all = std::all_of(vertices.begin(), vertices.end(),
                                                  [&](Index v) { return p.incident(v, j); });
            if (contains_all && !p.incident(i, j))
                keep = false;
        }
        if (keep)
            out.push_back(i);
    }
    return out;
}

}  // namespace polyadj
