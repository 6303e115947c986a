#include <random>

#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "polyadj/adjoint.hpp"
#include "polyadj/errors.hpp"
#include "polyadj/io.hpp"

using namespace polyadj;
using fixtures::vec;

namespace {

const char* const alpha_text = "72*X0^2-18*X0*X1-18*X0*X2+4*X1*X2-12*X0*X3+3*X2*X3+12*X0*X4-3*X1*X4-2*X3*X4";

std::vector<Polytope> random_cases(unsigned seed, int count)
{
    std::mt19937 rng(seed);
    std::vector<Polytope> out;
    for (int k = 0; k < count; ++k) {
        const Index n = 2 + k % 2;
        out.push_back(k % 3 == 0 ? fixtures::random_cut_box(rng, n, 2, 9) : fixtures::random_hull(rng, n, 6 + k % 3, 4, 9));
    }
    return out;
}

}  // namespace

TEST(Adjoint, SimplexGivesConstant)
{
    for (Index n = 1; n <= 4; ++n) {
        const Polytope s = fixtures::standard_simplex(n);
        EXPECT_EQ(warren_adjoint(s), HomoPoly::constant(n + 1, 1));
        EXPECT_EQ(interpolation_adjoint(s), HomoPoly::constant(n + 1, 1));
        const Triangulation t = pulling_triangulation(s, lexicographic_order(s));
        EXPECT_EQ(t.simplices.size(), 1u);
    }
}

TEST(Adjoint, OctahedronBothRoutesGiveTheReferenceQuartic)
{
    const Polytope o = fixtures::octahedron();
    const HomoPoly expected = fixtures::octahedron_quartic();
    EXPECT_TRUE(proportional(warren_adjoint(o), expected));
    const InterpolationResult r = solve_interpolation(o);
    EXPECT_EQ(r.kernel_dim, 1);
    // 20 evaluations and 4 first derivatives at each of 6 order-2 points.
    EXPECT_EQ(r.rows, 20 + 6 * 4);
    EXPECT_EQ(r.unknowns, 35);
    EXPECT_TRUE(proportional(r.adjoint, expected));
}

TEST(Adjoint, CubeGivesSquareOfPlaneAtInfinity)
{
    const HomoPoly x0sq = power(HomoPoly::variable(4, 0), 2);
    EXPECT_EQ(warren_adjoint(fixtures::cube_pm()), x0sq);
    EXPECT_EQ(interpolation_adjoint(fixtures::cube_pm()), x0sq);
    EXPECT_EQ(warren_adjoint(fixtures::unit_cube()), x0sq);
}

TEST(Adjoint, UnitSquareGivesLineAtInfinity)
{
    const Polytope sq = fixtures::unit_square();
    const InterpolationSystem sys = interpolation_system(sq);
    EXPECT_EQ(sys.matrix.rows(), 2);
    EXPECT_EQ(sys.matrix.cols(), 3);
    EXPECT_EQ(interpolation_adjoint(sq), HomoPoly::variable(3, 0));
    EXPECT_EQ(warren_adjoint(sq), HomoPoly::variable(3, 0));
}

TEST(Adjoint, TruncatedSimplexGivesAlpha)
{
    const Polytope p = fixtures::truncated_simplex();
    EXPECT_EQ(p.num_facets(), 7);
    const HomoPoly alpha = parse_polynomial(alpha_text, 5);
    EXPECT_TRUE(proportional(warren_adjoint(p), alpha));
    EXPECT_TRUE(proportional(interpolation_adjoint(p), alpha));
}

TEST(Adjoint, PullingTriangulationOfSquareAndCube)
{
    const Polytope sq = fixtures::unit_square();
    const Triangulation t = pulling_triangulation(sq, lexicographic_order(sq));
    EXPECT_EQ(t.simplices.size(), 2u);
    EXPECT_EQ(t.total_volume(), 2);

    // Order starting (1,1,1), (1,1,0), (1,0,0), (0,1,1).
    const Polytope c = fixtures::unit_cube();
    VertexOrder order;
    for (const QVector& v : {vec({1, 1, 1}), vec({1, 1, 0}), vec({1, 0, 0}), vec({0, 1, 1})})
        order.push_back(c.find_vertex(v));
    for (Index i = 0; i < c.num_vertices(); ++i)
        if (std::find(order.begin(), order.end(), i) == order.end())
            order.push_back(i);
    const Triangulation ct = pulling_triangulation(c, order);
    EXPECT_EQ(ct.simplices.size(), 6u);
    EXPECT_EQ(ct.total_volume(), 6);
    for (const Simplex& s : ct.simplices) {
        EXPECT_EQ(s.vertices.size(), 4u);
        EXPECT_TRUE(std::binary_search(s.vertices.begin(), s.vertices.end(), order.front()));
        EXPECT_EQ(s.volume, 1);
    }
    EXPECT_THROW(pulling_triangulation(c, VertexOrder{0, 1}), InputError);
}

TEST(Adjoint, TriangulationVolumeIsOrderIndependent)
{
    for (const Polytope& p : random_cases(41, 8)) {
        VertexOrder order = lexicographic_order(p);
        const Rational reference = pulling_triangulation(p, order).total_volume();
        std::reverse(order.begin(), order.end());
        const Triangulation t = pulling_triangulation(p, order);
        EXPECT_EQ(t.total_volume(), reference);
        for (const Simplex& s : t.simplices) {
            EXPECT_GT(s.volume, 0);
            EXPECT_EQ(static_cast<Index>(s.vertices.size()), p.dim() + 1);
        }
    }
}

TEST(Adjoint, FaceConstrainedOrderOnCube)
{
    const Polytope c = fixtures::unit_cube();
    const Index top = c.find_facet(fixtures::form({1, 0, 0, -1}));
    const std::vector<Index> face = c.facet_vertices(top);
    const Index v = c.find_vertex(vec({1, 1, 1}));
    const VertexOrder order = face_constrained_order(c, face, v);
    EXPECT_EQ(order.front(), v);
    const Triangulation t = pulling_triangulation(c, order);
    EXPECT_EQ(t.simplices.size(), 6u);
    EXPECT_TRUE(meets_face_in_facets(c, t, face, v));

    const Index a = c.find_vertex(vec({0, 0, 0}));
    const Index b = c.find_vertex(vec({1, 1, 1}));
    EXPECT_THROW(face_constrained_order(c, {a, b}, a), InputError);
    EXPECT_THROW(face_constrained_order(c, face, a), InputError);
}

TEST(Adjoint, FaceConstrainedOrderOnSimplex)
{
    const Polytope s = fixtures::standard_simplex(3);
    for (Index v = 0; v < 4; ++v) {
        const std::vector<Index> all{0, 1, 2, 3};
        EXPECT_NO_THROW(face_constrained_order(s, all, v));
        EXPECT_NO_THROW(face_constrained_order(s, {v}, v));
    }
}

TEST(Adjoint, RoutesAgreeOnRandomPolytopes)
{
    for (const Polytope& p : random_cases(43, 10)) {
        const HomoPoly w = warren_adjoint(p);
        EXPECT_EQ(w.degree(), p.num_facets() - p.dim() - 1);
        const InterpolationResult r = solve_interpolation(p);
        EXPECT_EQ(r.kernel_dim, 1);
        EXPECT_EQ(w, r.adjoint);
    }
}

TEST(Adjoint, IndependentOfOrderAndInteriorPoint)
{
    for (const Polytope& p : random_cases(47, 8)) {
        const HomoPoly reference = warren_adjoint(p);
        const Polytope q = polar_dual(p, interior_point(p));
        VertexOrder reversed = lexicographic_order(q);
        std::reverse(reversed.begin(), reversed.end());
        WarrenOptions by_order;
        by_order.order = reversed;
        EXPECT_EQ(warren_adjoint(p, by_order), reference);

        // A different interior point: average of the centroid and one vertex.
        WarrenOptions by_point;
        by_point.interior = QVector((interior_point(p) * Rational(3) + p.vertex(0)) / Rational(4));
        EXPECT_EQ(warren_adjoint(p, by_point), reference);
    }
}

TEST(Adjoint, VerifyOrdersOnOctahedronAndCube)
{
    const Polytope o = fixtures::octahedron();
    EXPECT_TRUE(verify_orders(o, warren_adjoint(o)).all_satisfied());

    const OrderReport bad = verify_orders(o, power(HomoPoly::variable(4, 0), 4));
    EXPECT_FALSE(bad.all_satisfied());
    // X0^4 does not vanish at the vertex (0, 0, 1).
    const auto vertex_row = std::find_if(bad.rows.begin(), bad.rows.end(), [](const OrderRow& r) {
        return r.flat.dim() == 0 && r.flat.subspace.spanning_points.front() == ProjectivePoint::from(vec({1, 0, 0, 1}));
    });
    ASSERT_NE(vertex_row, bad.rows.end());
    EXPECT_FALSE(vertex_row->satisfied);

    const Polytope c = fixtures::cube_pm();
    const OrderReport cube = verify_orders(c, power(HomoPoly::variable(4, 0), 2));
    EXPECT_TRUE(cube.all_satisfied());
    int strict = 0;
    for (const OrderRow& r : cube.rows) {
        if (r.strict) {
            ++strict;
            EXPECT_EQ(r.flat.dim(), 1);
            EXPECT_EQ(r.flat.order, 1);
            EXPECT_EQ(r.mu, 2);
        }
    }
    EXPECT_EQ(strict, 3);
}

TEST(Adjoint, OrderInequalitiesOnRandomPolytopes)
{
    for (const Polytope& p : random_cases(53, 8))
        EXPECT_TRUE(verify_orders(p, warren_adjoint(p)).all_satisfied());
}

TEST(Adjoint, EachSummandVanishesToTheRequiredOrder)
{
    std::vector<Polytope> cases{fixtures::octahedron(), fixtures::cube_pm(), fixtures::truncated_simplex()};
    for (const Polytope& p : random_cases(59, 4))
        cases.push_back(p);
    for (const Polytope& p : cases) {
        for (const FlatData& f : flats(Arrangement(p))) {
            const TermCheck t = per_term_check(p, f);
            EXPECT_TRUE(t.satisfied()) << "flat order " << t.order << " term mu " << t.min_term_mu;
            EXPECT_GT(t.simplices, 0u);
        }
    }
}

TEST(Adjoint, ProjectiveEquivariance)
{
    QMatrix chart(3, 3);
    chart << 1, 1, 1, 0, 1, 0, 0, 0, 1;
    const Polytope sq = fixtures::unit_square();
    const Polytope image = apply_projective_map(sq, chart);
    EXPECT_EQ(interpolation_adjoint(image), normalized(linear_substitute(interpolation_adjoint(sq), inverse(chart))));

    QMatrix m(4, 4);
    m << 5, 1, 0, 1, 0, 1, 0, 0, 1, 0, 2, 0, 0, 1, 1, 1;
    const Polytope o = fixtures::octahedron();
    const Polytope mo = apply_projective_map(o, m);
    EXPECT_EQ(interpolation_adjoint(mo), normalized(linear_substitute(warren_adjoint(o), inverse(m))));
}

TEST(Adjoint, PyramidAdjointIsConeOverBase)
{
    const std::vector<QVector> pentagon{vec({2, 0}), vec({1, 2}), vec({-1, 2}), vec({-2, 0}), vec({0, -2})};
    const Polytope base = Polytope::from_vertices(pentagon);
    const Polytope pyr = fixtures::pyramid(pentagon, 3);
    const HomoPoly adj = warren_adjoint(pyr);
    // Constant along the apex direction (1 : 0 : 0 : 3).
    const HomoPoly along = partial_derivative(adj, 0) + partial_derivative(adj, 3) * Rational(3);
    EXPECT_TRUE(along.is_zero());
    EXPECT_TRUE(proportional(restrict_to_hyperplane(adj, vec({0, 0, 0, 1}), 3), warren_adjoint(base)));
}

TEST(Adjoint, InterpolationSystemShape)
{
    const InterpolationSystem sys = interpolation_system(fixtures::octahedron());
    EXPECT_EQ(sys.degree, 4);
    EXPECT_EQ(static_cast<Index>(sys.monomials.size()), sys.matrix.cols());
    EXPECT_EQ(static_cast<Index>(kernel_basis(sys.matrix).size()), 1);
}
