#include <set>

#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "polyadj/arrangement.hpp"

using namespace polyadj;
using fixtures::vec;

namespace {

// A subset is a flat when adding any other element raises the rank.
std::set<IndexSet> brute_force_flats(const Arrangement& a)
{
    const Index d = a.size();
    std::set<IndexSet> out;
    for (unsigned long mask = 1; mask < (1ul << d); ++mask) {
        IndexSet s;
        for (Index i = 0; i < d; ++i)
            if (mask & (1ul << i))
                s.push_back(i);
        const Index r = rank_of(a, s);
        if (r > a.ambient_dim())
            continue;
        bool closed = true;
        for (Index e = 0; e < d && closed; ++e) {
            if (mask & (1ul << e))
                continue;
            IndexSet t = s;
            t.push_back(e);
            std::sort(t.begin(), t.end());
            closed = rank_of(a, t) > r;
        }
        if (closed)
            out.insert(s);
    }
    return out;
}

// Reference residual points of the octahedron are given with the homogenizing
// coordinate last; this moves it first.
ProjectivePoint from_last(int a, int b, int c, int h) { return ProjectivePoint::from(vec({h, a, b, c})); }

}  // namespace

TEST(Arrangement, RankAndClosureBasics)
{
    const Arrangement a(fixtures::cube_pm());
    EXPECT_EQ(rank_of(a, IndexSet{}), 0);
    EXPECT_EQ(a.size(), 6);
    const IndexSet all = closure(a, IndexSet{0, 1, 2, 3, 4, 5});
    EXPECT_EQ(all.size(), 6u);
    for (Index i = 0; i < a.size(); ++i)
        EXPECT_EQ(closure(a, IndexSet{i}), IndexSet{i});
}

TEST(Arrangement, FlatsAgreeWithBruteForce)
{
    std::mt19937 rng(19);
    std::vector<Polytope> cases{fixtures::cube_pm(), fixtures::octahedron(), fixtures::unit_square(),
                                fixtures::truncated_simplex()};
    for (int k = 0; k < 6; ++k)
        cases.push_back(k % 2 ? fixtures::random_hull(rng, 3, 7, 3, 9) : fixtures::random_cut_box(rng, 3, 2, 9));
    for (const Polytope& p : cases) {
        const Arrangement a(p);
        std::set<IndexSet> listed;
        for (const FlatData& f : flats(a)) {
            EXPECT_TRUE(listed.insert(f.members).second);
            EXPECT_EQ(f.rank, f.subspace.codim());
            EXPECT_EQ(f.nullity, static_cast<Index>(f.members.size()) - f.rank);
        }
        EXPECT_EQ(listed, brute_force_flats(a));
    }
}

TEST(Arrangement, CubeFlatCounts)
{
    const auto fl = flats(Arrangement(fixtures::cube_pm()));
    std::map<Index, int> by_rank;
    for (const FlatData& f : fl)
        ++by_rank[f.rank];
    EXPECT_EQ(by_rank[1], 6);
    EXPECT_EQ(by_rank[2], 15);
    EXPECT_EQ(by_rank[3], 11);

    int infinity_lines = 0;
    for (const FlatData& f : fl) {
        if (f.rank == 2 && f.face_dim < 0) {
            ++infinity_lines;
            EXPECT_EQ(f.nullity, 0);
            EXPECT_EQ(f.order, 1);
        }
    }
    EXPECT_EQ(infinity_lines, 3);
}

TEST(Arrangement, CubePointResidual)
{
    const auto r = point_residual(Arrangement(fixtures::cube_pm()));
    ASSERT_EQ(r.size(), 11u);
    int vertices = 0;
    for (const ResidualPoint& x : r) {
        if (x.is_vertex) {
            ++vertices;
            EXPECT_EQ(x.order, 0);
        } else {
            EXPECT_FALSE(x.point.is_affine());
            EXPECT_EQ(x.order, 2);
            EXPECT_EQ(x.members.size(), 4u);
        }
    }
    EXPECT_EQ(vertices, 8);
}

TEST(Arrangement, OctahedronPointResidualMatchesReferencePoints)
{
    const std::vector<ProjectivePoint> reference{
        from_last(0, 0, 1, 1),    from_last(0, 1, 0, 1),   from_last(0, -1, 1, 0),
        from_last(1, 0, 0, 1),    from_last(-1, 0, 1, 0),  from_last(-1, 1, 0, 0),
        from_last(-1, 1, 1, 1),   from_last(1, -1, 1, 1),  from_last(1, 1, -1, 1),
        from_last(1, 1, 1, 1),    from_last(1, 1, 0, 0),   from_last(-1, -1, 1, 1),
        from_last(1, 0, 1, 0),    from_last(-1, 0, 0, 1),  from_last(-1, 1, -1, 1),
        from_last(0, 1, 1, 0),    from_last(0, -1, 0, 1),  from_last(1, -1, -1, 1),
        from_last(-1, -1, -1, 1), from_last(0, 0, -1, 1)};
    const std::vector<int> reference_orders{1, 2, 1, 1, 1, 1, 2, 1, 1, 1, 2, 2, 2, 1, 1, 2, 1, 1, 1, 1};

    const auto r = point_residual(Arrangement(fixtures::octahedron()));
    ASSERT_EQ(r.size(), 20u);
    std::multiset<int> orders;
    for (const ResidualPoint& x : r) {
        EXPECT_NE(std::find(reference.begin(), reference.end(), x.point), reference.end());
        orders.insert(x.order);
        // Four facet planes meet in each of the six points at infinity.
        EXPECT_EQ(x.order, x.point.is_affine() ? 1 : 2);
    }
    EXPECT_EQ(orders, std::multiset<int>(reference_orders.begin(), reference_orders.end()));
}

TEST(Arrangement, SquareResidualHasTwoPointsAtInfinity)
{
    const auto r = point_residual(Arrangement(fixtures::unit_square()));
    ASSERT_EQ(r.size(), 6u);
    int at_infinity = 0;
    for (const ResidualPoint& x : r) {
        EXPECT_EQ(x.order, x.is_vertex ? 0 : 1);
        at_infinity += !x.point.is_affine();
    }
    EXPECT_EQ(at_infinity, 2);
    EXPECT_EQ(r.front().point, ProjectivePoint::from(vec({0, 0, 1})));
}

TEST(Arrangement, SimplexResidualIsItsVertices)
{
    for (Index n = 1; n <= 4; ++n) {
        const Arrangement a(fixtures::standard_simplex(n));
        const auto r = point_residual(a);
        EXPECT_EQ(static_cast<Index>(r.size()), n + 1);
        for (const ResidualPoint& x : r) {
            EXPECT_TRUE(x.is_vertex);
            EXPECT_EQ(x.order, 0);
        }
        EXPECT_TRUE(is_simple_arrangement(a));
    }
    EXPECT_FALSE(is_simple_arrangement(Arrangement(fixtures::cube_pm())));
}

TEST(Arrangement, PyramidApexOrder)
{
    const std::vector<QVector> pentagon{vec({2, 0}), vec({1, 2}), vec({-1, 2}), vec({-2, 0}), vec({0, -2})};
    const Polytope p = fixtures::pyramid(pentagon, 3);
    const auto r = point_residual(Arrangement(p));
    const auto apex = std::find_if(r.begin(), r.end(), [](const ResidualPoint& x) {
        return x.point == ProjectivePoint::from_affine(vec({0, 0, 3}));
    });
    ASSERT_NE(apex, r.end());
    EXPECT_TRUE(apex->is_vertex);
    EXPECT_EQ(apex->order, 5 - 3);
}

TEST(Arrangement, OrdersFollowTheDefinition)
{
    std::mt19937 rng(23);
    for (int k = 0; k < 6; ++k) {
        const Polytope p = k % 2 ? fixtures::random_hull(rng, 3, 8, 3, 10) : fixtures::random_cut_box(rng, 3, 3, 10);
        for (const FlatData& f : flats(Arrangement(p))) {
            const int expected = static_cast<int>(f.nullity) + (f.face_dim == f.dim() ? 0 : 1);
            EXPECT_EQ(f.order, expected);
            EXPECT_LE(f.face_dim, f.dim());
        }
    }
}
