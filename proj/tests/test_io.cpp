#include <random>

#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "polyadj/errors.hpp"
#include "polyadj/io.hpp"

using namespace polyadj;
using fixtures::vec;

TEST(Io, RationalParsing)
{
    EXPECT_EQ(parse_rational("3"), 3);
    EXPECT_EQ(parse_rational("-6/4"), Rational(-3, 2));
    EXPECT_EQ(parse_rational(" +1/3 "), Rational(1, 3));
    EXPECT_THROW(parse_rational("1/0"), InputError);
    EXPECT_THROW(parse_rational("1.5"), InputError);
    EXPECT_THROW(parse_rational(""), InputError);
    EXPECT_THROW(parse_rational("2/-3"), InputError);
    EXPECT_EQ(format_rational(Rational(-3, 2)), "-3/2");
    EXPECT_EQ(format_rational(Rational(4)), "4");
}

TEST(Io, PolynomialFormat)
{
    EXPECT_EQ(format_polynomial(power(HomoPoly::variable(4, 0), 2)), "X0^2");
    EXPECT_EQ(format_polynomial(HomoPoly(3, 2)), "0");
    EXPECT_EQ(format_polynomial(HomoPoly::constant(2, -5)), "-5");
    EXPECT_EQ(format_polynomial(HomoPoly::linear(vec({1, -1, 0, 2}))), "X0-X1+2*X3");
    EXPECT_EQ(format_polynomial(fixtures::octahedron_quartic()),
              "3*X0^4-2*X0^2*X1^2-2*X0^2*X2^2-2*X0^2*X3^2-X1^4+2*X1^2*X2^2+2*X1^2*X3^2-X2^4+2*X2^2*X3^2-X3^4");
}

TEST(Io, PolynomialRoundTrip)
{
    std::mt19937 rng(71);
    std::uniform_int_distribution<int> c(-4, 4);
    for (int trial = 0; trial < 20; ++trial) {
        HomoPoly f(4, 3);
        for (const Monomial& m : monomials_of_degree(4, 3)) {
            const int a = c(rng);
            if (a != 0 && c(rng) > 1)
                f.add_term(m, Rational(a, 1 + trial % 3));
        }
        EXPECT_EQ(parse_polynomial(format_polynomial(f), 4), f);
    }
}

TEST(Io, PolynomialParsingAcceptsLooseSpelling)
{
    const HomoPoly f = parse_polynomial(" 2 X0 * X1 - X1^2 + 1/2*X0*X0 ", 2);
    EXPECT_EQ(f.coefficient({1, 1}), 2);
    EXPECT_EQ(f.coefficient({0, 2}), -1);
    EXPECT_EQ(f.coefficient({2, 0}), Rational(1, 2));
}

TEST(Io, PolynomialParsingErrors)
{
    EXPECT_THROW(parse_polynomial("", 2), InputError);
    EXPECT_THROW(parse_polynomial("X0+X1^2", 2), InputError);
    EXPECT_THROW(parse_polynomial("X5", 2), InputError);
    EXPECT_THROW(parse_polynomial("X0 X1", 2), InputError);
    EXPECT_THROW(parse_polynomial("X0+", 2), InputError);
    EXPECT_THROW(parse_polynomial("X^2", 2), InputError);
}

TEST(Io, DocumentRoundTrip)
{
    PolytopeDocument doc;
    doc.dim = 2;
    doc.vertices = std::vector<QVector>{vec({0, 0}), vec({Rational(1, 2), 0}), vec({0, 3})};
    const PolytopeDocument back = parse_document(write_document(doc));
    EXPECT_EQ(back.dim, 2);
    ASSERT_TRUE(back.vertices);
    EXPECT_FALSE(back.inequalities);
    for (std::size_t i = 0; i < 3; ++i)
        EXPECT_TRUE(equal((*back.vertices)[i], (*doc.vertices)[i]));
    const Polytope p = to_polytope(back);
    EXPECT_EQ(p.num_facets(), 3);
}

TEST(Io, DocumentWithBothRepresentations)
{
    const Polytope sq = fixtures::unit_square();
    PolytopeDocument doc{2, sq.vertices(), std::vector<QVector>{}};
    for (const LinearForm& f : sq.facets())
        doc.inequalities->push_back(f.coeffs);
    EXPECT_EQ(to_polytope(parse_document(write_document(doc))).num_vertices(), 4);
    doc.inequalities->pop_back();
    EXPECT_ANY_THROW(to_polytope(doc));
}

TEST(Io, DocumentErrors)
{
    EXPECT_THROW(parse_document("{"), InputError);
    EXPECT_THROW(parse_document("[]"), InputError);
    EXPECT_THROW(parse_document(R"({"dim": 2})"), InputError);
    EXPECT_THROW(parse_document(R"({"dim": 0, "vertices": []})"), InputError);
    EXPECT_THROW(parse_document(R"({"dim": 2, "vertices": [["1"]]})"), InputError);
    EXPECT_THROW(parse_document(R"({"dim": 1, "vertices": [[1.5]]})"), InputError);
    EXPECT_THROW(parse_document(R"({"dim": 1, "inequalities": [["1"]]})"), InputError);
}

TEST(Io, MatrixParsing)
{
    const QMatrix m = parse_matrix("# comment\n1 2\n\n3/4 -1 # trailing\n");
    ASSERT_EQ(m.rows(), 2);
    ASSERT_EQ(m.cols(), 2);
    EXPECT_EQ(m(1, 0), Rational(3, 4));
    EXPECT_THROW(parse_matrix("1 2\n3\n"), InputError);
    EXPECT_THROW(parse_matrix("\n"), InputError);
}
