#include <doctest.h>

#include "ivpoly/expr.hpp"
#include "ivpoly/matrix.hpp"
#include "ivpoly/poly.hpp"
#include "support/gen.hpp"

using namespace ivpoly;
using testgen::Rng;

namespace {

// Independent discriminant oracle for split polynomials:
// prod over i<j of (a_i - a_j)^2.
Rat disc_from_roots(const std::vector<Rat>& roots) {
    Rat prod(1);
    for (std::size_t i = 0; i < roots.size(); ++i) {
        for (std::size_t j = i + 1; j < roots.size(); ++j) {
            Rat d = roots[i] - roots[j];
            prod *= d * d;
        }
    }
    return prod;
}

} // namespace

TEST_SUITE_BEGIN("matrix");

TEST_CASE("companion matrices") {
    MatQ c = companion_matrix(MonicPolyZ::from_poly(parse_poly("x^2-2")));
    CHECK(c.at(0, 0) == 0);
    CHECK(c.at(0, 1) == 2);
    CHECK(c.at(1, 0) == 1);
    CHECK(c.at(1, 1) == 0);

    MatQ lin = companion_matrix(MonicPolyZ::linear_root(Int(7)));
    CHECK(lin.rows() == 1);
    CHECK(lin.at(0, 0) == 7);

    MatQ c13 = companion_matrix(MonicPolyZ::from_poly(parse_poly("(x-1)(x-3)")));
    CHECK(c13.at(0, 1) == -3);
    CHECK(c13.at(1, 1) == 4);
}

TEST_CASE("charpoly basics") {
    CHECK(charpoly(MatQ::identity(2)) == parse_poly("(x-1)^2"));

    SUBCASE("golden-ratio matrix") {
        // f(C) for f = (x+1)/2, C the companion of x^2-5: 2x2 determinant by hand
        MatQ c = companion_matrix(MonicPolyZ::from_poly(parse_poly("x^2-5")));
        MatQ m = poly_of_matrix(parse_poly("(x+1)/2"), c);
        CHECK(m.at(0, 0) == make_rat(1, 2));
        CHECK(m.at(0, 1) == make_rat(5, 2));
        CHECK(m.at(1, 0) == make_rat(1, 2));
        CHECK(m.at(1, 1) == make_rat(1, 2));
        CHECK(charpoly(m) == parse_poly("x^2-x-1"));
    }
    SUBCASE("non-square input rejected") {
        CHECK_THROWS_AS(charpoly(MatQ(2, 3)), std::domain_error);
    }
}

TEST_CASE("charpoly of a companion matrix recovers the polynomial") {
    Rng rng(201);
    for (int iter = 0; iter < 100; ++iter) {
        MonicPolyZ p = testgen::random_monic(rng, static_cast<int>(rng.range(1, 8)), 10);
        CHECK(charpoly(companion_matrix(p)) == p.to_poly());
    }
}

TEST_CASE("poly_of_matrix") {
    MatQ c = companion_matrix(MonicPolyZ::from_poly(parse_poly("x^2")));
    SUBCASE("identity polynomial returns the matrix") {
        CHECK(poly_of_matrix(PolyQ::variable(), c) == c);
    }
    SUBCASE("Cayley-Hamilton: p(C_p) = 0") {
        MonicPolyZ p = MonicPolyZ::from_poly(parse_poly("(x-1)(x-3)"));
        MatQ z = poly_of_matrix(p.to_poly(), companion_matrix(p));
        CHECK(z == MatQ(2, 2));
    }
    SUBCASE("scalar halving") {
        MatQ m = poly_of_matrix(parse_poly("x/2"), c);
        CHECK(m.at(0, 0) == 0);
        CHECK(m.at(0, 1) == 0);
        CHECK(m.at(1, 0) == make_rat(1, 2));
        CHECK(m.at(1, 1) == 0);
    }
}

TEST_CASE("resultants") {
    CHECK(resultant(parse_poly("x^2+1"), parse_poly("x^2-2")) == 9);
    CHECK(resultant(parse_poly("x^2-5"), parse_poly("x^2-6")) == 1);
    PolyQ p = parse_poly("x^3-2x+1");
    CHECK(resultant(p, p) == 0);
    CHECK(resultant(parse_poly("x"), parse_poly("x-2")) == 2);
    CHECK_THROWS_AS(resultant(PolyQ(), parse_poly("x")), std::domain_error);
}

TEST_CASE("resultant vanishes exactly on common factors") {
    Rng rng(202);
    for (int iter = 0; iter < 150; ++iter) {
        PolyQ f = testgen::random_poly(rng, 4, 6, 3);
        PolyQ g = testgen::random_poly(rng, 4, 6, 3);
        if (f.is_zero() || g.is_zero()) continue;
        bool common = !(f.degree() == 0 || g.degree() == 0) && gcd(f, g).degree() > 0;
        CHECK((resultant(f, g) == 0) == common);
    }
}

TEST_CASE("resultant equals the root-product formula on split g") {
    Rng rng(203);
    for (int iter = 0; iter < 100; ++iter) {
        PolyQ f = testgen::random_poly(rng, 4, 8, 4);
        if (f.is_zero()) continue;
        RootMultiset roots;
        MonicPolyZ g = testgen::random_split_monic(rng, static_cast<int>(rng.range(1, 4)), 4,
                                                   &roots);
        Rat expected(1); // lc(g) = 1
        for (const Rat& beta : roots.sorted_values()) expected *= f.eval(beta);
        CHECK(resultant(f, g.to_poly()) == expected);
    }
}

TEST_CASE("discriminants") {
    CHECK(discriminant(MonicPolyZ::from_poly(parse_poly("x^2-2"))) == 8);
    SUBCASE("split quadratic matches the root-difference product") {
        CHECK(discriminant(MonicPolyZ::from_poly(parse_poly("(x-1)(x-3)"))) ==
              disc_from_roots({Rat(1), Rat(3)}));
        CHECK(disc_from_roots({Rat(1), Rat(3)}) == 4);
    }
    CHECK(discriminant(MonicPolyZ::from_poly(parse_poly("(x-1)^2"))) == 0);
    CHECK(discriminant(MonicPolyZ::linear_root(Int(9))) == 1);
}

TEST_CASE("discriminant is an integer and matches the split oracle") {
    Rng rng(204);
    for (int iter = 0; iter < 100; ++iter) {
        RootMultiset roots;
        MonicPolyZ p = testgen::random_split_monic(rng, static_cast<int>(rng.range(1, 5)), 5,
                                                   &roots);
        Rat d = discriminant(p);
        CHECK(is_integer(d));
        CHECK(d == disc_from_roots(roots.sorted_values()));
    }
    for (int iter = 0; iter < 100; ++iter) {
        MonicPolyZ p = testgen::random_monic(rng, static_cast<int>(rng.range(1, 6)), 12);
        CHECK(is_integer(discriminant(p)));
    }
}

TEST_SUITE_END();
