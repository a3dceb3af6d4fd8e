#include <doctest.h>

#include "bezkit/bezoutian.hpp"
#include "bezkit/parse.hpp"
#include "testutil.hpp"

using namespace bez;

namespace {

PolySystem squaring() {
    return parse_system_text("vars x1 x2 x3\nf1 = x1^2\nf2 = x2^2\nf3 = x3^2");
}

PolySystem identity2() {
    return parse_system_text("vars x1 x2\nf1 = x1\nf2 = x2");
}

RationalPoint origin(int n) { return RationalPoint(n, Rational(0)); }

}  // namespace

TEST_CASE("delta matrix entries") {
    PolySystem f1 = parse_system_text("vars x1\nf1 = x1^2");
    PolyMatrix d1 = delta_matrix(f1);
    CHECK(d1.at(0, 0) == parse_polynomial("x1 + y1", f1.ring));

    PolyMatrix d2 = delta_matrix(identity2());
    RingPtr r2 = identity2().ring;
    CHECK(d2.at(0, 0) == parse_polynomial("1", r2));
    CHECK(d2.at(0, 1).is_zero());
    CHECK(d2.at(1, 0).is_zero());
    CHECK(d2.at(1, 1) == parse_polynomial("1", r2));

    PolySystem tri = parse_system_text("vars x1 x2\nf1 = x1 + x2^3\nf2 = x2");
    PolyMatrix dt = delta_matrix(tri);
    CHECK(dt.at(0, 0) == parse_polynomial("1", tri.ring));
    CHECK(dt.at(0, 1) == parse_polynomial("x2^2 + x2*y2 + y2^2", tri.ring));
    CHECK(dt.at(1, 0).is_zero());
    CHECK(dt.at(1, 1) == parse_polynomial("1", tri.ring));
}

TEST_CASE("bezoutian of the squaring map") {
    PolySystem f = squaring();
    Polynomial b = bezoutian(f);
    Polynomial expected = parse_polynomial(
        "x1*x2*x3 + x2*x3*y1 + x1*x3*y2 + x1*x2*y3 + x1*y2*y3 + x2*y1*y3 + "
        "x3*y1*y2 + y1*y2*y3",
        f.ring);
    CHECK(b == expected);
    CHECK(bezoutian(identity2()) == parse_polynomial("1", identity2().ring));
    PolySystem tri = parse_system_text("vars x1 x2\nf1 = x1 + x2^3\nf2 = x2");
    CHECK(bezoutian(tri) == parse_polynomial("1", tri.ring));
}

TEST_CASE("delta specialization") {
    RingPtr r = RingContext::standard(1);
    CHECK(delta_specialize(parse_polynomial("x1 + y1", r)) ==
          parse_polynomial("2*x1", r));
    PolySystem f = squaring();
    CHECK(delta_specialize(bezoutian(f)) ==
          parse_polynomial("8*x1*x2*x3", f.ring));
    Polynomial no_y = parse_polynomial("x1^2 - 3*x1", r);
    CHECK(delta_specialize(no_y) == no_y);
}

TEST_CASE("jacobian") {
    PolySystem f = squaring();
    CHECK(jacobian(f) == parse_polynomial("8*x1*x2*x3", f.ring));
    CHECK(jacobian(identity2()) == parse_polynomial("1", identity2().ring));
    PolySystem tri = parse_system_text("vars x1 x2\nf1 = x1 + x2^3\nf2 = x2");
    CHECK(jacobian(tri) == parse_polynomial("1", tri.ring));
}

TEST_CASE("delta o bezoutian equals jacobian on random systems") {
    testutil::Rng rng(111);
    for (int trial = 0; trial < 100; ++trial) {
        int n = testutil::rand_int(rng, 1, 3);
        PolySystem f = testutil::random_system(rng, n, 3);
        CHECK(delta_specialize(bezoutian(f)) == jacobian(f));
    }
}

TEST_CASE("bezoutian is translation invariant") {
    testutil::Rng rng(222);
    for (int trial = 0; trial < 50; ++trial) {
        int n = testutil::rand_int(rng, 1, 3);
        PolySystem f = testutil::random_system(rng, n, 3);
        RationalPoint q = testutil::random_point(rng, n);
        CHECK(bezoutian(f) == bezoutian(translate(f, q)));
    }
}

TEST_CASE("bezoutian of a linear map is its determinant") {
    testutil::Rng rng(333);
    for (int trial = 0; trial < 20; ++trial) {
        int n = testutil::rand_int(rng, 2, 3);
        RingPtr ring = RingContext::standard(n);
        RationalMatrix m(n, std::vector<Rational>(n));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                m[i][j] = Rational(testutil::rand_int(rng, -4, 4));
        if (rational_determinant(m) == 0) continue;
        std::vector<Polynomial> polys;
        for (int i = 0; i < n; ++i) {
            Polynomial p = Polynomial::zero(ring);
            for (int j = 0; j < n; ++j)
                p += m[i][j] * Polynomial::variable(ring, j);
            polys.push_back(p);
        }
        PolySystem f(ring, polys);
        Polynomial b = bezoutian(f);
        REQUIRE(b.is_constant());
        CHECK(b.constant_value() == rational_determinant(m));
    }
}

TEST_CASE("reduced bezoutian of the squaring map at the origin") {
    PolySystem f = squaring();
    BezoutianReport r = reduced_bezoutian(f, origin(3));
    CHECK(r.reduced_bezoutian == r.bezoutian);  // already fully reduced
    CHECK_FALSE(r.reduced_is_constant);
    CHECK_FALSE(r.ideal_is_unit);
    CHECK(*r.quotient_dimension_x == 8);
}

TEST_CASE("reduced bezoutian of the identity map") {
    PolySystem f = identity2();
    BezoutianReport r = reduced_bezoutian(f, {Rational(5), Rational(-2)});
    CHECK(r.reduced_is_constant);
    CHECK(*r.reduced_constant_value == 1);
    CHECK(*r.quotient_dimension_x == 1);
}

TEST_CASE("reduced bezoutian with an empty fiber reports constant zero") {
    // (f - (0, 1)) contains both x1 - x2 and x1 - x2 - 1, hence 1.
    PolySystem f = parse_system_text("vars x1 x2\nf1 = x1 - x2\nf2 = x1 - x2");
    BezoutianReport r = reduced_bezoutian(f, {Rational(0), Rational(1)});
    CHECK(r.ideal_is_unit);
    CHECK(r.reduced_is_constant);
    CHECK(*r.reduced_constant_value == 0);
    CHECK(r.reduced_bezoutian.is_zero());
}

TEST_CASE("reduced bezoutian refuses non-finite fibers") {
    PolySystem f = parse_system_text("vars x1 x2\nf1 = x1*x2\nf2 = x2");
    CHECK_THROWS_AS(reduced_bezoutian(f, origin(2)), NotFiniteFibers);
}

TEST_CASE("constancy implies quotient dimension at most one") {
    testutil::Rng rng(444);
    int checked = 0;
    for (int trial = 0; trial < 60 && checked < 20; ++trial) {
        int n = testutil::rand_int(rng, 1, 2);
        PolySystem f = testutil::random_system(rng, n, 2);
        RationalPoint q = testutil::random_point(rng, n, 2);
        try {
            BezoutianReport r = reduced_bezoutian(f, q);
            ++checked;
            if (r.reduced_is_constant) CHECK(*r.quotient_dimension_x <= 1);
        } catch (const NotFiniteFibers&) {
            continue;
        }
    }
    CHECK(checked >= 10);
}

TEST_CASE("coefficient matrix of the squaring map pairs complementary monomials") {
    PolySystem f = squaring();
    CoefficientMatrix cm = coefficient_matrix(f, origin(3));
    REQUIRE(*cm.basis.dimension == 8);
    // every entry is 0 or 1, each row and column has exactly one 1
    for (size_t i = 0; i < 8; ++i) {
        int row_ones = 0;
        for (size_t j = 0; j < 8; ++j) {
            CHECK((cm.entries[i][j] == 0 || cm.entries[i][j] == 1));
            if (cm.entries[i][j] == 1) ++row_ones;
        }
        CHECK(row_ones == 1);
    }
    // complementary pairing: entry (i, j) = 1 iff c_i * c_j = x1*x2*x3
    for (size_t i = 0; i < 8; ++i)
        for (size_t j = 0; j < 8; ++j)
            if (cm.entries[i][j] == 1)
                CHECK(total_degree(cm.basis.monomials[i]) +
                          total_degree(cm.basis.monomials[j]) ==
                      3);
    Rational det = cm.det();
    CHECK(det != 0);
}

TEST_CASE("coefficient matrix of the identity map") {
    PolySystem f = identity2();
    CoefficientMatrix cm = coefficient_matrix(f, origin(2));
    REQUIRE(*cm.basis.dimension == 1);
    CHECK(cm.entries[0][0] == 1);
}

TEST_CASE("coefficient matrix of univariate squaring") {
    PolySystem f = parse_system_text("vars x1\nf1 = x1^2");
    CoefficientMatrix cm = coefficient_matrix(f, origin(1));
    REQUIRE(*cm.basis.dimension == 2);
    // basis ascending: {1, x1}; Bez = x1 + y1 = 1*(x1)(1) + 1*(1)(y1)
    CHECK(cm.entries[0][0] == 0);
    CHECK(cm.entries[0][1] == 1);
    CHECK(cm.entries[1][0] == 1);
    CHECK(cm.entries[1][1] == 0);
    CHECK(cm.det() == -1);
}

TEST_CASE("coefficient matrix reconstructs the reduced bezoutian and is nonsingular") {
    testutil::Rng rng(555);
    int instances = 0;
    while (instances < 10) {
        int n = testutil::rand_int(rng, 1, 2);
        PolySystem f = testutil::random_system(rng, n, 2);
        RationalPoint q = testutil::random_point(rng, n, 2);
        try {
            CoefficientMatrix cm = coefficient_matrix(f, q);
            BezoutianReport r = reduced_bezoutian(f, q);
            // reconstruct sum B_ij c_i(x) c_j(y)
            RingPtr ring = f.ring;
            std::map<int, Polynomial> to_y;
            for (int v = 0; v < n; ++v)
                to_y.emplace(v, Polynomial::variable(ring, n + v));
            Polynomial sum = Polynomial::zero(ring);
            const size_t m = *cm.basis.dimension;
            for (size_t i = 0; i < m; ++i) {
                Polynomial ci = Polynomial::term(ring, cm.basis.monomials[i], 1);
                for (size_t j = 0; j < m; ++j) {
                    if (cm.entries[i][j] == 0) continue;
                    Polynomial cj =
                        Polynomial::term(ring, cm.basis.monomials[j], 1)
                            .substitute(to_y);
                    sum += cm.entries[i][j] * (ci * cj);
                }
            }
            CHECK(sum == r.reduced_bezoutian);
            CHECK(cm.det() != 0);
            ++instances;
        } catch (const NotFiniteFibers&) {
        } catch (const UnitIdealError&) {
        }
    }
}
