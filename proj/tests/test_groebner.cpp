#include <doctest.h>

#include <algorithm>

#include "bezkit/groebner.hpp"
#include "bezkit/parse.hpp"
#include "testutil.hpp"

using namespace bez;

namespace {

RingPtr ring3() {
    static RingPtr r = RingContext::standard(3);
    return r;
}

Polynomial P(const std::string& s) { return parse_polynomial(s, ring3()); }

std::vector<Polynomial> gens(std::initializer_list<const char*> texts) {
    std::vector<Polynomial> out;
    for (const char* t : texts) out.push_back(P(t));
    return out;
}

// Exhaustive Buchberger criterion: every S-polynomial reduces to zero.
bool buchberger_criterion_holds(const GroebnerBasis& gb) {
    for (size_t i = 0; i < gb.generators.size(); ++i)
        for (size_t j = i + 1; j < gb.generators.size(); ++j) {
            Polynomial s = s_polynomial(gb.generators[i], gb.generators[j], gb.order);
            if (!normal_form(s, gb).is_zero()) return false;
        }
    return true;
}

}  // namespace

TEST_CASE("monomial ideal is already a reduced basis") {
    GroebnerBasis gb = buchberger(gens({"x1^2", "x2^2", "x3^2"}),
                                  MonomialOrder::degrevlex(), VarBlock::X);
    CHECK(gb.generators.size() == 3);
    CHECK_FALSE(gb.is_unit());
    CHECK(buchberger_criterion_holds(gb));
}

TEST_CASE("unit ideal collapses to {1}") {
    GroebnerBasis gb =
        buchberger(gens({"x1", "x1 + 1"}), MonomialOrder::degrevlex(), VarBlock::X);
    CHECK(gb.generators.size() == 1);
    CHECK(gb.generators[0] == P("1"));
    CHECK(is_unit_ideal(gb));
}

TEST_CASE("derived basis passes the S-polynomial check") {
    auto input = gens({"x1^2 - 1", "x1*x2 - x2"});
    GroebnerBasis gb = buchberger(input, MonomialOrder::degrevlex(), VarBlock::X);
    CHECK(buchberger_criterion_holds(gb));
    for (const Polynomial& g : input) CHECK(normal_form(g, gb).is_zero());
}

TEST_CASE("normal form examples") {
    GroebnerBasis sq = buchberger(gens({"x1^2", "x2^2", "x3^2"}),
                                  MonomialOrder::degrevlex(), VarBlock::X);
    CHECK(normal_form(P("x1^2"), sq).is_zero());

    GroebnerBasis mixed = buchberger(gens({"x1^2", "y1^2"}),
                                     MonomialOrder::degrevlex(), VarBlock::Both);
    CHECK(normal_form(P("x1 + y1"), mixed) == P("x1 + y1"));

    GroebnerBasis uni =
        buchberger(gens({"x1^2 - 1"}), MonomialOrder::degrevlex(), VarBlock::X);
    CHECK(normal_form(P("x1^3 + x1"), uni) == P("2*x1"));
}

TEST_CASE("standard monomials") {
    GroebnerBasis sq = buchberger(gens({"x1^2", "x2^2", "x3^2"}),
                                  MonomialOrder::degrevlex(), VarBlock::X);
    QuotientBasis qb = standard_monomials(sq);
    REQUIRE(qb.is_finite());
    CHECK(*qb.dimension == 8);
    std::vector<Polynomial> expected = {P("1"),     P("x1"),    P("x2"),
                                        P("x3"),    P("x1*x2"), P("x1*x3"),
                                        P("x2*x3"), P("x1*x2*x3")};
    CHECK(qb.monomials.size() == 8);
    for (const Polynomial& e : expected) {
        const Monomial& m = e.terms().begin()->first;
        CHECK(std::find(qb.monomials.begin(), qb.monomials.end(), m) !=
              qb.monomials.end());
    }

    GroebnerBasis unit =
        buchberger(gens({"x1", "x1 + 1"}), MonomialOrder::degrevlex(), VarBlock::X);
    QuotientBasis zq = standard_monomials(unit);
    CHECK(zq.monomials.empty());
    CHECK(*zq.dimension == 0);

    RingPtr ring2 = RingContext::standard(2);
    GroebnerBasis partial =
        buchberger({parse_polynomial("x1^2", ring2)}, MonomialOrder::degrevlex(),
                   VarBlock::X);
    CHECK_FALSE(standard_monomials(partial).is_finite());
}

TEST_CASE("quotient dimensions of named systems") {
    PolySystem sq = parse_system_text("vars x1 x2 x3\nf1 = x1^2\nf2 = x2^2\nf3 = x3^2");
    CHECK(*quotient_dimension(sq, {Rational(0), Rational(0), Rational(0)}) == 8);

    PolySystem id = parse_system_text("vars x1 x2\nf1 = x1\nf2 = x2");
    CHECK(*quotient_dimension(id, {Rational(7), Rational(-3)}) == 1);

    PolySystem collapse = parse_system_text("vars x1 x2\nf1 = x1*x2\nf2 = x2");
    CHECK_FALSE(quotient_dimension(collapse, {Rational(0), Rational(0)}).has_value());
}

TEST_CASE("unit ideal detection on a shifted fiber") {
    // f = squaring map, q = (1,1,1): the fiber contains (1,1,1), so the
    // ideal is proper.
    PolySystem sq = parse_system_text("vars x1 x2 x3\nf1 = x1^2\nf2 = x2^2\nf3 = x3^2");
    std::vector<Polynomial> shifted;
    for (const auto& p : sq.polys) shifted.push_back(p - P("1"));
    GroebnerBasis gb = buchberger(shifted, MonomialOrder::degrevlex(), VarBlock::X);
    CHECK_FALSE(is_unit_ideal(gb));
    std::vector<Rational> pt(6, Rational(0));
    pt[0] = pt[1] = pt[2] = 1;
    for (const auto& p : shifted) CHECK(p.evaluate(pt) == 0);
}

TEST_CASE("normal form is idempotent and ideal-invariant") {
    testutil::Rng rng(707);
    for (int trial = 0; trial < 30; ++trial) {
        int n = testutil::rand_int(rng, 1, 2);
        RingPtr ring = RingContext::standard(n);
        std::vector<Polynomial> g;
        for (int i = 0; i < n; ++i) {
            Polynomial gi = testutil::random_polynomial(rng, ring, n, 3);
            if (!gi.is_zero()) g.push_back(gi);
        }
        if (g.empty()) continue;
        GroebnerBasis gb = buchberger(g, MonomialOrder::degrevlex(), VarBlock::X);
        Polynomial p = testutil::random_polynomial(rng, ring, n, 4);
        Polynomial nf = normal_form(p, gb);
        CHECK(normal_form(nf, gb) == nf);

        // random ideal element: a combination of the generators
        Polynomial elt = Polynomial::zero(ring);
        for (const Polynomial& gi : g)
            elt += testutil::random_polynomial(rng, ring, n, 2) * gi;
        CHECK(normal_form(p + elt, gb) == nf);
        CHECK(buchberger_criterion_holds(gb));
    }
}

TEST_CASE("reduced basis is unique under generator permutation") {
    testutil::Rng rng(808);
    auto input = gens({"x1^2 + x2", "x1*x2 - x3", "x2^2 - x3^2 + x1", "x3^3 - 1"});
    GroebnerBasis ref = buchberger(input, MonomialOrder::degrevlex(), VarBlock::X);
    for (int trial = 0; trial < 10; ++trial) {
        std::shuffle(input.begin(), input.end(), rng);
        GroebnerBasis gb = buchberger(input, MonomialOrder::degrevlex(), VarBlock::X);
        REQUIRE(gb.generators.size() == ref.generators.size());
        for (size_t i = 0; i < gb.generators.size(); ++i)
            CHECK(gb.generators[i] == ref.generators[i]);
    }
}

TEST_CASE("disjoint-block factorization matches a direct 2n-variable run") {
    testutil::Rng rng(909);
    for (int trial = 0; trial < 10; ++trial) {
        int n = testutil::rand_int(rng, 1, 2);
        RingPtr ring = RingContext::standard(n);
        std::vector<Polynomial> gx, gboth;
        for (int i = 0; i < n; ++i) {
            Polynomial p = testutil::random_polynomial(rng, ring, n, 2);
            // force zero-dimensionality with a pure power
            Monomial pure(ring->nvars(), 0);
            pure[i] = 3;
            p.add_term(pure, Rational(1));
            gx.push_back(p);
            gboth.push_back(p);
        }
        // renamed copies into the y-block
        std::map<int, Polynomial> to_y;
        for (int i = 0; i < n; ++i)
            to_y.emplace(i, Polynomial::variable(ring, n + i));
        for (int i = 0; i < n; ++i) gboth.push_back(gx[i].substitute(to_y));

        GroebnerBasis direct =
            buchberger(gboth, MonomialOrder::degrevlex(), VarBlock::Both);
        GroebnerBasis bx = buchberger(gx, MonomialOrder::degrevlex(), VarBlock::X);

        GroebnerBasis unioned;
        unioned.ring = ring;
        unioned.order = MonomialOrder::degrevlex();
        unioned.block = VarBlock::Both;
        unioned.generators = bx.generators;
        for (const Polynomial& g : bx.generators)
            unioned.generators.push_back(g.substitute(to_y));

        CHECK(buchberger_criterion_holds(unioned));

        QuotientBasis qd = standard_monomials(direct);
        QuotientBasis qu = standard_monomials(unioned);
        QuotientBasis qx = standard_monomials(bx);
        REQUIRE(qd.is_finite());
        REQUIRE(qu.is_finite());
        REQUIRE(qx.is_finite());
        CHECK(*qd.dimension == *qu.dimension);
        CHECK(*qu.dimension == (*qx.dimension) * (*qx.dimension));
        // tensor structure: every union standard monomial splits into an
        // x-part and a y-part from the block staircase
        for (const Monomial& m : qu.monomials) {
            Monomial xpart(2 * n, 0), ypart(2 * n, 0);
            for (int v = 0; v < n; ++v) {
                xpart[v] = m[v];
                ypart[v] = m[n + v];
            }
            auto in_block = [&](const Monomial& part) {
                return std::find(qx.monomials.begin(), qx.monomials.end(), part) !=
                       qx.monomials.end();
            };
            CHECK(in_block(xpart));
            CHECK(in_block(ypart));
        }
    }
}

TEST_CASE("degrevlex and block order agree on dimension") {
    auto input = gens({"x1^2 - x2", "x2^2 - 1", "x3^2 - x1*x2"});
    GroebnerBasis drl = buchberger(input, MonomialOrder::degrevlex(), VarBlock::X);
    GroebnerBasis blk = buchberger(input, MonomialOrder::block(3), VarBlock::X);
    CHECK(buchberger_criterion_holds(blk));
    CHECK(*standard_monomials(drl).dimension == *standard_monomials(blk).dimension);
}
