#include "bezkit/bezoutian.hpp"

#include <stdexcept>

namespace bez {

PolySystem::PolySystem(RingPtr ring_, std::vector<Polynomial> polys_)
    : ring(std::move(ring_)), polys(std::move(polys_)) {
    if (static_cast<int>(polys.size()) != ring->n)
        throw ArityMismatch("system must have exactly n components");
    for (const Polynomial& p : polys) {
        if (!p.ring() || !(*p.ring() == *ring))
            throw RingMismatch("system component in a different ring");
        for (const auto& [m, c] : p.terms()) {
            for (int v = ring->n; v < ring->nvars(); ++v)
                if (m[v] != 0)
                    throw std::invalid_argument(
                        "system components must not use y-variables");
        }
    }
}

PolySystem translate(const PolySystem& f, const RationalPoint& q) {
    if (static_cast<int>(q.size()) != f.n())
        throw ArityMismatch("point must have exactly n coordinates");
    std::vector<Polynomial> shifted;
    shifted.reserve(f.polys.size());
    for (size_t i = 0; i < f.polys.size(); ++i)
        shifted.push_back(f.polys[i] - Polynomial::constant(f.ring, q[i]));
    return PolySystem(f.ring, std::move(shifted));
}

PolyMatrix delta_matrix(const PolySystem& f) {
    const int n = f.n();
    const RingPtr& ring = f.ring;
    PolyMatrix m(n, n, Polynomial::zero(ring));

    // staircase[j] = f_i with x_1..x_j replaced by y_1..y_j.
    for (int i = 0; i < n; ++i) {
        std::map<int, Polynomial> subs;
        Polynomial upper = f.polys[i];  // j = 0: untouched
        for (int j = 0; j < n; ++j) {
            subs.emplace(j, Polynomial::variable(ring, ring->n + j));
            Polynomial lower = f.polys[i].substitute(subs);
            Polynomial den = Polynomial::variable(ring, j) -
                             Polynomial::variable(ring, ring->n + j);
            Polynomial num = upper - lower;
            m.at(i, j) = num.is_zero() ? num : exact_quotient(num, den);
            upper = std::move(lower);
        }
    }
    return m;
}

Polynomial bezoutian(const PolySystem& f) { return determinant(delta_matrix(f)); }

Polynomial delta_specialize(const Polynomial& p) {
    const RingPtr& ring = p.ring();
    std::map<int, Polynomial> subs;
    for (int i = 0; i < ring->n; ++i)
        subs.emplace(ring->n + i, Polynomial::variable(ring, i));
    return p.substitute(subs);
}

Polynomial jacobian(const PolySystem& f) {
    const int n = f.n();
    PolyMatrix m(n, n, Polynomial::zero(f.ring));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m.at(i, j) = f.polys[i].derivative(j);
    return determinant(m);
}

namespace {

// Rename the x-block generators of an x-only polynomial into the y-block.
Polynomial rename_x_to_y(const Polynomial& p) {
    const RingPtr& ring = p.ring();
    std::map<int, Polynomial> subs;
    for (int i = 0; i < ring->n; ++i)
        subs.emplace(i, Polynomial::variable(ring, ring->n + i));
    return p.substitute(subs);
}

// The union of the x-block basis and its y-renamed copy is the reduced
// Groebner basis of (f(x)-q, f(y)-q): the blocks are disjoint, so all
// cross-block S-pairs have coprime leading terms.
GroebnerBasis union_basis(const GroebnerBasis& gb_x) {
    GroebnerBasis gb;
    gb.ring = gb_x.ring;
    gb.order = gb_x.order;
    gb.block = VarBlock::Both;
    gb.generators = gb_x.generators;
    for (const Polynomial& g : gb_x.generators)
        gb.generators.push_back(rename_x_to_y(g));
    return gb;
}

}  // namespace

BezoutianReport reduced_bezoutian(const PolySystem& f, const RationalPoint& q) {
    BezoutianReport report;
    report.bezoutian = bezoutian(f);  // Bez(f) = Bez(f - q)
    report.jacobian = jacobian(f);

    PolySystem shifted = translate(f, q);
    GroebnerBasis gb_x =
        buchberger(shifted.polys, MonomialOrder::degrevlex(), VarBlock::X);

    if (gb_x.is_unit()) {
        report.ideal_is_unit = true;
        report.reduced_bezoutian = Polynomial::zero(f.ring);
        report.reduced_is_constant = true;
        report.reduced_constant_value = Rational(0);
        report.quotient_dimension_x = 0;
        return report;
    }

    QuotientBasis qb = standard_monomials(gb_x);
    if (!qb.is_finite())
        throw NotFiniteFibers("(f - q) is not zero-dimensional; fibers may be infinite");
    report.quotient_dimension_x = qb.dimension;

    GroebnerBasis gb = union_basis(gb_x);
    report.reduced_bezoutian = normal_form(report.bezoutian, gb);
    report.reduced_is_constant = report.reduced_bezoutian.is_constant();
    if (report.reduced_is_constant)
        report.reduced_constant_value = report.reduced_bezoutian.constant_value();
    return report;
}

CoefficientMatrix coefficient_matrix(const PolySystem& f, const RationalPoint& q) {
    PolySystem shifted = translate(f, q);
    GroebnerBasis gb_x =
        buchberger(shifted.polys, MonomialOrder::degrevlex(), VarBlock::X);
    if (gb_x.is_unit())
        throw UnitIdealError("the quotient ring is zero; no monomial basis exists");
    QuotientBasis qb = standard_monomials(gb_x);
    if (!qb.is_finite())
        throw NotFiniteFibers("(f - q) is not zero-dimensional; fibers may be infinite");

    BezoutianReport report = reduced_bezoutian(f, q);

    const int n = f.n();
    const int nv = f.ring->nvars();
    const size_t m = *qb.dimension;

    std::map<Monomial, size_t> index;
    for (size_t i = 0; i < m; ++i) index.emplace(qb.monomials[i], i);

    CoefficientMatrix cm;
    cm.basis = qb;
    cm.entries.assign(m, std::vector<Rational>(m, Rational(0)));
    for (const auto& [mono, c] : report.reduced_bezoutian.terms()) {
        Monomial xpart(nv, 0), ypart_as_x(nv, 0);
        for (int v = 0; v < n; ++v) {
            xpart[v] = mono[v];
            ypart_as_x[v] = mono[n + v];
        }
        auto it_x = index.find(xpart);
        auto it_y = index.find(ypart_as_x);
        if (it_x == index.end() || it_y == index.end())
            throw std::logic_error(
                "reduced Bezoutian has a monomial outside the tensor basis");
        cm.entries[it_x->second][it_y->second] += c;
    }
    return cm;
}

}  // namespace bez
