#include "bezkit/groebner.hpp"

#include <algorithm>
#include <set>

#include "bezkit/bezoutian.hpp"

namespace bez {

std::vector<int> block_variables(const RingContext& ring, VarBlock block) {
    std::vector<int> vars;
    const int lo = (block == VarBlock::Y) ? ring.n : 0;
    const int hi = (block == VarBlock::X) ? ring.n : ring.nvars();
    for (int v = lo; v < hi; ++v) vars.push_back(v);
    return vars;
}

Polynomial s_polynomial(const Polynomial& a, const Polynomial& b,
                        const MonomialOrder& order) {
    const Monomial& la = a.leading_monomial(order);
    const Monomial& lb = b.leading_monomial(order);
    Monomial l = mono_lcm(la, lb);
    Polynomial ta = Polynomial::term(a.ring(), mono_div(l, la),
                                     Rational(1) / a.coeff(la));
    Polynomial tb = Polynomial::term(b.ring(), mono_div(l, lb),
                                     Rational(1) / b.coeff(lb));
    return ta * a - tb * b;
}

namespace {

// Full reduction of p by a list of nonzero polynomials.
Polynomial reduce_full(const Polynomial& p, const std::vector<Polynomial>& gens,
                       const MonomialOrder& order) {
    Polynomial remainder(p.ring());
    Polynomial h = p;
    while (!h.is_zero()) {
        const Monomial lm = h.leading_monomial(order);
        const Rational lc = h.coeff(lm);
        bool reduced = false;
        for (const Polynomial& g : gens) {
            const Monomial& glm = g.leading_monomial(order);
            if (mono_divides(glm, lm)) {
                Polynomial t = Polynomial::term(p.ring(), mono_div(lm, glm),
                                                lc / g.coeff(glm));
                h -= t * g;
                reduced = true;
                break;
            }
        }
        if (!reduced) {
            remainder.add_term(lm, lc);
            h.add_term(lm, -lc);
        }
    }
    return remainder;
}

struct Pair {
    int i, j;
    Monomial lcm;
    unsigned deg;
};

}  // namespace

GroebnerBasis buchberger(const std::vector<Polynomial>& gens,
                         const MonomialOrder& order, VarBlock block) {
    RingPtr ring;
    std::vector<Polynomial> basis;
    for (const Polynomial& g : gens) {
        if (!ring && g.ring()) ring = g.ring();
        if (g.ring() && !(*g.ring() == *ring))
            throw RingMismatch("generators built over different rings");
        if (!g.is_zero()) basis.push_back(g);
    }
    if (!ring) throw std::invalid_argument("buchberger needs at least one generator");

    auto make_pair = [&](int i, int j) {
        Pair p;
        p.i = i;
        p.j = j;
        p.lcm = mono_lcm(basis[i].leading_monomial(order),
                         basis[j].leading_monomial(order));
        p.deg = total_degree(p.lcm);
        return p;
    };

    std::vector<Pair> pending;
    for (size_t j = 1; j < basis.size(); ++j)
        for (size_t i = 0; i < j; ++i)
            pending.push_back(make_pair(static_cast<int>(i), static_cast<int>(j)));

    // Pairs whose S-polynomial provably reduces to zero: processed pairs and
    // pairs with coprime leading terms.  Pairs skipped by the chain criterion
    // are deliberately excluded so that chain discards cannot justify each
    // other circularly.
    std::set<std::pair<int, int>> settled;

    while (!pending.empty()) {
        // Normal strategy: minimal lcm degree first.
        size_t best = 0;
        for (size_t k = 1; k < pending.size(); ++k) {
            if (pending[k].deg < pending[best].deg ||
                (pending[k].deg == pending[best].deg &&
                 std::tie(pending[k].i, pending[k].j) <
                     std::tie(pending[best].i, pending[best].j)))
                best = k;
        }
        Pair p = pending[best];
        pending.erase(pending.begin() + best);

        const Monomial& li = basis[p.i].leading_monomial(order);
        const Monomial& lj = basis[p.j].leading_monomial(order);
        // First Buchberger criterion: coprime leading terms reduce to zero.
        if (mono_coprime(li, lj)) {
            settled.insert({p.i, p.j});
            continue;
        }
        // Chain criterion: some k divides the lcm and both flanking pairs
        // are already settled.
        bool chained = false;
        for (size_t k = 0; k < basis.size(); ++k) {
            if (static_cast<int>(k) == p.i || static_cast<int>(k) == p.j) continue;
            if (!mono_divides(basis[k].leading_monomial(order), p.lcm)) continue;
            auto key1 = std::minmax(static_cast<int>(k), p.i);
            auto key2 = std::minmax(static_cast<int>(k), p.j);
            if (settled.count({key1.first, key1.second}) &&
                settled.count({key2.first, key2.second})) {
                chained = true;
                break;
            }
        }
        if (chained) continue;

        Polynomial s = s_polynomial(basis[p.i], basis[p.j], order);
        Polynomial r = reduce_full(s, basis, order);
        settled.insert({p.i, p.j});
        if (r.is_zero()) continue;
        basis.push_back(r);
        int newest = static_cast<int>(basis.size()) - 1;
        for (int i = 0; i < newest; ++i) pending.push_back(make_pair(i, newest));
    }

    // Minimalize: drop generators whose LM is divisible by another LM.
    std::vector<Polynomial> minimal;
    for (size_t i = 0; i < basis.size(); ++i) {
        const Monomial& li = basis[i].leading_monomial(order);
        bool redundant = false;
        for (size_t j = 0; j < basis.size(); ++j) {
            if (i == j) continue;
            const Monomial& lj = basis[j].leading_monomial(order);
            if (mono_divides(lj, li) && (li != lj || j < i)) {
                redundant = true;
                break;
            }
        }
        if (!redundant) minimal.push_back(basis[i]);
    }

    // Inter-reduce tails and make monic.
    std::vector<Polynomial> reduced(minimal.size(), Polynomial(ring));
    for (size_t i = 0; i < minimal.size(); ++i) {
        std::vector<Polynomial> others;
        for (size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(minimal[j]);
        Polynomial r = others.empty() ? minimal[i]
                                      : reduce_full(minimal[i], others, order);
        reduced[i] = (Rational(1) / r.leading_coeff(order)) * r;
    }

    std::sort(reduced.begin(), reduced.end(),
              [&](const Polynomial& a, const Polynomial& b) {
                  return order.less(a.leading_monomial(order),
                                    b.leading_monomial(order));
              });

    GroebnerBasis gb;
    gb.ring = ring;
    gb.order = order;
    gb.block = block;
    gb.generators = std::move(reduced);
    return gb;
}

bool GroebnerBasis::is_unit() const {
    return generators.size() == 1 && generators.front().is_constant() &&
           !generators.front().is_zero();
}

bool GroebnerBasis::reducible(const Monomial& m) const {
    for (const Polynomial& g : generators)
        if (mono_divides(g.leading_monomial(order), m)) return true;
    return false;
}

Polynomial normal_form(const Polynomial& p, const GroebnerBasis& gb) {
    if (!p.ring() || !(*p.ring() == *gb.ring))
        throw RingMismatch("polynomial and basis built over different rings");
    return reduce_full(p, gb.generators, gb.order);
}

bool is_unit_ideal(const GroebnerBasis& gb) { return gb.is_unit(); }

QuotientBasis standard_monomials(const GroebnerBasis& gb) {
    QuotientBasis qb;
    if (gb.is_unit()) {
        qb.dimension = 0;
        return qb;
    }
    const std::vector<int> vars = block_variables(*gb.ring, gb.block);
    const int nv = gb.ring->nvars();

    // Zero-dimensional iff every block variable has a pure-power leading
    // monomial; its exponent bounds the staircase in that direction.
    std::vector<uint32_t> bound(vars.size(), 0);
    for (size_t vi = 0; vi < vars.size(); ++vi) {
        bool found = false;
        uint32_t best = 0;
        for (const Polynomial& g : gb.generators) {
            const Monomial& lm = g.leading_monomial(gb.order);
            bool pure = true;
            for (int w = 0; w < nv; ++w) {
                if (w != vars[vi] && lm[w] != 0) {
                    pure = false;
                    break;
                }
            }
            if (pure) {
                if (!found || lm[vars[vi]] < best) best = lm[vars[vi]];
                found = true;
            }
        }
        if (!found) return qb;  // infinite marker
        bound[vi] = best;
    }

    std::vector<uint32_t> exps(vars.size(), 0);
    std::vector<Monomial> result;
    while (true) {
        Monomial m(nv, 0);
        for (size_t vi = 0; vi < vars.size(); ++vi) m[vars[vi]] = exps[vi];
        if (!gb.reducible(m)) result.push_back(std::move(m));
        size_t pos = 0;
        while (pos < vars.size()) {
            if (++exps[pos] < bound[pos]) break;
            exps[pos] = 0;
            ++pos;
        }
        if (pos == vars.size()) break;
    }
    std::sort(result.begin(), result.end(),
              [&](const Monomial& a, const Monomial& b) { return gb.order.less(a, b); });
    qb.monomials = std::move(result);
    qb.dimension = qb.monomials.size();
    return qb;
}

std::optional<size_t> quotient_dimension(const PolySystem& f,
                                         const std::vector<Rational>& q) {
    PolySystem shifted = translate(f, q);
    GroebnerBasis gb =
        buchberger(shifted.polys, MonomialOrder::degrevlex(), VarBlock::X);
    return standard_monomials(gb).dimension;
}

}  // namespace bez
