#pragma once

#include <optional>
#include <vector>

#include "bezkit/polynomial.hpp"

namespace bez {

// Which variables the ideal is allowed to involve; zero-dimensionality and
// standard monomials are judged against this ambient set.
enum class VarBlock { X, Y, Both };

std::vector<int> block_variables(const RingContext& ring, VarBlock block);

struct GroebnerBasis {
    RingPtr ring;
    MonomialOrder order;
    VarBlock block = VarBlock::Both;
    std::vector<Polynomial> generators;  // monic, auto-reduced, sorted by LM

    bool is_unit() const;
    // Some generator's leading monomial divides m.
    bool reducible(const Monomial& m) const;
};

// Unique reduced Groebner basis of the ideal generated by gens.
GroebnerBasis buchberger(const std::vector<Polynomial>& gens,
                         const MonomialOrder& order, VarBlock block = VarBlock::Both);

// Unique remainder: no monomial of the result is divisible by any leading
// monomial of the basis.
Polynomial normal_form(const Polynomial& p, const GroebnerBasis& gb);

bool is_unit_ideal(const GroebnerBasis& gb);

struct QuotientBasis {
    std::vector<Monomial> monomials;       // ascending in gb's order
    std::optional<size_t> dimension;       // nullopt = infinite

    bool is_finite() const { return dimension.has_value(); }
};

// Monomials below the leading-term staircase, or the infinite marker when
// some block variable has no pure-power leading monomial.
QuotientBasis standard_monomials(const GroebnerBasis& gb);

struct PolySystem;

// dim_k k[x]/(f - q); nullopt marks an infinite-dimensional quotient.
std::optional<size_t> quotient_dimension(const PolySystem& f,
                                         const std::vector<Rational>& q);

// S-polynomial of two nonzero polynomials under the given order.
Polynomial s_polynomial(const Polynomial& a, const Polynomial& b,
                        const MonomialOrder& order);

}  // namespace bez
