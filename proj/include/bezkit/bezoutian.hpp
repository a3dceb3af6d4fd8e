#pragma once

#include <optional>
#include <vector>

#include "bezkit/groebner.hpp"
#include "bezkit/matrix.hpp"
#include "bezkit/polynomial.hpp"

namespace bez {

// A polynomial endomorphism f = (f1..fn) of affine n-space; every component
// uses only the x-block.
struct PolySystem {
    RingPtr ring;
    std::vector<Polynomial> polys;

    PolySystem() = default;
    PolySystem(RingPtr ring_, std::vector<Polynomial> polys_);

    int n() const { return ring->n; }
};

using RationalPoint = std::vector<Rational>;

// f - q, componentwise.
PolySystem translate(const PolySystem& f, const RationalPoint& q);

// Entry (i,j) is (f_i(y1..y_{j-1}, x_j..x_n) - f_i(y1..y_j, x_{j+1}..x_n))
// divided exactly by (x_j - y_j).
PolyMatrix delta_matrix(const PolySystem& f);

Polynomial bezoutian(const PolySystem& f);

// Substitutes y_i -> x_i.
Polynomial delta_specialize(const Polynomial& p);

Polynomial jacobian(const PolySystem& f);

struct BezoutianReport {
    Polynomial bezoutian;          // in k[x, y]
    Polynomial jacobian;           // in k[x]
    Polynomial reduced_bezoutian;  // normal form mod (f(x)-q, f(y)-q)
    bool reduced_is_constant = false;
    std::optional<Rational> reduced_constant_value;
    bool ideal_is_unit = false;
    std::optional<size_t> quotient_dimension_x;
};

// Requires (f - q) zero-dimensional or unit in the x-block; throws
// NotFiniteFibers otherwise.
BezoutianReport reduced_bezoutian(const PolySystem& f, const RationalPoint& q);

struct CoefficientMatrix {
    QuotientBasis basis;     // x-block standard monomials, shared by both axes
    RationalMatrix entries;  // B_ij over the tensor basis c_i(x) c_j(y)

    Rational det() const { return rational_determinant(entries); }
};

// Expands the reduced Bezoutian over the tensor basis of standard monomials.
// Throws UnitIdealError when the quotient is the zero ring.
CoefficientMatrix coefficient_matrix(const PolySystem& f, const RationalPoint& q);

}  // namespace bez
