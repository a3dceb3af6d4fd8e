#pragma once

#include <vector>

#include "bezkit/polynomial.hpp"

namespace bez {

struct PolyMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<Polynomial> entries;  // row-major, rows*cols

    PolyMatrix() = default;
    PolyMatrix(int r, int c, const Polynomial& fill)
        : rows(r), cols(c), entries(static_cast<size_t>(r) * c, fill) {}

    Polynomial& at(int i, int j) { return entries[static_cast<size_t>(i) * cols + j]; }
    const Polynomial& at(int i, int j) const {
        return entries[static_cast<size_t>(i) * cols + j];
    }
};

// Exact determinant over the polynomial ring: cofactor expansion for
// size <= 3, fraction-free Bareiss elimination above that.
Polynomial determinant(const PolyMatrix& m);

using RationalMatrix = std::vector<std::vector<Rational>>;

Rational rational_determinant(const RationalMatrix& m);

}  // namespace bez
