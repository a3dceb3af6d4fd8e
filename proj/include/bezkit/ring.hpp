#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace bez {

// The ambient polynomial ring k[x1..xn, y1..yn].  The y-block mirrors the
// x-block and exists for Bezoutians; user-facing systems live in the x-block.
struct RingContext {
    int n = 0;
    std::vector<std::string> names;  // size 2n: x-block then y-block

    static std::shared_ptr<const RingContext> standard(int n);
    static std::shared_ptr<const RingContext> with_x_names(
        const std::vector<std::string>& x_names);

    int nvars() const { return 2 * n; }
    bool is_y(int idx) const { return idx >= n; }
    // -1 when absent
    int index_of(std::string_view name) const;

    bool operator==(const RingContext&) const = default;
};

using RingPtr = std::shared_ptr<const RingContext>;

// Exponent vector of length 2n, x-block first.
using Monomial = std::vector<uint32_t>;

unsigned total_degree(const Monomial& m);
bool mono_divides(const Monomial& a, const Monomial& b);  // a | b
Monomial mono_mul(const Monomial& a, const Monomial& b);
Monomial mono_div(const Monomial& num, const Monomial& den);  // requires den | num
Monomial mono_lcm(const Monomial& a, const Monomial& b);
bool mono_coprime(const Monomial& a, const Monomial& b);

// Graded reverse lexicographic with x1 > x2 > ... > xn > y1 > ... > yn.
// Returns <0, 0, >0 for a < b, a = b, a > b.
int degrevlex_cmp(const Monomial& a, const Monomial& b);
int lex_cmp(const Monomial& a, const Monomial& b);

// Term-map comparator: leading (largest) monomial iterates first.
struct DegrevlexGreater {
    bool operator()(const Monomial& a, const Monomial& b) const {
        return degrevlex_cmp(a, b) > 0;
    }
};

struct MonomialOrder {
    enum class Kind { degrevlex, lex, block };

    Kind kind = Kind::degrevlex;
    // For block orders: the x-block is [0, block_split), degrevlex within
    // each block, x-block compared first.
    int block_split = 0;

    static MonomialOrder degrevlex() { return {Kind::degrevlex, 0}; }
    static MonomialOrder lex() { return {Kind::lex, 0}; }
    static MonomialOrder block(int n) { return {Kind::block, n}; }

    int cmp(const Monomial& a, const Monomial& b) const;
    bool less(const Monomial& a, const Monomial& b) const { return cmp(a, b) < 0; }

    bool operator==(const MonomialOrder&) const = default;
};

}  // namespace bez
