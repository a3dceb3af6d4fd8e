#include "bezkit/ring.hpp"

#include <set>
#include <stdexcept>

namespace bez {

std::shared_ptr<const RingContext> RingContext::standard(int n) {
    if (n < 1) throw std::invalid_argument("ring dimension must be >= 1");
    auto ctx = std::make_shared<RingContext>();
    ctx->n = n;
    ctx->names.reserve(2 * n);
    for (int i = 1; i <= n; ++i) ctx->names.push_back("x" + std::to_string(i));
    for (int i = 1; i <= n; ++i) ctx->names.push_back("y" + std::to_string(i));
    return ctx;
}

std::shared_ptr<const RingContext> RingContext::with_x_names(
    const std::vector<std::string>& x_names) {
    int n = static_cast<int>(x_names.size());
    if (n < 1) throw std::invalid_argument("ring dimension must be >= 1");
    auto ctx = std::make_shared<RingContext>();
    ctx->n = n;
    ctx->names = x_names;
    for (int i = 1; i <= n; ++i) ctx->names.push_back("y" + std::to_string(i));
    std::set<std::string> seen(ctx->names.begin(), ctx->names.end());
    if (static_cast<int>(seen.size()) != 2 * n)
        throw std::invalid_argument("variable names must be pairwise distinct");
    return ctx;
}

int RingContext::index_of(std::string_view name) const {
    for (size_t i = 0; i < names.size(); ++i)
        if (names[i] == name) return static_cast<int>(i);
    return -1;
}

unsigned total_degree(const Monomial& m) {
    unsigned d = 0;
    for (auto e : m) d += e;
    return d;
}

bool mono_divides(const Monomial& a, const Monomial& b) {
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

Monomial mono_mul(const Monomial& a, const Monomial& b) {
    Monomial r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

Monomial mono_div(const Monomial& num, const Monomial& den) {
    Monomial r(num.size());
    for (size_t i = 0; i < num.size(); ++i) r[i] = num[i] - den[i];
    return r;
}

Monomial mono_lcm(const Monomial& a, const Monomial& b) {
    Monomial r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
    return r;
}

bool mono_coprime(const Monomial& a, const Monomial& b) {
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] != 0 && b[i] != 0) return false;
    return true;
}

int degrevlex_cmp(const Monomial& a, const Monomial& b) {
    unsigned da = total_degree(a), db = total_degree(b);
    if (da != db) return da < db ? -1 : 1;
    // Equal degrees: the last differing exponent decides, smaller wins.
    for (size_t i = a.size(); i-- > 0;) {
        if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
    }
    return 0;
}

int lex_cmp(const Monomial& a, const Monomial& b) {
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    }
    return 0;
}

namespace {
int degrevlex_cmp_range(const Monomial& a, const Monomial& b, size_t lo, size_t hi) {
    unsigned da = 0, db = 0;
    for (size_t i = lo; i < hi; ++i) {
        da += a[i];
        db += b[i];
    }
    if (da != db) return da < db ? -1 : 1;
    for (size_t i = hi; i-- > lo;) {
        if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
    }
    return 0;
}
}  // namespace

int MonomialOrder::cmp(const Monomial& a, const Monomial& b) const {
    switch (kind) {
        case Kind::degrevlex:
            return degrevlex_cmp(a, b);
        case Kind::lex:
            return lex_cmp(a, b);
        case Kind::block: {
            size_t split = static_cast<size_t>(block_split);
            int c = degrevlex_cmp_range(a, b, 0, split);
            if (c != 0) return c;
            return degrevlex_cmp_range(a, b, split, a.size());
        }
    }
    return 0;
}

}  // namespace bez
