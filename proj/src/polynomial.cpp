#include "bezkit/polynomial.hpp"

#include <stdexcept>

namespace bez {

void check_same_ring(const Polynomial& a, const Polynomial& b) {
    if (!a.ring() || !b.ring() || !(*a.ring() == *b.ring()))
        throw RingMismatch("operands built over different rings");
}

Polynomial Polynomial::constant(RingPtr ring, const Rational& c) {
    Polynomial p(ring);
    if (c != 0) p.terms_.emplace(Monomial(ring->nvars(), 0), c);
    return p;
}

Polynomial Polynomial::variable(RingPtr ring, int idx) {
    if (idx < 0 || idx >= ring->nvars())
        throw std::out_of_range("variable index out of range");
    Monomial m(ring->nvars(), 0);
    m[idx] = 1;
    Polynomial p(ring);
    p.terms_.emplace(std::move(m), Rational(1));
    return p;
}

Polynomial Polynomial::term(RingPtr ring, Monomial m, const Rational& c) {
    if (static_cast<int>(m.size()) != ring->nvars())
        throw std::invalid_argument("monomial length does not match ring");
    Polynomial p(ring);
    if (c != 0) p.terms_.emplace(std::move(m), c);
    return p;
}

bool Polynomial::is_constant() const {
    return terms_.empty() ||
           (terms_.size() == 1 && total_degree(terms_.begin()->first) == 0);
}

Rational Polynomial::constant_value() const {
    if (terms_.empty()) return Rational(0);
    if (!is_constant()) throw std::logic_error("polynomial is not constant");
    return terms_.begin()->second;
}

unsigned Polynomial::degree() const {
    unsigned d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, total_degree(m));
    return d;
}

Rational Polynomial::coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

const Monomial& Polynomial::leading_monomial(const MonomialOrder& order) const {
    if (terms_.empty()) throw std::logic_error("zero polynomial has no leading monomial");
    if (order.kind == MonomialOrder::Kind::degrevlex) return terms_.begin()->first;
    const Monomial* best = &terms_.begin()->first;
    for (const auto& [m, c] : terms_)
        if (order.less(*best, m)) best = &m;
    return *best;
}

Rational Polynomial::leading_coeff(const MonomialOrder& order) const {
    return coeff(leading_monomial(order));
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Polynomial Polynomial::operator-() const {
    Polynomial r(ring_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
    check_same_ring(*this, other);
    for (const auto& [m, c] : other.terms_) add_term(m, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
    check_same_ring(*this, other);
    for (const auto& [m, c] : other.terms_) add_term(m, -c);
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    check_same_ring(a, b);
    Polynomial r(a.ring());
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_)
            r.add_term(mono_mul(ma, mb), ca * cb);
    return r;
}

Polynomial operator*(const Rational& c, const Polynomial& p) {
    Polynomial r(p.ring());
    if (c == 0) return r;
    for (const auto& [m, pc] : p.terms_) r.terms_.emplace(m, c * pc);
    return r;
}

bool Polynomial::operator==(const Polynomial& other) const {
    return terms_ == other.terms_;
}

Polynomial Polynomial::pow(unsigned e) const {
    Polynomial r = constant(ring_, Rational(1));
    Polynomial base = *this;
    while (e > 0) {
        if (e & 1u) r = r * base;
        e >>= 1u;
        if (e > 0) base = base * base;
    }
    return r;
}

Polynomial Polynomial::derivative(int var) const {
    if (var < 0 || var >= ring_->nvars())
        throw std::out_of_range("variable index out of range");
    Polynomial r(ring_);
    for (const auto& [m, c] : terms_) {
        if (m[var] == 0) continue;
        Monomial d = m;
        d[var] -= 1;
        r.add_term(d, c * Rational(m[var]));
    }
    return r;
}

Polynomial Polynomial::substitute(const std::map<int, Polynomial>& images) const {
    for (const auto& [v, img] : images) {
        if (v < 0 || v >= ring_->nvars())
            throw std::out_of_range("substitution variable index out of range");
        if (!img.ring() || !(*img.ring() == *ring_))
            throw RingMismatch("substitution image in a different ring");
    }
    // Cache powers of each image as they are needed.
    std::map<int, std::vector<Polynomial>> powers;
    auto image_pow = [&](int v, unsigned e) -> const Polynomial& {
        auto& cache = powers[v];
        if (cache.empty()) cache.push_back(Polynomial::constant(ring_, Rational(1)));
        while (cache.size() <= e) cache.push_back(cache.back() * images.at(v));
        return cache[e];
    };
    Polynomial result(ring_);
    for (const auto& [m, c] : terms_) {
        Monomial fixed(m.size(), 0);
        Polynomial contrib = Polynomial::constant(ring_, c);
        for (size_t v = 0; v < m.size(); ++v) {
            if (m[v] == 0) continue;
            if (images.count(static_cast<int>(v))) {
                contrib = contrib * image_pow(static_cast<int>(v), m[v]);
            } else {
                fixed[v] = m[v];
            }
        }
        contrib = contrib * Polynomial::term(ring_, fixed, Rational(1));
        result += contrib;
    }
    return result;
}

Rational Polynomial::evaluate(const std::vector<Rational>& point) const {
    if (static_cast<int>(point.size()) != ring_->nvars())
        throw std::invalid_argument("evaluation point has wrong length");
    Rational sum(0);
    for (const auto& [m, c] : terms_) {
        Rational t = c;
        for (size_t v = 0; v < m.size(); ++v) {
            for (uint32_t e = 0; e < m[v]; ++e) t *= point[v];
        }
        sum += t;
    }
    return sum;
}

Polynomial exact_quotient(const Polynomial& num, const Polynomial& den) {
    check_same_ring(num, den);
    if (den.is_zero()) throw std::invalid_argument("division by the zero polynomial");
    const MonomialOrder order = MonomialOrder::degrevlex();
    const Monomial& dlm = den.leading_monomial(order);
    const Rational dlc = den.coeff(dlm);
    Polynomial q(num.ring());
    Polynomial r = num;
    while (!r.is_zero()) {
        const Monomial& rlm = r.leading_monomial(order);
        if (!mono_divides(dlm, rlm))
            throw InexactDivision("no exact polynomial quotient exists");
        Polynomial t =
            Polynomial::term(num.ring(), mono_div(rlm, dlm), r.coeff(rlm) / dlc);
        q += t;
        r -= t * den;
    }
    return q;
}

}  // namespace bez
