#pragma once

#include <map>
#include <vector>

#include "bezkit/errors.hpp"
#include "bezkit/rational.hpp"
#include "bezkit/ring.hpp"

namespace bez {

// Sparse multivariate polynomial over Q with exact coefficients.  Terms are
// stored with the leading degrevlex monomial first; no zero coefficient is
// ever kept.  Immutable in practice: all operations return fresh values.
class Polynomial {
public:
    using TermMap = std::map<Monomial, Rational, DegrevlexGreater>;

    Polynomial() = default;  // zero polynomial with no ring; placeholder only
    explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

    static Polynomial zero(RingPtr ring) { return Polynomial(std::move(ring)); }
    static Polynomial constant(RingPtr ring, const Rational& c);
    static Polynomial variable(RingPtr ring, int idx);
    static Polynomial term(RingPtr ring, Monomial m, const Rational& c);

    const RingPtr& ring() const { return ring_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    // True iff every stored monomial has total degree 0 (so also for 0).
    bool is_constant() const;
    Rational constant_value() const;  // requires is_constant()
    unsigned degree() const;          // total degree; 0 for the zero polynomial
    size_t term_count() const { return terms_.size(); }

    Rational coeff(const Monomial& m) const;
    const Monomial& leading_monomial(const MonomialOrder& order) const;
    Rational leading_coeff(const MonomialOrder& order) const;

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& other);
    Polynomial& operator-=(const Polynomial& other);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Rational& c, const Polynomial& p);

    bool operator==(const Polynomial& other) const;
    bool operator!=(const Polynomial& other) const { return !(*this == other); }

    Polynomial pow(unsigned e) const;
    Polynomial derivative(int var) const;
    // Simultaneous substitution; variables absent from the map are fixed.
    Polynomial substitute(const std::map<int, Polynomial>& images) const;
    Rational evaluate(const std::vector<Rational>& point) const;

    // Accumulates c * m, erasing the entry if the sum cancels.
    void add_term(const Monomial& m, const Rational& c);

private:
    RingPtr ring_;
    TermMap terms_;
};

// Throws RingMismatch unless both rings agree (by value).
void check_same_ring(const Polynomial& a, const Polynomial& b);

// Returns r with r * den = num exactly; throws InexactDivision otherwise.
Polynomial exact_quotient(const Polynomial& num, const Polynomial& den);

}  // namespace bez
