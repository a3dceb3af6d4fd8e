#include "bezkit/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace bez {

Rational parse_rational(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty rational literal");
    size_t i = (text[0] == '-') ? 1 : 0;
    if (i == text.size()) throw std::invalid_argument("bad rational literal: " + text);
    bool seen_slash = false;
    for (size_t j = i; j < text.size(); ++j) {
        if (text[j] == '/') {
            if (seen_slash || j == i || j + 1 == text.size())
                throw std::invalid_argument("bad rational literal: " + text);
            seen_slash = true;
        } else if (!std::isdigit(static_cast<unsigned char>(text[j]))) {
            throw std::invalid_argument("bad rational literal: " + text);
        }
    }
    mpq_t tmp;
    mpq_init(tmp);
    if (mpq_set_str(tmp, text.c_str(), 10) != 0) {
        mpq_clear(tmp);
        throw std::invalid_argument("bad rational literal: " + text);
    }
    if (mpz_sgn(mpq_denref(tmp)) == 0) {
        mpq_clear(tmp);
        throw std::invalid_argument("zero denominator: " + text);
    }
    mpq_canonicalize(tmp);
    Rational r(tmp);
    mpq_clear(tmp);
    return r;
}

std::string render_rational(const Rational& r) {
    return r.get_str();
}

}  // namespace bez
