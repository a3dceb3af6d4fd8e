#pragma once

#include <string>

#include "bezkit/bezoutian.hpp"
#include "bezkit/matrix.hpp"
#include "bezkit/polynomial.hpp"

namespace bez {

// Grammar: poly := ['-'] term (('+'|'-') term)*; term := factor ('*' factor)*;
// factor := base ('^' uint)?; base := rational | variable | '(' poly ')';
// rational := int ['/' uint].  No implicit multiplication; '#' starts a
// comment; whitespace is insignificant.
Polynomial parse_polynomial(const std::string& text, const RingPtr& ring);

// SystemFile: first line `vars x1 x2 ... xn`, then `fi = <poly>` for
// i = 1..n in order.  Bodies may use only the declared x-variables; the
// y-block is synthesized internally.
PolySystem parse_system_text(const std::string& text);
PolySystem parse_system_file(const std::string& path);

// MatrixFile: rows of whitespace-separated rationals; must be square.
RationalMatrix parse_matrix_text(const std::string& text);
RationalMatrix parse_matrix_file(const std::string& path);

// Comma-separated rationals, e.g. "1,-2,3/4"; must have n coordinates.
RationalPoint parse_point(const std::string& text, int n);

// Canonical output: terms in descending degrevlex order, '*' between
// factors, '^' powers, coefficients as "a/b" only when b != 1.
// Round-trips through parse_polynomial.
std::string render_polynomial(const Polynomial& p);

std::string render_monomial(const Monomial& m, const RingContext& ring);
std::string render_point(const RationalPoint& q);
std::string render_system(const PolySystem& f);  // SystemFile layout

}  // namespace bez
