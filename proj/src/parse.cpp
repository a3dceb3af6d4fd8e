#include "bezkit/parse.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace bez {

namespace {

enum class Tok { Number, Ident, Plus, Minus, Star, Caret, Slash, LParen, RParen, End };

struct Token {
    Tok kind;
    std::string text;
    int line;
    int col;
};

const char* tok_name(Tok t) {
    switch (t) {
        case Tok::Number: return "number";
        case Tok::Ident: return "identifier";
        case Tok::Plus: return "'+'";
        case Tok::Minus: return "'-'";
        case Tok::Star: return "'*'";
        case Tok::Caret: return "'^'";
        case Tok::Slash: return "'/'";
        case Tok::LParen: return "'('";
        case Tok::RParen: return "')'";
        case Tok::End: return "end of input";
    }
    return "?";
}

std::vector<Token> tokenize(const std::string& text, int start_line) {
    std::vector<Token> out;
    int line = start_line, col = 1;
    size_t i = 0;
    while (i < text.size()) {
        char c = text[i];
        if (c == '\n') {
            ++line;
            col = 1;
            ++i;
            continue;
        }
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++col;
            ++i;
            continue;
        }
        if (c == '#') {
            while (i < text.size() && text[i] != '\n') ++i;
            continue;
        }
        const int tcol = col;
        auto single = [&](Tok k) {
            out.push_back({k, std::string(1, c), line, tcol});
            ++i;
            ++col;
        };
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t j = i;
            while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j])))
                ++j;
            out.push_back({Tok::Number, text.substr(i, j - i), line, tcol});
            col += static_cast<int>(j - i);
            i = j;
        } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            size_t j = i;
            while (j < text.size() &&
                   (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_'))
                ++j;
            out.push_back({Tok::Ident, text.substr(i, j - i), line, tcol});
            col += static_cast<int>(j - i);
            i = j;
        } else if (c == '+') {
            single(Tok::Plus);
        } else if (c == '-') {
            single(Tok::Minus);
        } else if (c == '*') {
            single(Tok::Star);
        } else if (c == '^') {
            single(Tok::Caret);
        } else if (c == '/') {
            single(Tok::Slash);
        } else if (c == '(') {
            single(Tok::LParen);
        } else if (c == ')') {
            single(Tok::RParen);
        } else {
            throw ParseError(std::string("unexpected character '") + c + "'", line,
                             tcol);
        }
    }
    out.push_back({Tok::End, "", line, col});
    return out;
}

class PolyParser {
public:
    PolyParser(std::vector<Token> toks, RingPtr ring, bool x_only)
        : toks_(std::move(toks)), ring_(std::move(ring)), x_only_(x_only) {}

    Polynomial parse() {
        Polynomial p = parse_poly();
        expect(Tok::End, "'+', '-', '*', '^' or end of input");
        return p;
    }

private:
    std::vector<Token> toks_;
    size_t pos_ = 0;
    RingPtr ring_;
    bool x_only_;

    const Token& peek() const { return toks_[pos_]; }
    Token next() { return toks_[pos_++]; }

    [[noreturn]] void fail(const std::string& expected) {
        const Token& t = peek();
        throw ParseError("expected " + expected + ", found " + tok_name(t.kind),
                         t.line, t.col);
    }

    Token expect(Tok kind, const std::string& expected) {
        if (peek().kind != kind) fail(expected);
        return next();
    }

    Polynomial parse_poly() {
        bool negate = false;
        if (peek().kind == Tok::Minus) {
            next();
            negate = true;
        }
        Polynomial acc = parse_term();
        if (negate) acc = -acc;
        while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
            bool minus = next().kind == Tok::Minus;
            Polynomial t = parse_term();
            if (minus)
                acc -= t;
            else
                acc += t;
        }
        return acc;
    }

    Polynomial parse_term() {
        Polynomial acc = parse_factor();
        while (peek().kind == Tok::Star) {
            next();
            acc = acc * parse_factor();
        }
        return acc;
    }

    Polynomial parse_factor() {
        Polynomial base = parse_base();
        if (peek().kind == Tok::Caret) {
            next();
            Token e = expect(Tok::Number, "a non-negative integer exponent");
            if (e.text.size() > 5)
                throw ParseError("exponent too large", e.line, e.col);
            base = base.pow(static_cast<unsigned>(std::stoul(e.text)));
        }
        return base;
    }

    Polynomial parse_base() {
        const Token& t = peek();
        switch (t.kind) {
            case Tok::Number: {
                Token num = next();
                std::string lit = num.text;
                if (peek().kind == Tok::Slash) {
                    next();
                    Token den = expect(Tok::Number, "a denominator");
                    lit += "/" + den.text;
                }
                return Polynomial::constant(ring_, parse_rational(lit));
            }
            case Tok::Ident: {
                Token id = next();
                int idx = ring_->index_of(id.text);
                if (idx < 0 || (x_only_ && ring_->is_y(idx)))
                    throw UnknownVariable(id.text, id.line, id.col);
                return Polynomial::variable(ring_, idx);
            }
            case Tok::LParen: {
                next();
                Polynomial p = parse_poly();
                expect(Tok::RParen, "')'");
                return p;
            }
            default:
                fail("a rational, a variable, or '('");
        }
    }
};

Polynomial parse_poly_impl(const std::string& text, const RingPtr& ring, bool x_only,
                           int start_line) {
    PolyParser parser(tokenize(text, start_line), ring, x_only);
    return parser.parse();
}

// Strip a trailing comment and surrounding whitespace.
std::string clean_line(const std::string& raw) {
    std::string s = raw;
    if (auto pos = s.find('#'); pos != std::string::npos) s.erase(pos);
    size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    size_t e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

Polynomial parse_polynomial(const std::string& text, const RingPtr& ring) {
    return parse_poly_impl(text, ring, /*x_only=*/false, 1);
}

PolySystem parse_system_text(const std::string& text) {
    std::istringstream in(text);
    std::string raw;
    int lineno = 0;
    std::vector<std::pair<int, std::string>> lines;
    while (std::getline(in, raw)) {
        ++lineno;
        std::string s = clean_line(raw);
        if (!s.empty()) lines.emplace_back(lineno, s);
    }
    if (lines.empty()) throw ParseError("expected a 'vars' declaration", 1, 1);

    // vars line
    std::istringstream head(lines[0].second);
    std::string kw;
    head >> kw;
    if (kw != "vars")
        throw ParseError("expected 'vars' declaration", lines[0].first, 1);
    std::vector<std::string> names;
    std::string name;
    while (head >> name) {
        for (char c : name) {
            if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_'))
                throw ParseError("bad variable name '" + name + "'",
                                 lines[0].first, 1);
        }
        if (std::isdigit(static_cast<unsigned char>(name[0])))
            throw ParseError("bad variable name '" + name + "'", lines[0].first, 1);
        names.push_back(name);
    }
    if (names.empty())
        throw ParseError("'vars' declares no variables", lines[0].first, 1);

    RingPtr ring = RingContext::with_x_names(names);
    const int n = static_cast<int>(names.size());

    if (static_cast<int>(lines.size()) - 1 != n)
        throw ArityMismatch("expected " + std::to_string(n) + " polynomials, found " +
                            std::to_string(lines.size() - 1));

    std::vector<Polynomial> polys;
    for (int i = 1; i <= n; ++i) {
        const auto& [ln, body] = lines[i];
        const std::string label = "f" + std::to_string(i);
        size_t eq = body.find('=');
        if (eq == std::string::npos)
            throw ParseError("expected '" + label + " = <poly>'", ln, 1);
        std::string lhs = clean_line(body.substr(0, eq));
        if (lhs != label)
            throw ParseError("expected label '" + label + "', found '" + lhs + "'",
                             ln, 1);
        polys.push_back(
            parse_poly_impl(body.substr(eq + 1), ring, /*x_only=*/true, ln));
    }
    return PolySystem(ring, std::move(polys));
}

PolySystem parse_system_file(const std::string& path) {
    return parse_system_text(read_file(path));
}

RationalMatrix parse_matrix_text(const std::string& text) {
    std::istringstream in(text);
    std::string raw;
    int lineno = 0;
    RationalMatrix rows;
    while (std::getline(in, raw)) {
        ++lineno;
        std::string s = clean_line(raw);
        if (s.empty()) continue;
        std::istringstream row(s);
        std::string lit;
        std::vector<Rational> entries;
        while (row >> lit) {
            try {
                entries.push_back(parse_rational(lit));
            } catch (const std::invalid_argument&) {
                throw ParseError("bad rational literal '" + lit + "'", lineno, 1);
            }
        }
        rows.push_back(std::move(entries));
    }
    if (rows.empty()) throw ParseError("empty matrix", 1, 1);
    for (size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != rows.size())
            throw ParseError("matrix must be square", static_cast<int>(i + 1), 1);
    }
    return rows;
}

RationalMatrix parse_matrix_file(const std::string& path) {
    return parse_matrix_text(read_file(path));
}

RationalPoint parse_point(const std::string& text, int n) {
    RationalPoint q;
    std::string item;
    std::istringstream in(text);
    while (std::getline(in, item, ',')) {
        try {
            q.push_back(parse_rational(clean_line(item)));
        } catch (const std::invalid_argument&) {
            throw ParseError("bad rational coordinate '" + item + "'", 1, 1);
        }
    }
    if (static_cast<int>(q.size()) != n)
        throw ArityMismatch("point has " + std::to_string(q.size()) +
                            " coordinates, expected " + std::to_string(n));
    return q;
}

std::string render_monomial(const Monomial& m, const RingContext& ring) {
    std::string out;
    for (size_t v = 0; v < m.size(); ++v) {
        if (m[v] == 0) continue;
        if (!out.empty()) out += "*";
        out += ring.names[v];
        if (m[v] > 1) out += "^" + std::to_string(m[v]);
    }
    return out.empty() ? "1" : out;
}

std::string render_polynomial(const Polynomial& p) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : p.terms()) {
        const bool negative = c < 0;
        Rational a = negative ? Rational(-c) : c;
        if (first) {
            if (negative) out += "-";
            first = false;
        } else {
            out += negative ? " - " : " + ";
        }
        const bool is_one_mono = total_degree(m) == 0;
        if (a != 1 || is_one_mono) out += render_rational(a);
        if (!is_one_mono) {
            if (a != 1) out += "*";
            out += render_monomial(m, *p.ring());
        }
    }
    return out;
}

std::string render_point(const RationalPoint& q) {
    std::string out;
    for (size_t i = 0; i < q.size(); ++i) {
        if (i) out += ",";
        out += render_rational(q[i]);
    }
    return out;
}

std::string render_system(const PolySystem& f) {
    std::string out = "vars";
    for (int i = 0; i < f.n(); ++i) out += " " + f.ring->names[i];
    out += "\n";
    for (size_t i = 0; i < f.polys.size(); ++i)
        out += "f" + std::to_string(i + 1) + " = " + render_polynomial(f.polys[i]) +
               "\n";
    return out;
}

}  // namespace bez
