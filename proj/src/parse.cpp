#include "orex/parse.hpp"

#include <cctype>
#include <map>
#include <utility>
#include <vector>

namespace orex {

namespace {

constexpr unsigned long kExponentCap = 100000;

enum class Tok { Int, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };

struct Token {
    Tok kind;
    std::string text;
    size_t pos;
};

std::vector<Token> lex(const std::string& input) {
    std::vector<Token> out;
    size_t i = 0;
    while (i < input.size()) {
        const char c = input[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t j = i;
            while (j < input.size() && std::isdigit(static_cast<unsigned char>(input[j]))) ++j;
            out.push_back({Tok::Int, input.substr(i, j - i), i});
            i = j;
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            size_t j = i;
            while (j < input.size() &&
                   (std::isalnum(static_cast<unsigned char>(input[j])))) {
                ++j;
            }
            out.push_back({Tok::Ident, input.substr(i, j - i), i});
            i = j;
            continue;
        }
        switch (c) {
            case '+': out.push_back({Tok::Plus, "+", i}); break;
            case '-': out.push_back({Tok::Minus, "-", i}); break;
            case '*': out.push_back({Tok::Star, "*", i}); break;
            case '/': out.push_back({Tok::Slash, "/", i}); break;
            case '^': out.push_back({Tok::Caret, "^", i}); break;
            case '(': out.push_back({Tok::LParen, "(", i}); break;
            case ')': out.push_back({Tok::RParen, ")", i}); break;
            default:
                throw ParseError(std::string("unexpected character '") + c + "'", i);
        }
        ++i;
    }
    out.push_back({Tok::End, "", input.size()});
    return out;
}

class Parser {
public:
    Parser(const std::string& input, unsigned nvars, bool allow_theta)
        : tokens_(lex(input)), nvars_(nvars), allow_theta_(allow_theta) {
        if (tokens_.front().kind == Tok::End) {
            throw ParseError("empty input", 0);
        }
    }

    MPoly parse_polynomial() {
        const MPoly value = expr();
        expect_end();
        return value;
    }

    // Left normal form coefficients keyed by theta power.
    std::map<unsigned, MPoly> parse_skew_terms() {
        std::map<unsigned, MPoly> coeffs;
        bool negate = accept(Tok::Minus);
        for (;;) {
            auto [coeff, power] = skew_term();
            if (negate) coeff = -coeff;
            auto [it, fresh] = coeffs.emplace(power, coeff);
            if (!fresh) it->second += coeff;
            if (accept(Tok::Plus)) {
                negate = false;
            } else if (accept(Tok::Minus)) {
                negate = true;
            } else {
                break;
            }
        }
        expect_end();
        return coeffs;
    }

private:
    const Token& peek() const { return tokens_[index_]; }
    const Token& advance() { return tokens_[index_++]; }

    bool accept(Tok kind) {
        if (peek().kind != kind) return false;
        ++index_;
        return true;
    }

    void expect_end() const {
        if (peek().kind != Tok::End) {
            throw ParseError("unexpected trailing input", peek().pos);
        }
    }

    [[noreturn]] void fail(const std::string& message) const {
        throw ParseError(message, peek().pos);
    }

    unsigned long integer_value(const Token& token, unsigned long cap,
                                const char* what) const {
        // The token is all digits; reject anything beyond the cap without
        // converting huge literals.
        size_t k = 0;
        while (k < token.text.size() && token.text[k] == '0') ++k;
        const std::string trimmed = token.text.substr(k);
        if (trimmed.size() > 9) throw ParseError(std::string(what) + " too large", token.pos);
        const unsigned long value = trimmed.empty() ? 0 : std::stoul(trimmed);
        if (value > cap) throw ParseError(std::string(what) + " too large", token.pos);
        return value;
    }

    MPoly constant(const Scalar& s) const { return MPoly::constant(nvars_, s); }

    // expr := [-] term ((+|-) term)*
    MPoly expr() {
        bool negate = accept(Tok::Minus);
        MPoly value = term();
        if (negate) value = -value;
        for (;;) {
            if (accept(Tok::Plus)) {
                value += term();
            } else if (accept(Tok::Minus)) {
                value -= term();
            } else {
                return value;
            }
        }
    }

    // term := factor ((*|/) factor)*
    MPoly term() {
        MPoly value = factor();
        for (;;) {
            if (accept(Tok::Star)) {
                value *= factor();
            } else if (peek().kind == Tok::Slash) {
                const Token& slash = advance();
                const MPoly rhs = factor();
                if (!rhs.is_constant()) {
                    throw ParseError("can only divide by a scalar", slash.pos);
                }
                const Scalar s = rhs.constant_value();
                if (s.is_zero()) throw ParseError("division by zero", slash.pos);
                value *= constant(s.inverse());
            } else {
                return value;
            }
        }
    }

    // factor := primary (^ INT)?
    MPoly factor() {
        MPoly base = primary();
        if (!accept(Tok::Caret)) return base;
        const unsigned long e = exponent();
        MPoly value = constant(Scalar(1));
        // Square-and-multiply keeps the step count logarithmic in e.
        unsigned long rest = e;
        while (rest > 0) {
            if (rest & 1) value *= base;
            rest >>= 1;
            if (rest > 0) base *= base;
        }
        return value;
    }

    unsigned long exponent() {
        if (peek().kind != Tok::Int) fail("expected an integer exponent");
        return integer_value(advance(), kExponentCap, "exponent");
    }

    // primary := INT | x | xN | zeta(INT) | (expr)
    MPoly primary() {
        const Token& token = peek();
        switch (token.kind) {
            case Tok::Int: {
                advance();
                return constant(Scalar(Rational(mpq_class(token.text, 10))));
            }
            case Tok::Ident:
                advance();
                return named(token);
            case Tok::LParen: {
                advance();
                const MPoly inner = expr();
                if (!accept(Tok::RParen)) fail("expected ')'");
                return inner;
            }
            default:
                fail("expected a number, variable, or '('");
        }
    }

    MPoly named(const Token& token) {
        const std::string& name = token.text;
        if (name == "t") {
            if (allow_theta_) {
                throw ParseError("t must be the trailing factor of a term", token.pos);
            }
            throw ParseError("t is only allowed in skew polynomial input", token.pos);
        }
        if (name == "zeta") {
            if (!accept(Tok::LParen)) {
                throw ParseError("zeta needs a parenthesized conductor, like zeta(4)",
                                 peek().pos);
            }
            if (peek().kind != Tok::Int) fail("expected an integer conductor");
            const unsigned long n = integer_value(advance(), 10000, "conductor");
            if (n == 0) throw ParseError("conductor must be positive", token.pos);
            if (!accept(Tok::RParen)) fail("expected ')'");
            return constant(Scalar::zeta(static_cast<unsigned>(n)));
        }
        if (name[0] == 'x') {
            unsigned long index = 1;
            if (name.size() > 1) {
                for (const char c : name.substr(1)) {
                    if (!std::isdigit(static_cast<unsigned char>(c))) {
                        throw ParseError("unrecognized name '" + name + "'", token.pos);
                    }
                }
                index = integer_value({Tok::Int, name.substr(1), token.pos + 1},
                                      1000000, "variable index");
            }
            if (index == 0) {
                throw ParseError("variables are numbered from x1", token.pos);
            }
            if (index > nvars_) {
                if (nvars_ == 0) {
                    throw ParseError("expected a scalar, not a variable", token.pos);
                }
                throw ParseError("only " + std::to_string(nvars_) +
                                     " variable(s) are available here",
                                 token.pos);
            }
            return MPoly::variable(nvars_, static_cast<unsigned>(index - 1));
        }
        throw ParseError("unrecognized name '" + name + "'", token.pos);
    }

    // One top-level skew term: a polynomial coefficient followed by optional
    // trailing t factors.
    std::pair<MPoly, unsigned> skew_term() {
        MPoly coeff = constant(Scalar(1));
        unsigned long power = 0;
        bool saw_theta = false;
        bool expect_unit = true;
        for (;;) {
            if (expect_unit) {
                if (peek().kind == Tok::Ident && peek().text == "t") {
                    advance();
                    unsigned long e = 1;
                    if (accept(Tok::Caret)) e = exponent();
                    power += e;
                    if (power > kExponentCap) {
                        throw ParseError("exponent too large", peek().pos);
                    }
                    saw_theta = true;
                } else if (saw_theta) {
                    throw ParseError("t must be the trailing factor of a term",
                                     peek().pos);
                } else {
                    coeff *= factor();
                }
                expect_unit = false;
            }

            if (accept(Tok::Star)) {
                expect_unit = true;
                continue;
            }
            if (peek().kind == Tok::Slash) {
                const Token& slash = advance();
                if (saw_theta) {
                    throw ParseError("cannot divide after t; divide the coefficient instead",
                                     slash.pos);
                }
                const MPoly rhs = factor();
                if (!rhs.is_constant()) {
                    throw ParseError("can only divide by a scalar", slash.pos);
                }
                const Scalar s = rhs.constant_value();
                if (s.is_zero()) throw ParseError("division by zero", slash.pos);
                coeff *= constant(s.inverse());
                continue;
            }
            break;
        }
        return {coeff, static_cast<unsigned>(power)};
    }

    std::vector<Token> tokens_;
    size_t index_ = 0;
    unsigned nvars_;
    bool allow_theta_;
};

Poly to_univariate(const MPoly& p) {
    Poly out;
    for (const auto& [e, c] : p.terms()) out += Poly::monomial(c, e[0]);
    return out;
}

}  // namespace

Scalar parse_scalar(const std::string& text) {
    Parser parser(text, 0, false);
    const MPoly value = parser.parse_polynomial();
    if (value.is_zero()) return Scalar(0);
    return value.constant_value();
}

Poly parse_poly(const std::string& text) {
    Parser parser(text, 1, false);
    return to_univariate(parser.parse_polynomial());
}

MPoly parse_mpoly(const std::string& text, unsigned nvars) {
    Parser parser(text, nvars, false);
    return parser.parse_polynomial();
}

SkewPoly parse_skew(const std::string& text, const DerivationSpec& spec) {
    Parser parser(text, 1, true);
    const auto terms = parser.parse_skew_terms();
    std::vector<Poly> coeffs;
    for (const auto& [power, coeff] : terms) {
        if (coeffs.size() <= power) coeffs.resize(power + 1);
        coeffs[power] = to_univariate(coeff);
    }
    return SkewPoly(spec, std::move(coeffs));
}

}  // namespace orex
