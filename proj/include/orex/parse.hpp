#pragma once

#include "orex/mpoly.hpp"
#include "orex/skew.hpp"

#include <stdexcept>
#include <string>

namespace orex {

// Error raised on malformed input, carrying the byte offset of the offending
// token within the input string.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& message, size_t position)
        : std::runtime_error(message), position_(position) {}
    size_t position() const { return position_; }

private:
    size_t position_;
};

// Shared grammar for all four entry points, whitespace insensitive:
//
//   expr    := [-] term ((+|-) term)*
//   term    := factor ((*|/) factor)*
//   factor  := primary (^ INT)?
//   primary := INT | x | xN | zeta(INT) | t | (expr)
//
// Division is only by nonzero scalars. Exponents are capped at 100000.
// `zeta(n)` is a primitive n-th root of unity. `t` stands for the skew
// generator theta; it is accepted only by parse_skew, never inside
// parentheses, and only as the trailing factors of a term (so every term is
// `coefficient * t^j`). Variables are `x` in univariate input and `x1..xN`
// in multivariate input, where `x` is an alias for `x1`.

Scalar parse_scalar(const std::string& text);
Poly parse_poly(const std::string& text);
MPoly parse_mpoly(const std::string& text, unsigned nvars);
SkewPoly parse_skew(const std::string& text, const DerivationSpec& spec);

}  // namespace orex
