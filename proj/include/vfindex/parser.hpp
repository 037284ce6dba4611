#pragma once

#include <cctype>
#include <string>
#include <vector>

#include "errors.hpp"
#include "polynomial.hpp"

namespace vfindex {

/// Recursive-descent parser for the polynomial wire grammar
///
///   expr   := ['+'|'-'] term (('+'|'-') term)*
///   term   := factor ('*' factor)*
///   factor := rational | var | var '^' nat | '(' expr ')'
///
/// Rationals are integer or p/q literals. Variable names must be declared
/// in the ring. Errors carry the byte offset of the offending token.
class PolynomialParser {
public:
    explicit PolynomialParser(const PolyRing& ring, const std::string& text)
        : ring_(ring), text_(text) {}

    Polynomial parse() {
        Polynomial p = parse_expr();
        skip_ws();
        if (pos_ != text_.size())
            throw ParseError("unexpected trailing input", pos_);
        return p;
    }

private:
    Polynomial parse_expr() {
        skip_ws();
        bool negate = false;
        if (peek() == '+' || peek() == '-') negate = (take() == '-');
        Polynomial acc = parse_term();
        if (negate) acc = -acc;
        for (;;) {
            skip_ws();
            const char c = peek();
            if (c != '+' && c != '-') break;
            take();
            Polynomial t = parse_term();
            acc = (c == '+') ? acc + t : acc - t;
        }
        return acc;
    }

    Polynomial parse_term() {
        Polynomial acc = parse_factor();
        for (;;) {
            skip_ws();
            if (peek() != '*') break;
            take();
            acc = acc * parse_factor();
        }
        return acc;
    }

    Polynomial parse_factor() {
        skip_ws();
        const char c = peek();
        if (c == '(') {
            take();
            Polynomial inner = parse_expr();
            skip_ws();
            if (peek() != ')') throw ParseError("expected ')'", pos_);
            take();
            return maybe_power(inner);
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return parse_rational();
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return parse_variable();
        throw ParseError(c == '\0' ? "unexpected end of input"
                                   : std::string("unexpected character '") + c + "'",
                         pos_);
    }

    Polynomial parse_rational() {
        const std::size_t start = pos_;
        std::string num = take_digits();
        if (num.empty()) throw ParseError("expected a number", pos_);
        skip_ws();
        if (peek() == '/') {
            // Only treat '/' as a fraction bar when digits follow; the
            // grammar has no other use for '/'.
            take();
            skip_ws();
            std::string den = take_digits();
            if (den.empty()) throw ParseError("expected denominator digits", pos_);
            if (rat_from_string(den) == 0) throw ParseError("zero denominator", start);
            return Polynomial::constant(ring_, rat_from_string(num + "/" + den, start));
        }
        return Polynomial::constant(ring_, rat_from_string(num, start));
    }

    Polynomial parse_variable() {
        const std::size_t start = pos_;
        std::string name;
        while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')
            name += take();
        const int idx = ring_.var_index(name);
        if (idx < 0) throw ParseError("undeclared variable '" + name + "'", start);
        return maybe_power(Polynomial::variable(ring_, static_cast<std::size_t>(idx)));
    }

    Polynomial maybe_power(const Polynomial& base) {
        skip_ws();
        if (peek() != '^') return base;
        take();
        skip_ws();
        if (peek() == '-') throw ParseError("negative exponent", pos_);
        const std::size_t start = pos_;
        std::string digits = take_digits();
        if (digits.empty()) throw ParseError("expected exponent digits", pos_);
        long e = 0;
        for (char d : digits) {
            e = e * 10 + (d - '0');
            if (e > 100000) throw ParseError("exponent too large", start);
        }
        Polynomial acc = Polynomial::constant(ring_, Rat(1));
        for (long i = 0; i < e; ++i) acc = acc * base;
        return acc;
    }

    std::string take_digits() {
        std::string s;
        while (std::isdigit(static_cast<unsigned char>(peek()))) s += take();
        return s;
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
    char take() { return text_[pos_++]; }

    PolyRing ring_;
    std::string text_;
    std::size_t pos_ = 0;
};

/// Parses `text` over the given variables (default local order).
inline Polynomial parse_polynomial(const std::string& text, const PolyRing& ring) {
    return PolynomialParser(ring, text).parse();
}

inline Polynomial parse_polynomial(const std::string& text, std::vector<std::string> variables,
                                   MonomialOrder order = MonomialOrder::negdegrevlex()) {
    return parse_polynomial(text, PolyRing(std::move(variables), std::move(order)));
}

} // namespace vfindex
