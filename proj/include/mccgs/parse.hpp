#pragma once

#include "mccgs/polynomial.hpp"

#include <cctype>

namespace mccgs {

namespace detail {

struct Lexer {
    const std::string& text;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }

    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }

    bool accept(char c) {
        if (peek() == c) {
            ++pos;
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (!accept(c))
            throw parse_error(std::string("expected '") + c + "'", pos);
    }

    std::string ident() {
        skip_ws();
        std::size_t start = pos;
        while (pos < text.size() &&
               (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
            ++pos;
        if (pos == start) throw parse_error("expected identifier", pos);
        return text.substr(start, pos - start);
    }

    Int integer() {
        skip_ws();
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start) throw parse_error("expected integer literal", pos);
        return Int(text.substr(start, pos - start));
    }
};

struct PolyParser {
    Lexer lex;
    const Ring& ring;

    Polynomial expr() {
        bool neg = false;
        while (true) {
            if (lex.accept('-')) {
                neg = !neg;
            } else if (lex.accept('+')) {
            } else {
                break;
            }
        }
        Polynomial r = term();
        if (neg) r = -r;
        while (true) {
            char c = lex.peek();
            if (c == '+') {
                ++lex.pos;
                r = r + term();
            } else if (c == '-') {
                ++lex.pos;
                r = r - term();
            } else {
                break;
            }
        }
        return r;
    }

    Polynomial term() {
        Polynomial r = factor();
        while (lex.accept('*')) r = r * factor();
        return r;
    }

    Polynomial factor() {
        Polynomial b = base();
        while (lex.accept('^')) {
            Int n = lex.integer();
            if (n > 64) throw parse_error("exponent too large", lex.pos);
            b = pow(b, static_cast<int>(n));
        }
        return b;
    }

    Polynomial base() {
        char c = lex.peek();
        if (c == '(') {
            ++lex.pos;
            Polynomial r = expr();
            lex.expect(')');
            return r;
        }
        if (c == '-') {
            ++lex.pos;
            return -factor();
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            Int n = lex.integer();
            if (lex.peek() == '/') {
                ++lex.pos;
                std::size_t at = lex.pos;
                Int d = lex.integer();
                if (d == 0) throw parse_error("zero denominator", at);
                return Polynomial::constant(Rat(n, d), ring.width());
            }
            return Polynomial::constant(Rat(n), ring.width());
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t at = lex.pos;
            std::string nm = lex.ident();
            auto idx = ring.index_of(nm);
            if (!idx) throw parse_error("unknown identifier '" + nm + "'", at);
            return Polynomial::indeterminate(*idx, ring.width());
        }
        throw parse_error("unexpected character", lex.pos);
    }
};

} // namespace detail

/// Parse one polynomial expression over the given ring. Grammar: identifiers,
/// integer and p/q rational literals, + - * ^ ( ); no implicit juxtaposition.
inline Polynomial parse_poly(const std::string& text, const Ring& ring) {
    detail::PolyParser p{detail::Lexer{text}, ring};
    Polynomial r = p.expr();
    p.lex.skip_ws();
    if (p.lex.pos != text.size())
        throw parse_error("trailing input", p.lex.pos);
    return r;
}

} // namespace mccgs
