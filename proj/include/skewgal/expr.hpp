#pragma once

// Surface syntax for H(t) elements. Atoms are basis symbols (e1..ed, with
// 1, i, j, k as aliases in dimension 4), rational literals like 3 or 3/2,
// and the central variable t. Operators: + - * and ^ with integer exponents
// (including ^-1); parentheses; whitespace insignificant. The printer emits
// strings this grammar parses back to identical coordinates.

#include <string>
#include <vector>

#include "skewgal/skewfrac.hpp"

namespace skewgal {

namespace expr_detail {

struct Token {
    enum class Kind { number, ident, plus, minus, star, caret, lparen, rparen, end } kind;
    std::string text;
    std::size_t pos = 0;
};

inline std::vector<Token> tokenize(const std::string& src) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < src.size()) {
        char c = src[i];
        if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
            ++i;
            continue;
        }
        auto single = [&](Token::Kind k) {
            out.push_back({k, std::string(1, c), i});
            ++i;
        };
        if (c == '+') single(Token::Kind::plus);
        else if (c == '-') single(Token::Kind::minus);
        else if (c == '*') single(Token::Kind::star);
        else if (c == '^') single(Token::Kind::caret);
        else if (c == '(') single(Token::Kind::lparen);
        else if (c == ')') single(Token::Kind::rparen);
        else if (c >= '0' && c <= '9') {
            std::size_t start = i;
            while (i < src.size() && src[i] >= '0' && src[i] <= '9') ++i;
            if (i < src.size() && src[i] == '/' && i + 1 < src.size() && src[i + 1] >= '0' && src[i + 1] <= '9') {
                ++i;
                while (i < src.size() && src[i] >= '0' && src[i] <= '9') ++i;
            }
            out.push_back({Token::Kind::number, src.substr(start, i - start), start});
        } else if ((c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z')) {
            std::size_t start = i;
            while (i < src.size() &&
                   ((src[i] >= 'a' && src[i] <= 'z') || (src[i] >= 'A' && src[i] <= 'Z') ||
                    (src[i] >= '0' && src[i] <= '9')))
                ++i;
            out.push_back({Token::Kind::ident, src.substr(start, i - start), start});
        } else {
            throw ParseError(i, "unexpected character '" + std::string(1, c) + "'", "token");
        }
    }
    out.push_back({Token::Kind::end, "", src.size()});
    return out;
}

} // namespace expr_detail

template <class F>
class ExpressionParser {
public:
    explicit ExpressionParser(const SkewField<F>& ctx) : ctx_(&ctx) {}

    SkewRatElem<F> parse(const std::string& src) const {
        auto toks = expr_detail::tokenize(src);
        std::size_t pos = 0;
        SkewRatElem<F> value = parse_expr(toks, pos);
        if (toks[pos].kind != expr_detail::Token::Kind::end)
            throw ParseError(toks[pos].pos, "trailing input", "end of expression");
        return value;
    }

private:
    using Token = expr_detail::Token;
    const SkewField<F>* ctx_;

    SkewRatElem<F> parse_expr(const std::vector<Token>& t, std::size_t& p) const {
        SkewRatElem<F> acc = parse_term(t, p);
        while (t[p].kind == Token::Kind::plus || t[p].kind == Token::Kind::minus) {
            bool minus = t[p].kind == Token::Kind::minus;
            ++p;
            SkewRatElem<F> rhs = parse_term(t, p);
            acc = minus ? acc - rhs : acc + rhs;
        }
        return acc;
    }

    SkewRatElem<F> parse_term(const std::vector<Token>& t, std::size_t& p) const {
        SkewRatElem<F> acc = parse_unary(t, p);
        while (t[p].kind == Token::Kind::star) {
            ++p;
            acc = acc * parse_unary(t, p);
        }
        return acc;
    }

    SkewRatElem<F> parse_unary(const std::vector<Token>& t, std::size_t& p) const {
        if (t[p].kind == Token::Kind::minus) {
            ++p;
            return -parse_unary(t, p);
        }
        return parse_power(t, p);
    }

    SkewRatElem<F> parse_power(const std::vector<Token>& t, std::size_t& p) const {
        SkewRatElem<F> base = parse_atom(t, p);
        while (t[p].kind == Token::Kind::caret) {
            std::size_t caret_pos = t[p].pos;
            ++p;
            long sign = 1;
            if (t[p].kind == Token::Kind::minus) {
                sign = -1;
                ++p;
            }
            if (t[p].kind != Token::Kind::number || t[p].text.find('/') != std::string::npos)
                throw ParseError(caret_pos, "exponent must be an integer", "integer");
            long e = std::stol(t[p].text);
            ++p;
            base = power(base, sign * e);
        }
        return base;
    }

    SkewRatElem<F> parse_atom(const std::vector<Token>& t, std::size_t& p) const {
        const Token& tok = t[p];
        switch (tok.kind) {
            case Token::Kind::number: {
                ++p;
                F c = rational_literal(tok);
                auto one = SkewRatElem<F>::one(ctx_);
                SkewRatElem<F> r = SkewRatElem<F>::zero(ctx_);
                r.coords = scale_vec(one.coords, RatFunc<F>(c));
                return r;
            }
            case Token::Kind::ident: {
                ++p;
                return symbol(tok);
            }
            case Token::Kind::lparen: {
                ++p;
                SkewRatElem<F> inner = parse_expr(t, p);
                if (t[p].kind != Token::Kind::rparen)
                    throw ParseError(t[p].pos, "unbalanced parenthesis", ")");
                ++p;
                return inner;
            }
            default:
                throw ParseError(tok.pos, "expected a value", "number, symbol, '('");
        }
    }

    F rational_literal(const Token& tok) const {
        auto slash = tok.text.find('/');
        if (slash == std::string::npos) return from_int_like(F{}, std::stol(tok.text));
        F num = from_int_like(F{}, std::stol(tok.text.substr(0, slash)));
        F den = from_int_like(F{}, std::stol(tok.text.substr(slash + 1)));
        if (den.is_zero()) throw ParseError(tok.pos, "zero denominator in literal", "nonzero denominator");
        return num / den;
    }

    SkewRatElem<F> symbol(const Token& tok) const {
        int dim = ctx_->H->dim;
        auto basis_elem = [&](int idx) {
            SkewRatElem<F> r = SkewRatElem<F>::zero(ctx_);
            r.coords[static_cast<std::size_t>(idx)] = RatFunc<F>(one_like(F{}));
            return r;
        };
        if (tok.text == "t") {
            SkewRatElem<F> r = SkewRatElem<F>::one(ctx_);
            r.coords = scale_vec(r.coords, RatFunc<F>::t());
            return r;
        }
        if (tok.text.size() >= 2 && tok.text[0] == 'e') {
            bool digits = true;
            for (std::size_t k = 1; k < tok.text.size(); ++k) digits = digits && tok.text[k] >= '0' && tok.text[k] <= '9';
            if (digits) {
                long idx = std::stol(tok.text.substr(1));
                if (idx < 1 || idx > dim)
                    throw ParseError(tok.pos, "basis symbol " + tok.text + " out of range 1.." + std::to_string(dim),
                                     "e1..e" + std::to_string(dim));
                return basis_elem(static_cast<int>(idx - 1));
            }
        }
        if (dim == 4) {
            if (tok.text == "i") return basis_elem(1);
            if (tok.text == "j") return basis_elem(2);
            if (tok.text == "k") return basis_elem(3);
        }
        throw ParseError(tok.pos, "unknown symbol '" + tok.text + "'", "t, e1..e" + std::to_string(dim));
    }
};

// Canonical printing: each nonzero coordinate as num * den^-1 * eh, joined
// with signs. Round-trips through the parser.
template <class F>
std::string print_element(const SkewRatElem<F>& x) {
    std::string out;
    bool first = true;
    for (std::size_t h = 0; h < x.coords.size(); ++h) {
        const RatFunc<F>& c = x.coords[h];
        if (c.is_zero()) continue;
        std::string num = to_string(c.num, "t");
        bool neg = false;
        if (!num.empty() && num[0] == '-' && num.find(" + ") == std::string::npos &&
            num.find(" - ") == std::string::npos) {
            neg = true;
            num = num.substr(1);
        }
        std::string term;
        bool num_simple = num.find(' ') == std::string::npos;
        if (!(num == "1" && (!c.den_is_one() || h > 0))) term += num_simple ? num : "(" + num + ")";
        if (!c.den_is_one()) {
            if (!term.empty()) term += "*";
            term += "(" + to_string(c.den, "t") + ")^-1";
        }
        if (h > 0) {
            if (!term.empty()) term += "*";
            term += "e" + std::to_string(h + 1);
        }
        if (term.empty()) term = "1";
        if (first) {
            out += (neg ? "-" : "") + term;
            first = false;
        } else {
            out += (neg ? " - " : " + ") + term;
        }
    }
    return first ? "0" : out;
}

// p and q of the pair view, printed over the symbol alphabet.
template <class F>
std::string print_skew_poly(const SkewPoly<F>& p) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (int k = 0; k <= p.degree(); ++k) {
        Vec<F> c = p.coeff_at(k);
        if (is_zero_vec(c)) continue;
        std::string coeff;
        int nonzeros = 0;
        for (std::size_t h = 0; h < c.size(); ++h)
            if (!c[h].is_zero()) ++nonzeros;
        {
            bool inner_first = true;
            for (std::size_t h = 0; h < c.size(); ++h) {
                if (c[h].is_zero()) continue;
                std::string cs = to_string(c[h]);
                bool neg = !cs.empty() && cs[0] == '-';
                if (neg) cs = cs.substr(1);
                std::string sym = h == 0 ? "" : "e" + std::to_string(h + 1);
                std::string piece = (cs == "1" && !sym.empty()) ? sym : (sym.empty() ? cs : cs + "*" + sym);
                coeff += inner_first ? (neg ? "-" + piece : piece) : (neg ? " - " : " + ") + piece;
                inner_first = false;
            }
        }
        std::string term;
        if (k == 0) {
            term = nonzeros > 1 ? "(" + coeff + ")" : coeff;
        } else {
            bool unit = coeff == "1";
            term = unit ? "" : (nonzeros > 1 || coeff.find(' ') != std::string::npos ? "(" + coeff + ")*" : coeff + "*");
            term += "t";
            if (k != 1) term += "^" + std::to_string(k);
        }
        bool neg = !term.empty() && term[0] == '-' && term.find(' ') == std::string::npos;
        if (neg) term = term.substr(1);
        out += first ? (neg ? "-" + term : term) : (neg ? " - " : " + ") + term;
        first = false;
    }
    return out;
}

} // namespace skewgal
