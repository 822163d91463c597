#pragma once

// Truncated Laurent series with absolute precision: coefficients of t^k are
// known for k < order and unknown beyond. A nonzero value stores its
// valuation and a coefficient block starting there (block head nonzero).
// The zero-to-order series is represented with an empty block and val == order.

#include <string>
#include <vector>

#include "skewgal/polynomial.hpp"

namespace skewgal {

template <class F>
struct TruncSeries {
    int val = 0;           // exponent of first stored coefficient
    std::vector<F> c;      // c[k] = coefficient of t^{val+k}
    int order = 0;         // terms of exponent >= order are unknown

    TruncSeries() = default;
    static TruncSeries zero_to(int order) {
        TruncSeries s;
        s.val = order;
        s.order = order;
        return s;
    }
    TruncSeries(int valuation, std::vector<F> coeffs, int ord) : val(valuation), c(std::move(coeffs)), order(ord) {
        normalize();
    }
    static TruncSeries from_poly(const Poly<F>& p, int ord) {
        TruncSeries s;
        s.val = 0;
        s.c = p.c;
        s.order = ord;
        s.normalize();
        return s;
    }
    static TruncSeries t_power(int k, int ord, const F& like) {
        TruncSeries s;
        s.val = k;
        s.c = {one_like(like)};
        s.order = ord;
        s.normalize();
        return s;
    }

    void normalize() {
        // drop unknown range, then leading zeros
        if (val >= order) {
            c.clear();
            val = order;
            return;
        }
        if (static_cast<int>(c.size()) > order - val) c.resize(static_cast<std::size_t>(order - val));
        std::size_t lead = 0;
        while (lead < c.size() && c[lead].is_zero()) ++lead;
        if (lead == c.size()) {
            c.clear();
            val = order;
            return;
        }
        if (lead > 0) {
            c.erase(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(lead));
            val += static_cast<int>(lead);
        }
        while (!c.empty() && c.back().is_zero()) c.pop_back();
    }

    // no coefficient distinguishable from zero before the truncation order
    bool is_zero_to_order() const { return c.empty(); }

    F coeff(int k) const {
        if (k >= order) throw Error("series coefficient beyond truncation order");
        if (k < val || k >= val + static_cast<int>(c.size())) return F{};
        return c[static_cast<std::size_t>(k - val)];
    }

    F eval_at_zero() const {
        if (val < 0 && !c.empty()) throw Error("series with a pole evaluated at t = 0");
        if (order < 1) throw Error("series has no constant term information");
        return coeff(0);
    }

    TruncSeries operator-() const {
        TruncSeries r = *this;
        for (auto& x : r.c) x = -x;
        return r;
    }
    friend TruncSeries operator+(const TruncSeries& a, const TruncSeries& b) {
        TruncSeries r;
        r.order = std::min(a.order, b.order);
        r.val = std::min(a.c.empty() ? r.order : a.val, b.c.empty() ? r.order : b.val);
        if (r.val >= r.order) return zero_to(r.order);
        r.c.assign(static_cast<std::size_t>(r.order - r.val), F{});
        for (std::size_t i = 0; i < a.c.size(); ++i) {
            int k = a.val + static_cast<int>(i);
            if (k < r.order) r.c[static_cast<std::size_t>(k - r.val)] = r.c[static_cast<std::size_t>(k - r.val)] + a.c[i];
        }
        for (std::size_t i = 0; i < b.c.size(); ++i) {
            int k = b.val + static_cast<int>(i);
            if (k < r.order) r.c[static_cast<std::size_t>(k - r.val)] = r.c[static_cast<std::size_t>(k - r.val)] + b.c[i];
        }
        r.normalize();
        return r;
    }
    friend TruncSeries operator-(const TruncSeries& a, const TruncSeries& b) { return a + (-b); }
    friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
        // absolute precision of a product: min(val(a)+ord(b), val(b)+ord(a))
        int ord = std::min(a.val + b.order, b.val + a.order);
        if (a.c.empty() || b.c.empty()) return zero_to(ord);
        TruncSeries r;
        r.order = ord;
        r.val = a.val + b.val;
        if (r.val >= ord) return zero_to(ord);
        r.c.assign(static_cast<std::size_t>(ord - r.val), F{});
        for (std::size_t i = 0; i < a.c.size(); ++i) {
            if (a.c[i].is_zero()) continue;
            for (std::size_t j = 0; j < b.c.size(); ++j) {
                std::size_t k = i + j;
                if (k >= r.c.size()) break;
                r.c[k] = r.c[k] + a.c[i] * b.c[j];
            }
        }
        r.normalize();
        return r;
    }
    friend bool operator==(const TruncSeries& a, const TruncSeries& b) {
        return a.val == b.val && a.order == b.order && a.c == b.c;
    }
    friend bool operator!=(const TruncSeries& a, const TruncSeries& b) { return !(a == b); }

    TruncSeries invert() const {
        if (c.empty()) throw Error("inverting a series indistinguishable from zero");
        int p = order - val; // relative precision carries over
        TruncSeries r;
        r.val = -val;
        r.order = p - val;
        r.c.assign(static_cast<std::size_t>(p), F{});
        F u0inv = one_like(c[0]) / c[0];
        r.c[0] = u0inv;
        for (int k = 1; k < p; ++k) {
            F s{};
            for (int i = 1; i <= k; ++i) {
                if (i >= static_cast<int>(c.size())) break;
                s = s + c[static_cast<std::size_t>(i)] * r.c[static_cast<std::size_t>(k - i)];
            }
            r.c[static_cast<std::size_t>(k)] = -(u0inv * s);
        }
        r.normalize();
        return r;
    }

    TruncSeries truncated(int new_order) const {
        TruncSeries r = *this;
        if (new_order < r.order) {
            r.order = new_order;
            r.normalize();
        }
        return r;
    }

    // known part as a polynomial (valuation must be >= 0)
    Poly<F> poly_part() const {
        if (val < 0 && !c.empty()) throw Error("series with negative valuation has no polynomial part");
        Poly<F> p;
        if (c.empty()) return p;
        p.c.assign(static_cast<std::size_t>(val) + c.size(), F{});
        for (std::size_t i = 0; i < c.size(); ++i) p.c[static_cast<std::size_t>(val) + i] = c[i];
        p.trim();
        return p;
    }
};

template <class F>
bool is_zero(const TruncSeries<F>& s) {
    return s.is_zero_to_order();
}

template <class F>
std::string to_string(const TruncSeries<F>& s, const std::string& var = "t") {
    std::string out;
    bool first = true;
    for (std::size_t i = 0; i < s.c.size(); ++i) {
        if (s.c[i].is_zero()) continue;
        int k = s.val + static_cast<int>(i);
        std::string cs = to_string(s.c[i]);
        bool neg = !cs.empty() && cs[0] == '-';
        if (neg) cs = cs.substr(1);
        out += first ? (neg ? "-" : "") : (neg ? " - " : " + ");
        first = false;
        bool unit = (cs == "1");
        if (detail::needs_parens(cs)) cs = "(" + cs + ")";
        if (k == 0) {
            out += cs;
        } else {
            out += unit ? "" : cs + "*";
            out += var;
            if (k != 1) out += "^" + std::to_string(k);
        }
    }
    if (first) out += "0";
    out += " + O(" + var + "^" + std::to_string(s.order) + ")";
    return out;
}

} // namespace skewgal
