#pragma once

// Dense univariate polynomials over an exact field, low degree first.
// The coefficient list is always trimmed: empty list <=> zero polynomial.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "skewgal/errors.hpp"
#include "skewgal/rational.hpp"

namespace skewgal {

template <class F>
struct Poly {
    std::vector<F> c; // c[k] = coefficient of t^k

    Poly() = default;
    explicit Poly(std::vector<F> coeffs) : c(std::move(coeffs)) { trim(); }
    static Poly constant(F x) {
        Poly p;
        if (!x.is_zero()) p.c.push_back(std::move(x));
        return p;
    }
    // c_like * t^k
    static Poly monomial(F coeff, int k) {
        Poly p;
        if (!coeff.is_zero()) {
            p.c.assign(static_cast<std::size_t>(k) + 1, F{});
            p.c.back() = std::move(coeff);
        }
        return p;
    }

    void trim() {
        while (!c.empty() && c.back().is_zero()) c.pop_back();
    }

    bool is_zero() const { return c.empty(); }
    int degree() const { return static_cast<int>(c.size()) - 1; } // -1 for zero
    const F& lc() const {
        if (c.empty()) throw Error("leading coefficient of zero polynomial");
        return c.back();
    }
    F coeff(int k) const {
        if (k < 0 || k >= static_cast<int>(c.size())) return F{};
        return c[static_cast<std::size_t>(k)];
    }

    Poly operator-() const {
        Poly r = *this;
        for (auto& x : r.c) x = -x;
        return r;
    }

    friend Poly operator+(const Poly& a, const Poly& b) {
        Poly r;
        r.c.resize(std::max(a.c.size(), b.c.size()));
        for (std::size_t i = 0; i < r.c.size(); ++i) {
            if (i < a.c.size()) r.c[i] = r.c[i] + a.c[i];
            if (i < b.c.size()) r.c[i] = r.c[i] + b.c[i];
        }
        r.trim();
        return r;
    }
    friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return Poly{};
        Poly r;
        r.c.assign(a.c.size() + b.c.size() - 1, F{});
        for (std::size_t i = 0; i < a.c.size(); ++i) {
            if (a.c[i].is_zero()) continue;
            for (std::size_t j = 0; j < b.c.size(); ++j)
                r.c[i + j] = r.c[i + j] + a.c[i] * b.c[j];
        }
        r.trim();
        return r;
    }
    friend bool operator==(const Poly& a, const Poly& b) { return a.c == b.c; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    Poly scaled(const F& s) const {
        Poly r = *this;
        for (auto& x : r.c) x = x * s;
        r.trim();
        return r;
    }
    Poly shifted(int k) const { // * t^k
        if (is_zero()) return *this;
        Poly r;
        r.c.assign(c.size() + static_cast<std::size_t>(k), F{});
        for (std::size_t i = 0; i < c.size(); ++i) r.c[i + static_cast<std::size_t>(k)] = c[i];
        return r;
    }
    Poly monic() const {
        if (is_zero()) return *this;
        F inv = one_like(lc()) / lc();
        return scaled(inv);
    }
    Poly derivative() const {
        Poly r;
        for (std::size_t i = 1; i < c.size(); ++i)
            r.c.push_back(from_int_like(c[i], static_cast<long>(i)) * c[i]);
        r.trim();
        return r;
    }

    F eval(const F& x) const {
        F acc{};
        for (std::size_t i = c.size(); i-- > 0;) acc = acc * x + c[i];
        return acc;
    }
    // Horner over a bigger ring; embed lifts coefficients into G. The
    // accumulator starts from an embedded zero so precision metadata
    // (e.g. series truncation orders) survives the fold.
    template <class G, class Fn>
    G eval_mapped(const G& x, Fn embed) const {
        G acc = embed(F{});
        for (std::size_t i = c.size(); i-- > 0;) acc = acc * x + embed(c[i]);
        return acc;
    }
    template <class G, class Fn>
    Poly<G> map_coeffs(Fn embed) const {
        std::vector<G> out;
        out.reserve(c.size());
        for (const auto& x : c) out.push_back(embed(x));
        return Poly<G>(std::move(out));
    }
};

template <class F>
bool is_zero(const Poly<F>& p) {
    return p.is_zero();
}
template <class F>
Poly<F> one_like(const Poly<F>& p) {
    return Poly<F>::constant(p.is_zero() ? one_like(F{}) : one_like(p.c.front()));
}
template <class F>
Poly<F> from_int_like(const Poly<F>& p, long k) {
    return Poly<F>::constant(from_int_like(p.is_zero() ? F{} : p.c.front(), k));
}

template <class F>
std::pair<Poly<F>, Poly<F>> divmod(const Poly<F>& f, const Poly<F>& g) {
    if (g.is_zero()) throw Error("polynomial division by zero");
    Poly<F> q, r = f;
    if (f.degree() >= g.degree()) q.c.assign(static_cast<std::size_t>(f.degree() - g.degree()) + 1, F{});
    while (!r.is_zero() && r.degree() >= g.degree()) {
        F s = r.lc() / g.lc();
        int k = r.degree() - g.degree();
        q.c[static_cast<std::size_t>(k)] = q.c[static_cast<std::size_t>(k)] + s;
        r = r - g.shifted(k).scaled(s);
    }
    q.trim();
    return {q, r};
}

template <class F>
Poly<F> operator/(const Poly<F>& f, const Poly<F>& g) {
    return divmod(f, g).first;
}
template <class F>
Poly<F> operator%(const Poly<F>& f, const Poly<F>& g) {
    return divmod(f, g).second;
}

// Monic gcd; zero only when both inputs are zero.
template <class F>
Poly<F> gcd_poly(Poly<F> a, Poly<F> b) {
    while (!b.is_zero()) {
        Poly<F> r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a.is_zero() ? a : a.monic();
}

// Over Q the naive Euclidean remainder sequence explodes coefficient sizes;
// use the primitive PRS on integer models instead.
inline Poly<Rat> gcd_poly(const Poly<Rat>& a0, const Poly<Rat>& b0) {
    if (a0.is_zero()) return b0.is_zero() ? b0 : b0.monic();
    if (b0.is_zero()) return a0.monic();
    auto to_primitive_int = [](const Poly<Rat>& p) {
        mpz_class lcm = 1;
        for (const auto& c : p.c) lcm = lcm / gcd(lcm, c.den()) * c.den();
        std::vector<mpz_class> v;
        v.reserve(p.c.size());
        for (const auto& c : p.c) v.push_back(c.num() * (lcm / c.den()));
        mpz_class g = 0;
        for (const auto& x : v) g = gcd(g, x);
        if (g != 0)
            for (auto& x : v) x /= g;
        return v;
    };
    auto trim = [](std::vector<mpz_class>& v) {
        while (!v.empty() && v.back() == 0) v.pop_back();
    };
    std::vector<mpz_class> a = to_primitive_int(a0), b = to_primitive_int(b0);
    trim(a);
    trim(b);
    if (a.size() < b.size()) std::swap(a, b);
    while (!b.empty()) {
        // primitive pseudo-remainder of a by b
        std::vector<mpz_class> r = a;
        const mpz_class lb = b.back();
        const std::size_t db = b.size() - 1;
        while (r.size() > db) {
            mpz_class c = r.back();
            std::size_t shift = r.size() - 1 - db;
            if (c != 0) {
                for (auto& x : r) x *= lb;
                for (std::size_t i = 0; i <= db; ++i) r[shift + i] -= c * b[i];
            }
            r.pop_back();
            trim(r);
            if (r.size() <= db) break;
        }
        mpz_class g = 0;
        for (const auto& x : r) g = gcd(g, x);
        if (g != 0)
            for (auto& x : r) x /= g;
        trim(r);
        a = std::move(b);
        b = std::move(r);
    }
    // monic rational result
    std::vector<Rat> out;
    out.reserve(a.size());
    for (const auto& x : a) out.emplace_back(x, a.back());
    return Poly<Rat>(std::move(out));
}

// g = gcd(a,b) monic with g = u*a + v*b.
template <class F>
struct XgcdResult {
    Poly<F> g, u, v;
};
template <class F>
XgcdResult<F> xgcd_poly(Poly<F> a, Poly<F> b) {
    Poly<F> u0 = one_like(a.is_zero() ? b : a), v0{}, u1{}, v1 = one_like(a.is_zero() ? b : a);
    if (a.is_zero() && b.is_zero()) return {Poly<F>{}, Poly<F>{}, Poly<F>{}};
    while (!b.is_zero()) {
        auto [q, r] = divmod(a, b);
        a = std::move(b);
        b = std::move(r);
        Poly<F> u2 = u0 - q * u1, v2 = v0 - q * v1;
        u0 = std::move(u1);
        v0 = std::move(v1);
        u1 = std::move(u2);
        v1 = std::move(v2);
    }
    F s = one_like(a.lc()) / a.lc();
    return {a.scaled(s), u0.scaled(s), v0.scaled(s)};
}

template <class F>
Poly<F> pow_poly(const Poly<F>& p, long e) {
    if (e < 0) throw Error("pow_poly: negative exponent");
    Poly<F> acc = one_like(p), base = p;
    while (e > 0) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

template <class F>
Poly<F> compose(const Poly<F>& f, const Poly<F>& g) {
    Poly<F> acc;
    for (std::size_t i = f.c.size(); i-- > 0;)
        acc = acc * g + Poly<F>::constant(f.c[i]);
    return acc;
}

// res(f,g) = lc(f)^{deg g} * prod g(alpha) over roots alpha of f,
// computed by the Euclidean recursion.
template <class F>
F resultant(Poly<F> f, Poly<F> g) {
    if (f.is_zero() || g.is_zero()) return F{};
    F acc = one_like(f.lc());
    bool neg = false;
    while (true) {
        if (g.degree() == 0)
            return neg ? -(acc * pow_field(g.lc(), f.degree()))
                       : acc * pow_field(g.lc(), f.degree());
        Poly<F> r = f % g;
        if (r.is_zero()) return F{};
        if ((f.degree() * g.degree()) % 2 != 0) neg = !neg;
        acc = acc * pow_field(g.lc(), static_cast<long>(f.degree() - r.degree()));
        f = std::move(g);
        g = std::move(r);
    }
}

template <class F>
F discriminant(const Poly<F>& f) {
    int n = f.degree();
    if (n < 1) throw Error("discriminant of a constant");
    F r = resultant(f, f.derivative()) / f.lc();
    return (n * (n - 1) / 2) % 2 != 0 ? -r : r;
}

// Exact square root in F[t]; nullopt when p is not a square.
inline std::optional<Poly<Rat>> poly_sqrt(const Poly<Rat>& p) {
    if (p.is_zero()) return Poly<Rat>{};
    int d = p.degree();
    if (d % 2 != 0) return std::nullopt;
    auto lead = rat_sqrt(p.lc());
    if (!lead) return std::nullopt;
    int h = d / 2;
    Poly<Rat> r;
    r.c.assign(static_cast<std::size_t>(h) + 1, Rat{});
    r.c[static_cast<std::size_t>(h)] = *lead;
    // solve coefficients top-down: coeff of t^{h+k} in r^2 equals
    // 2*lead*r_k plus products of already-known coefficients
    for (int k = h - 1; k >= 0; --k) {
        Rat s{};
        for (int i = k + 1; i <= h - 1; ++i) {
            int j = h + k - i;
            if (j < k + 1 || j > h - 1) continue;
            s += r.c[static_cast<std::size_t>(i)] * r.c[static_cast<std::size_t>(j)];
        }
        Rat target = p.coeff(h + k) - s;
        r.c[static_cast<std::size_t>(k)] = target / (Rat(2) * *lead);
    }
    r.trim();
    if (r * r == p) return r;
    return std::nullopt;
}

namespace detail {
inline bool needs_parens(const std::string& s) {
    for (std::size_t i = 1; i < s.size(); ++i)
        if (s[i] == '+' || s[i] == '-' || s[i] == ' ' || s[i] == '/') return true;
    return false;
}
} // namespace detail

template <class F>
std::string to_string(const Poly<F>& p, const std::string& var = "t") {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (int k = 0; k <= p.degree(); ++k) {
        F ck = p.coeff(k);
        if (ck.is_zero()) continue;
        std::string cs = to_string(ck);
        bool neg = !cs.empty() && cs[0] == '-';
        if (neg) cs = cs.substr(1);
        if (first) {
            if (neg) out += "-";
            first = false;
        } else {
            out += neg ? " - " : " + ";
        }
        std::string term;
        bool unit = (cs == "1");
        if (detail::needs_parens(cs)) cs = "(" + cs + ")";
        if (k == 0) {
            term = cs;
        } else {
            term = unit ? "" : cs + "*";
            term += var;
            if (k != 1) term += "^" + std::to_string(k);
        }
        out += term;
    }
    return out;
}

} // namespace skewgal
