#pragma once

// Arbitrary-precision rationals on top of GMP. Values are always canonical:
// gcd(|num|, den) = 1 and den > 0.

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

#include "skewgal/errors.hpp"

namespace skewgal {

struct Rat {
    mpq_class v;

    Rat() : v(0) {}
    Rat(long n) : v(n) {}
    Rat(long n, long d) {
        if (d == 0) throw Error("rational with zero denominator");
        v = mpq_class(n, d);
        v.canonicalize();
    }
    explicit Rat(mpq_class q) : v(std::move(q)) { v.canonicalize(); }
    Rat(const mpz_class& n, const mpz_class& d) {
        if (d == 0) throw Error("rational with zero denominator");
        v = mpq_class(n, d);
        v.canonicalize();
    }

    static Rat from_string(std::string_view s);

    bool is_zero() const { return sgn(v) == 0; }
    int sign() const { return sgn(v); }
    mpz_class num() const { return v.get_num(); }
    mpz_class den() const { return v.get_den(); }

    Rat operator-() const { return Rat(mpq_class(-v)); }
    Rat& operator+=(const Rat& o) { v += o.v; return *this; }
    Rat& operator-=(const Rat& o) { v -= o.v; return *this; }
    Rat& operator*=(const Rat& o) { v *= o.v; return *this; }
    Rat& operator/=(const Rat& o) {
        if (o.is_zero()) throw Error("rational division by zero");
        v /= o.v;
        return *this;
    }

    friend Rat operator+(Rat a, const Rat& b) { a += b; return a; }
    friend Rat operator-(Rat a, const Rat& b) { a -= b; return a; }
    friend Rat operator*(Rat a, const Rat& b) { a *= b; return a; }
    friend Rat operator/(Rat a, const Rat& b) { a /= b; return a; }
    friend bool operator==(const Rat& a, const Rat& b) { return a.v == b.v; }
    friend bool operator!=(const Rat& a, const Rat& b) { return a.v != b.v; }
    friend bool operator<(const Rat& a, const Rat& b) { return a.v < b.v; }
    friend bool operator>(const Rat& a, const Rat& b) { return a.v > b.v; }
};

inline Rat Rat::from_string(std::string_view s) {
    // strict "[-]digits[/digits]" only; GMP's set_str is laxer than we want
    if (s.empty()) throw Error("empty rational literal");
    std::size_t i = 0;
    if (s[0] == '-' || s[0] == '+') i = 1;
    if (i >= s.size()) throw Error("bad rational literal: " + std::string(s));
    bool slash_seen = false;
    for (std::size_t k = i; k < s.size(); ++k) {
        if (s[k] == '/' && !slash_seen && k > i && k + 1 < s.size()) {
            slash_seen = true;
            continue;
        }
        if (s[k] < '0' || s[k] > '9')
            throw Error("bad rational literal: " + std::string(s));
    }
    mpq_class q;
    if (q.set_str(std::string(s), 10) != 0)
        throw Error("bad rational literal: " + std::string(s));
    if (q.get_den() == 0) throw Error("rational with zero denominator");
    q.canonicalize();
    return Rat(std::move(q));
}

inline bool is_zero(const Rat& r) { return r.is_zero(); }
inline Rat one_like(const Rat&) { return Rat(1); }
inline Rat from_int_like(const Rat&, long k) { return Rat(k); }

inline std::string to_string(const Rat& r) { return r.v.get_str(); }

inline Rat rat_abs(const Rat& r) { return r.sign() < 0 ? -r : r; }

// Exact square root, or nullopt when r is not a perfect square in Q.
inline std::optional<Rat> rat_sqrt(const Rat& r) {
    if (r.sign() < 0) return std::nullopt;
    mpz_class n = r.num(), d = r.den();
    if (mpz_perfect_square_p(n.get_mpz_t()) == 0) return std::nullopt;
    if (mpz_perfect_square_p(d.get_mpz_t()) == 0) return std::nullopt;
    mpz_class sn, sd;
    mpz_sqrt(sn.get_mpz_t(), n.get_mpz_t());
    mpz_sqrt(sd.get_mpz_t(), d.get_mpz_t());
    return Rat(sn, sd);
}

template <class F>
F pow_field(F base, long e) {
    if (e < 0) throw Error("pow_field: negative exponent");
    F acc = one_like(base);
    while (e > 0) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

} // namespace skewgal
