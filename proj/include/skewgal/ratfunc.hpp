#pragma once

// Normalized rational functions num/den with den monic and gcd(num, den) = 1.
// Arithmetic cross-cancels before multiplying so the gcd work stays on small
// operands; den == 1 is the hot fast path.

#include <string>
#include <utility>

#include "skewgal/polynomial.hpp"

namespace skewgal {

template <class F>
struct RatFunc {
    Poly<F> num;
    Poly<F> den; // monic, never zero

    RatFunc() : den(Poly<F>::constant(one_like(F{}))) {}
    RatFunc(Poly<F> n, Poly<F> d) { assign(std::move(n), std::move(d)); }
    explicit RatFunc(Poly<F> n) : num(std::move(n)), den(Poly<F>::constant(one_like(F{}))) {}
    explicit RatFunc(F x) : RatFunc(Poly<F>::constant(std::move(x))) {}

    static RatFunc t() { return RatFunc(Poly<F>::monomial(one_like(F{}), 1)); }

private:
    struct reduced_tag {};
    RatFunc(reduced_tag, Poly<F> n, Poly<F> d) : num(std::move(n)), den(std::move(d)) {}

public:
    void assign(Poly<F> n, Poly<F> d) {
        if (d.is_zero()) throw Error("rational function with zero denominator");
        if (n.is_zero()) {
            num = Poly<F>{};
            den = Poly<F>::constant(one_like(d.lc()));
            return;
        }
        if (d.degree() == 0) {
            F inv = one_like(d.lc()) / d.lc();
            num = n.scaled(inv);
            den = Poly<F>::constant(one_like(d.lc()));
            return;
        }
        Poly<F> g = gcd_poly(n, d);
        if (g.degree() > 0) {
            n = n / g;
            d = d / g;
        }
        F s = one_like(d.lc()) / d.lc();
        num = n.scaled(s);
        den = d.degree() == 0 ? Poly<F>::constant(one_like(d.lc())) : d.scaled(s);
    }

    bool is_zero() const { return num.is_zero(); }
    bool is_one() const { return den.degree() == 0 && num.degree() == 0 && num == den; }
    bool is_constant() const { return num.degree() <= 0 && den.degree() == 0; }
    F constant_value() const {
        if (!is_constant()) throw Error("rational function is not a constant");
        return num.is_zero() ? F{} : num.c[0];
    }
    bool den_is_one() const { return den.degree() == 0; }

    RatFunc operator-() const {
        RatFunc r = *this;
        r.num = -r.num;
        return r;
    }
    friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        if (a.den_is_one() && b.den_is_one()) return RatFunc(a.num + b.num);
        if (a.den == b.den) return RatFunc(a.num + b.num, a.den);
        Poly<F> g = gcd_poly(a.den, b.den);
        if (g.degree() == 0) {
            // coprime denominators: the sum is already reduced
            Poly<F> n = a.num * b.den + b.num * a.den;
            if (n.is_zero()) return RatFunc{};
            return RatFunc(reduced_tag{}, std::move(n), a.den * b.den);
        }
        Poly<F> bq = b.den / g;
        return RatFunc(a.num * bq + b.num * (a.den / g), a.den * bq);
    }
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
        if (a.is_zero() || b.is_zero()) return RatFunc{};
        if (a.den_is_one() && b.den_is_one()) return RatFunc(reduced_tag{}, a.num * b.num, a.den);
        // cross-cancel: gcd(a.num, b.den) and gcd(b.num, a.den)
        Poly<F> g1 = a.den_is_one() || b.num.degree() <= 0 ? Poly<F>{} : gcd_poly(b.num, a.den);
        Poly<F> g2 = b.den_is_one() || a.num.degree() <= 0 ? Poly<F>{} : gcd_poly(a.num, b.den);
        Poly<F> an = a.num, bd = b.den, bn = b.num, ad = a.den;
        if (g1.degree() > 0) {
            bn = bn / g1;
            ad = ad / g1;
        }
        if (g2.degree() > 0) {
            an = an / g2;
            bd = bd / g2;
        }
        // factors are now pairwise coprime; only the monic scale remains
        Poly<F> n = an * bn, d = ad * bd;
        F s = one_like(d.lc()) / d.lc();
        return RatFunc(reduced_tag{}, n.scaled(s), d.degree() == 0 ? Poly<F>::constant(one_like(d.lc())) : d.scaled(s));
    }
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b) {
        if (b.is_zero()) throw Error("rational function division by zero");
        return a * b.inverse();
    }
    friend bool operator==(const RatFunc& a, const RatFunc& b) {
        return a.num == b.num && a.den == b.den;
    }
    friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

    RatFunc inverse() const {
        if (is_zero()) throw Error("inverse of zero rational function");
        F s = one_like(num.lc()) / num.lc();
        return RatFunc(reduced_tag{}, den.scaled(s), num.degree() == 0 ? Poly<F>::constant(one_like(num.lc())) : num.scaled(s));
    }

    F eval(const F& x) const {
        F d = den.eval(x);
        if (d.is_zero()) throw Error("rational function has a pole at the evaluation point");
        return num.eval(x) / d;
    }
};

template <class F>
bool is_zero(const RatFunc<F>& r) {
    return r.is_zero();
}
template <class F>
RatFunc<F> one_like(const RatFunc<F>&) {
    return RatFunc<F>(one_like(F{}));
}
template <class F>
RatFunc<F> from_int_like(const RatFunc<F>&, long k) {
    return RatFunc<F>(from_int_like(F{}, k));
}

template <class F>
std::string to_string(const RatFunc<F>& r, const std::string& var = "t") {
    if (r.den.degree() == 0) return to_string(r.num, var);
    std::string n = to_string(r.num, var), d = to_string(r.den, var);
    return "(" + n + ")/(" + d + ")";
}

} // namespace skewgal
