#pragma once

// The skew polynomial ring H[t] with central indeterminate and its fraction
// field H(t), realized canonically as H (x)_k k(t): an element is a vector of
// rational functions in the basis e_1..e_d of H. The p(t) q(t)^{-1} pair form
// is a view derived from (and convertible back to) canonical coordinates.

#include <string>
#include <utility>
#include <vector>

#include "skewgal/ratfunc.hpp"
#include "skewgal/structalg.hpp"

namespace skewgal {

template <class F>
struct SkewPoly {
    const StructureAlgebra<F>* H = nullptr;
    std::vector<Vec<F>> coeff; // coeff[k] in H, low degree first, trimmed

    SkewPoly() = default;
    SkewPoly(const StructureAlgebra<F>* alg, std::vector<Vec<F>> c) : H(alg), coeff(std::move(c)) { trim(); }
    static SkewPoly constant(const StructureAlgebra<F>* alg, Vec<F> x) {
        return SkewPoly(alg, {std::move(x)});
    }

    void trim() {
        while (!coeff.empty() && is_zero_vec(coeff.back())) coeff.pop_back();
    }
    bool is_zero() const { return coeff.empty(); }
    int degree() const { return static_cast<int>(coeff.size()) - 1; }
    Vec<F> coeff_at(int k) const {
        if (k < 0 || k >= static_cast<int>(coeff.size())) return Vec<F>(static_cast<std::size_t>(H->dim));
        return coeff[static_cast<std::size_t>(k)];
    }
    const Vec<F>& lead() const {
        if (coeff.empty()) throw Error("leading coefficient of zero skew polynomial");
        return coeff.back();
    }

    SkewPoly operator-() const {
        SkewPoly r = *this;
        for (auto& v : r.coeff)
            for (auto& x : v) x = -x;
        return r;
    }
    friend SkewPoly operator+(const SkewPoly& a, const SkewPoly& b) {
        check_same(a, b);
        const StructureAlgebra<F>* H = a.H ? a.H : b.H;
        std::vector<Vec<F>> c(std::max(a.coeff.size(), b.coeff.size()),
                              Vec<F>(H ? static_cast<std::size_t>(H->dim) : 0));
        for (std::size_t i = 0; i < c.size(); ++i) {
            if (i < a.coeff.size()) c[i] = add_vec(c[i], a.coeff[i]);
            if (i < b.coeff.size()) c[i] = add_vec(c[i], b.coeff[i]);
        }
        return SkewPoly(H, std::move(c));
    }
    friend SkewPoly operator-(const SkewPoly& a, const SkewPoly& b) { return a + (-b); }
    // t is central, so degrees convolve while coefficients multiply in H
    friend SkewPoly operator*(const SkewPoly& a, const SkewPoly& b) {
        check_same(a, b);
        const StructureAlgebra<F>* H = a.H ? a.H : b.H;
        if (a.is_zero() || b.is_zero()) return SkewPoly(H, {});
        std::vector<Vec<F>> c(a.coeff.size() + b.coeff.size() - 1, Vec<F>(static_cast<std::size_t>(H->dim)));
        for (std::size_t i = 0; i < a.coeff.size(); ++i)
            for (std::size_t j = 0; j < b.coeff.size(); ++j)
                c[i + j] = add_vec(c[i + j], multiply(*H, a.coeff[i], b.coeff[j]));
        return SkewPoly(H, std::move(c));
    }
    friend bool operator==(const SkewPoly& a, const SkewPoly& b) { return a.coeff == b.coeff; }
    friend bool operator!=(const SkewPoly& a, const SkewPoly& b) { return !(a == b); }

    static void check_same(const SkewPoly& a, const SkewPoly& b) {
        if (a.H && b.H && a.H != b.H) throw Error("skew polynomials over different algebras");
    }
};

// Right Euclidean division f = q*g + r with deg r < deg g; needs an
// invertible leading coefficient, which a division algebra always provides.
template <class F>
std::pair<SkewPoly<F>, SkewPoly<F>> right_divide(const SkewPoly<F>& f, const SkewPoly<F>& g) {
    if (g.is_zero()) throw Error("skew division by zero");
    const StructureAlgebra<F>* H = g.H;
    auto lg_inv = inverse(*H, g.lead());
    if (!lg_inv) throw Error("leading coefficient of the divisor is not invertible");
    SkewPoly<F> q(H, {}), r = f;
    while (!r.is_zero() && r.degree() >= g.degree()) {
        int k = r.degree() - g.degree();
        Vec<F> c = multiply(*H, r.lead(), *lg_inv);
        std::vector<Vec<F>> mono(static_cast<std::size_t>(k) + 1, Vec<F>(static_cast<std::size_t>(H->dim)));
        mono.back() = c;
        SkewPoly<F> m(H, std::move(mono));
        q = q + m;
        r = r - m * g;
    }
    return {q, r};
}

// H(t) with multiplication table shared across its elements.
template <class F>
struct SkewField {
    const StructureAlgebra<F>* H = nullptr;
    StructureAlgebra<RatFunc<F>> Ht; // the same table over k(t)

    explicit SkewField(const StructureAlgebra<F>* alg) : H(alg) {
        Ht = base_change<RatFunc<F>>(*alg, [](const F& c) { return RatFunc<F>(c); });
    }
};

template <class F>
struct SkewRatElem {
    const SkewField<F>* ctx = nullptr;
    std::vector<RatFunc<F>> coords; // length dim(H), basis e_1..e_d

    SkewRatElem() = default;
    SkewRatElem(const SkewField<F>* c, std::vector<RatFunc<F>> v) : ctx(c), coords(std::move(v)) {
        if (static_cast<int>(coords.size()) != c->H->dim) throw Error("coordinate length mismatch");
    }
    static SkewRatElem zero(const SkewField<F>* c) {
        return SkewRatElem(c, std::vector<RatFunc<F>>(static_cast<std::size_t>(c->H->dim)));
    }
    static SkewRatElem one(const SkewField<F>* c) {
        auto u = unity(c->Ht);
        if (!u) throw Error("coefficient algebra has no unity");
        return SkewRatElem(c, *u);
    }

    bool is_zero() const { return is_zero_vec(coords); }

    SkewRatElem operator-() const {
        SkewRatElem r = *this;
        for (auto& x : r.coords) x = -x;
        return r;
    }
    friend SkewRatElem operator+(const SkewRatElem& a, const SkewRatElem& b) {
        check_same(a, b);
        return SkewRatElem(a.ctx, add_vec(a.coords, b.coords));
    }
    friend SkewRatElem operator-(const SkewRatElem& a, const SkewRatElem& b) { return a + (-b); }
    friend SkewRatElem operator*(const SkewRatElem& a, const SkewRatElem& b) {
        check_same(a, b);
        return SkewRatElem(a.ctx, multiply(a.ctx->Ht, a.coords, b.coords));
    }
    friend bool operator==(const SkewRatElem& a, const SkewRatElem& b) { return a.coords == b.coords; }
    friend bool operator!=(const SkewRatElem& a, const SkewRatElem& b) { return !(a == b); }

    static void check_same(const SkewRatElem& a, const SkewRatElem& b) {
        if (a.ctx != b.ctx) throw Error("elements of different skew fields");
    }
};

// Inverse in H(t): solve the regular-representation system. Over a division
// algebra H the norm form has only the trivial zero on k(t) as well, so a
// failure for nonzero input is a correctness bug and is surfaced loudly.
template <class F>
SkewRatElem<F> invert(const SkewRatElem<F>& x) {
    if (x.is_zero()) throw Error("inverting zero in H(t)");
    auto inv = inverse(x.ctx->Ht, x.coords);
    if (!inv) throw Error("nonzero element of H(t) failed to invert; H is not a division algebra here");
    return SkewRatElem<F>(x.ctx, *inv);
}

template <class F>
SkewRatElem<F> power(const SkewRatElem<F>& x, long e) {
    if (e < 0) return power(invert(x), -e);
    SkewRatElem<F> acc = SkewRatElem<F>::one(x.ctx), base = x;
    while (e > 0) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

// canonical-coordinate image of a skew polynomial (psi of the construction)
template <class F>
SkewRatElem<F> to_skew_rat(const SkewField<F>& ctx, const SkewPoly<F>& p) {
    if (p.H != ctx.H) throw Error("skew polynomial over a different algebra");
    std::vector<RatFunc<F>> coords(static_cast<std::size_t>(ctx.H->dim));
    for (int h = 0; h < ctx.H->dim; ++h) {
        std::vector<F> c;
        c.reserve(p.coeff.size());
        for (const auto& v : p.coeff) c.push_back(v[static_cast<std::size_t>(h)]);
        coords[static_cast<std::size_t>(h)] = RatFunc<F>(Poly<F>(std::move(c)));
    }
    return SkewRatElem<F>(&ctx, std::move(coords));
}

template <class F>
struct FractionPair {
    SkewPoly<F> p;
    SkewPoly<F> q; // nonzero; canonical pairs have q central monic in k[t]
};

// x = p * q^{-1} with q the monic least common denominator in k[t].
template <class F>
FractionPair<F> to_fraction_pair(const SkewRatElem<F>& x) {
    const auto* H = x.ctx->H;
    Poly<F> l = Poly<F>::constant(one_like(F{}));
    for (const auto& c : x.coords) l = (l * c.den) / gcd_poly(l, c.den);
    // p = x * l: polynomial coordinates, transposed into H[t]
    int deg = 0;
    std::vector<Poly<F>> nums(x.coords.size());
    for (std::size_t h = 0; h < x.coords.size(); ++h) {
        nums[h] = x.coords[h].num * (l / x.coords[h].den);
        deg = std::max(deg, nums[h].degree());
    }
    std::vector<Vec<F>> pc(static_cast<std::size_t>(deg) + 1, Vec<F>(static_cast<std::size_t>(H->dim)));
    for (std::size_t h = 0; h < nums.size(); ++h)
        for (int k = 0; k <= nums[h].degree(); ++k) pc[static_cast<std::size_t>(k)][h] = nums[h].coeff(k);
    FractionPair<F> out;
    out.p = SkewPoly<F>(H, std::move(pc));
    // q = l * e_1 as a central skew polynomial
    std::vector<Vec<F>> qc(static_cast<std::size_t>(l.degree()) + 1, Vec<F>(static_cast<std::size_t>(H->dim)));
    for (int k = 0; k <= l.degree(); ++k) qc[static_cast<std::size_t>(k)][0] = l.coeff(k);
    out.q = SkewPoly<F>(H, std::move(qc));
    return out;
}

// p * q^{-1} for arbitrary nonzero q in H[t].
template <class F>
SkewRatElem<F> from_fraction_pair(const SkewField<F>& ctx, const SkewPoly<F>& p, const SkewPoly<F>& q) {
    if (q.is_zero()) throw Error("fraction pair with zero denominator");
    return to_skew_rat(ctx, p) * invert(to_skew_rat(ctx, q));
}

} // namespace skewgal
