#pragma once

// Finite (commutative) extensions L/k(t) presented as k(t)[y]/(m) with an
// explicit automorphism list, Hensel lifting of simple roots into k[[t]],
// the interpolation construction P(t,x) = (1-t) P0 + t P1, and the cubic
// S_3 certificate (irreducibility + non-square discriminant).

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "skewgal/irreducible.hpp"
#include "skewgal/ratfunc.hpp"
#include "skewgal/series.hpp"

namespace skewgal {

using KRatFunc = RatFunc<Rat>;
using YPoly = Poly<KRatFunc>;       // polynomial in y over k(t)
using BivarPoly = Poly<Poly<Rat>>;  // polynomial in x with k[t] coefficients

struct AutomorphismSpec {
    YPoly image; // sigma(y), degree < g
};

struct ExtensionPresentation {
    std::string name;
    YPoly min_poly; // monic, coefficients in k[t]
    std::vector<AutomorphismSpec> automorphisms;

    int degree() const { return min_poly.degree(); }
};

// sigma(tau(y)) reduced mod m: substitute sigma's image into tau's image.
inline YPoly compose_automorphisms(const ExtensionPresentation& E, const YPoly& sigma, const YPoly& tau) {
    return compose(tau, sigma) % E.min_poly;
}

struct GaloisCheck {
    bool ok = true;
    std::string witness;
};

// Separability, root property of each image, cardinality |G| = [L:k(t)],
// closure under composition, a unique identity, and distinct images.
inline GaloisCheck verify_galois_presentation(const ExtensionPresentation& E) {
    const YPoly& m = E.min_poly;
    if (m.degree() < 1) return {false, "modulus must have degree >= 1"};
    if (!(m.lc() == one_like(m.lc()))) return {false, "modulus is not monic"};
    if (gcd_poly(m, m.derivative()).degree() != 0) return {false, "modulus is not separable"};
    int g = m.degree();
    if (static_cast<int>(E.automorphisms.size()) != g)
        return {false, "automorphism list has " + std::to_string(E.automorphisms.size()) +
                           " entries, expected " + std::to_string(g)};
    YPoly y = YPoly::monomial(one_like(m.lc()), 1) % m;
    std::vector<YPoly> images;
    images.reserve(E.automorphisms.size());
    for (const auto& a : E.automorphisms) images.push_back(a.image % m);
    int identity_count = 0;
    for (std::size_t i = 0; i < images.size(); ++i) {
        const YPoly& u = images[i];
        if (!(compose(m, u) % m).is_zero())
            return {false, "image " + std::to_string(i + 1) + " is not a root of the modulus"};
        if (u == y) ++identity_count;
        for (std::size_t j = 0; j < i; ++j)
            if (u == images[j])
                return {false, "duplicate automorphism images " + std::to_string(j + 1) + " and " +
                                   std::to_string(i + 1)};
    }
    if (identity_count != 1) return {false, "exactly one automorphism may fix y"};
    for (std::size_t i = 0; i < images.size(); ++i)
        for (std::size_t j = 0; j < images.size(); ++j) {
            YPoly c = compose_automorphisms(E, images[i], images[j]);
            bool found = false;
            for (const auto& u : images) found = found || u == c;
            if (!found)
                return {false, "composition of automorphisms " + std::to_string(i + 1) + " and " +
                                   std::to_string(j + 1) + " is not in the list"};
        }
    return {};
}

// --- field arithmetic in L = k(t)[y]/(m) -----------------------------------

struct LContext {
    ExtensionPresentation E;
    int g = 0;
    explicit LContext(ExtensionPresentation e) : E(std::move(e)), g(E.min_poly.degree()) {}
};

struct ExtElem {
    std::shared_ptr<const LContext> ctx; // null only for the zero constant
    YPoly rep;                           // reduced mod m

    ExtElem() = default;
    ExtElem(std::shared_ptr<const LContext> c, YPoly r) : ctx(std::move(c)), rep(std::move(r)) {
        if (ctx) rep = rep % ctx->E.min_poly;
    }

    bool is_zero() const { return rep.is_zero(); }
    int sign_context() const { return ctx ? 1 : 0; }

    static std::shared_ptr<const LContext> merge(const ExtElem& a, const ExtElem& b) {
        if (a.ctx && b.ctx && a.ctx != b.ctx) throw Error("extension elements from different fields");
        return a.ctx ? a.ctx : b.ctx;
    }

    ExtElem operator-() const { return ExtElem{ctx, -rep}; }
    friend ExtElem operator+(const ExtElem& a, const ExtElem& b) { return ExtElem{merge(a, b), a.rep + b.rep}; }
    friend ExtElem operator-(const ExtElem& a, const ExtElem& b) { return ExtElem{merge(a, b), a.rep - b.rep}; }
    friend ExtElem operator*(const ExtElem& a, const ExtElem& b) {
        auto c = merge(a, b);
        YPoly r = a.rep * b.rep;
        if (c) r = r % c->E.min_poly;
        return ExtElem{c, std::move(r)};
    }
    friend ExtElem operator/(const ExtElem& a, const ExtElem& b) { return a * b.inverse(); }
    friend bool operator==(const ExtElem& a, const ExtElem& b) { return a.rep == b.rep; }
    friend bool operator!=(const ExtElem& a, const ExtElem& b) { return !(a == b); }

    ExtElem inverse() const {
        if (is_zero()) throw Error("inverse of zero in the extension field");
        if (!ctx) throw Error("extension element without context");
        auto x = xgcd_poly(rep, ctx->E.min_poly);
        if (x.g.degree() != 0)
            throw Error("element is a zero divisor: the modulus is reducible over k(t)");
        // g = u*rep + v*m with g a nonzero constant after monic scaling
        KRatFunc c = x.g.coeff(0);
        return ExtElem{ctx, x.u.scaled(one_like(c) / c) % ctx->E.min_poly};
    }

    bool is_rational_constant() const { return rep.degree() <= 0 && (rep.is_zero() || rep.coeff(0).is_constant()); }
};

inline bool is_zero(const ExtElem& e) { return e.is_zero(); }
inline ExtElem one_like(const ExtElem& e) {
    if (!e.ctx) throw Error("one_like of a contextless extension element");
    return ExtElem{e.ctx, YPoly::constant(KRatFunc(Rat(1)))};
}
inline ExtElem from_int_like(const ExtElem& e, long k) {
    if (!e.ctx) throw Error("from_int_like of a contextless extension element");
    return ExtElem{e.ctx, YPoly::constant(KRatFunc(Rat(k)))};
}
inline ExtElem ext_from_ratfunc(const std::shared_ptr<const LContext>& c, KRatFunc r) {
    return ExtElem{c, YPoly::constant(std::move(r))};
}
inline ExtElem ext_y(const std::shared_ptr<const LContext>& c) {
    return ExtElem{c, YPoly::monomial(KRatFunc(Rat(1)), 1)};
}
inline std::string to_string(const ExtElem& e) { return to_string(e.rep, "y"); }

// --- interpolation construction ---------------------------------------------

// P(t,x) = (1-t) P0(x) + t P1(x); monic in x when P0, P1 are monic of equal
// degree.
inline BivarPoly interpolation_construct(const Poly<Rat>& P0, const Poly<Rat>& P1) {
    if (P0.degree() != P1.degree()) throw Error("interpolation inputs must have equal degree");
    if (P0.degree() < 1) throw Error("interpolation inputs must be non-constant");
    if (!(P0.lc() == Rat(1)) || !(P1.lc() == Rat(1))) throw Error("interpolation inputs must be monic");
    BivarPoly out;
    for (int k = 0; k <= P0.degree(); ++k) {
        // (1-t) a + t b = a + (b-a) t
        Rat a = P0.coeff(k), b = P1.coeff(k);
        out.c.push_back(Poly<Rat>(std::vector<Rat>{a, b - a}));
    }
    out.trim();
    return out;
}

inline Poly<Rat> eval_at_t(const BivarPoly& P, const Rat& tau) {
    std::vector<Rat> c;
    c.reserve(P.c.size());
    for (const auto& coeff : P.c) c.push_back(coeff.eval(tau));
    return Poly<Rat>(std::move(c));
}

inline YPoly to_x_poly_over_ratfunc(const BivarPoly& P) {
    std::vector<KRatFunc> c;
    c.reserve(P.c.size());
    for (const auto& coeff : P.c) c.push_back(KRatFunc(coeff));
    return YPoly(std::move(c));
}

// substitute x -> x + s(t)
inline BivarPoly shift_x(const BivarPoly& P, const Poly<Rat>& s) {
    BivarPoly x_plus_s;
    x_plus_s.c = {s, Poly<Rat>::constant(Rat(1))};
    x_plus_s.trim();
    BivarPoly acc;
    for (std::size_t i = P.c.size(); i-- > 0;)
        acc = acc * x_plus_s + BivarPoly::constant(P.c[i]);
    return acc;
}

// --- Hensel lifting ----------------------------------------------------------

struct SeriesRoot {
    TruncSeries<Rat> root;
    int order = 0;
};

// Newton iteration from a simple root of P(0,x), doubling precision until
// the requested absolute order.
inline SeriesRoot hensel_lift(const BivarPoly& P, const Rat& r0, int order) {
    if (order < 1) throw Error("hensel_lift needs order >= 1");
    Poly<Rat> p0 = eval_at_t(P, Rat(0));
    if (!p0.eval(r0).is_zero()) throw Error("hensel_lift: r0 is not a root of P(0,x)");
    if (p0.derivative().eval(r0).is_zero())
        throw Error("hensel_lift: root is not simple (derivative vanishes at t = 0)");
    BivarPoly Px;
    for (std::size_t i = 1; i < P.c.size(); ++i) Px.c.push_back(P.c[i].scaled(Rat(static_cast<long>(i))));
    Px.trim();

    Poly<Rat> cur = Poly<Rat>::constant(r0); // known part, exact
    int m = 1;
    while (m < order) {
        int m2 = std::min(2 * m, order);
        auto embed = [m2](const Poly<Rat>& c) { return TruncSeries<Rat>::from_poly(c, m2); };
        TruncSeries<Rat> r = TruncSeries<Rat>::from_poly(cur, m2);
        TruncSeries<Rat> val = P.eval_mapped(r, embed);
        TruncSeries<Rat> slope = Px.eval_mapped(r, embed);
        TruncSeries<Rat> next = r - val * slope.invert();
        cur = next.truncated(m2).poly_part();
        m = m2;
    }
    SeriesRoot out;
    out.root = TruncSeries<Rat>::from_poly(cur, order);
    out.order = order;
    // residual check: P(r) must vanish to the working order
    auto embed = [order](const Poly<Rat>& c) { return TruncSeries<Rat>::from_poly(c, order); };
    TruncSeries<Rat> residual = P.eval_mapped(out.root, embed);
    if (!residual.is_zero_to_order())
        throw Error("hensel_lift: residual valuation below the requested order");
    return out;
}

// --- cubic S_3 certificate ---------------------------------------------------

namespace detail {

// Monic-root bound argument in k[t]: a k(t)-root of a monic cubic with k[t]
// coefficients lies in k[t], its degree is bounded by the coefficient
// degrees, and its values at sample points are rational roots of the
// specialized cubics. Candidates come from Lagrange interpolation.
inline std::optional<Poly<Rat>> cubic_polynomial_root(const BivarPoly& P) {
    auto degt = [](const Poly<Rat>& p) { return p.degree(); };
    int d2 = P.c.size() > 2 ? degt(P.c[2]) : -1;
    int d1 = P.c.size() > 1 ? degt(P.c[1]) : -1;
    int d0 = degt(P.c[0]);
    if (P.c[0].is_zero()) return Poly<Rat>{}; // x = 0
    int bound = 0;
    bound = std::max(bound, d2);
    if (d1 >= 0) bound = std::max(bound, d1 / 2);
    if (d0 >= 0) bound = std::max(bound, d0 / 3);
    // sample points 0, 1, -1, 2, -2, ...
    std::vector<Rat> taus;
    for (int k = 0; static_cast<int>(taus.size()) < bound + 1; ++k) {
        long v = (k % 2 == 0) ? k / 2 : -(k / 2 + 1);
        taus.emplace_back(v);
    }
    std::vector<std::vector<Rat>> root_sets;
    std::size_t combos = 1;
    for (const Rat& tau : taus) {
        auto rs = rational_roots(eval_at_t(P, tau));
        if (rs.empty()) return std::nullopt; // no k[t]-root can exist
        root_sets.push_back(rs);
        combos *= rs.size();
        if (combos > 4096) throw Inconclusive("cubic root search: too many interpolation candidates");
    }
    // Lagrange interpolation for every choice tuple, verified exactly
    std::vector<std::size_t> pick(root_sets.size(), 0);
    for (;;) {
        Poly<Rat> cand;
        for (std::size_t i = 0; i < taus.size(); ++i) {
            Poly<Rat> li = Poly<Rat>::constant(Rat(1));
            Rat denom(1);
            for (std::size_t j = 0; j < taus.size(); ++j) {
                if (i == j) continue;
                li = li * Poly<Rat>(std::vector<Rat>{-taus[j], Rat(1)});
                denom *= taus[i] - taus[j];
            }
            cand = cand + li.scaled(root_sets[i][pick[i]] / denom);
        }
        // exact verification of P(t, cand(t)) = 0
        BivarPoly acc;
        for (std::size_t i = P.c.size(); i-- > 0;) {
            BivarPoly candconst;
            candconst.c = {cand};
            candconst.trim();
            acc = acc * candconst + BivarPoly::constant(P.c[i]);
        }
        if (acc.is_zero()) return cand;
        std::size_t pos = 0;
        while (pos < pick.size() && pick[pos] + 1 == root_sets[pos].size()) {
            pick[pos] = 0;
            ++pos;
        }
        if (pos == pick.size()) break;
        ++pick[pos];
    }
    return std::nullopt;
}

} // namespace detail

struct S3Certificate {
    bool certified = false;
    bool irreducible = false;
    bool disc_nonsquare = false;
    RatFunc<Rat> disc;             // disc in k(t) (a polynomial in t here)
    std::optional<Poly<Rat>> root; // k[t]-root witness when reducible
};

// Degree-3 criterion: Galois group S_3 over k(t) iff the cubic has no root
// in k(t) and its discriminant is not a square in k(t).
inline S3Certificate certify_s3(const BivarPoly& P) {
    if (P.degree() != 3) throw Error("certify_s3 expects a cubic in x");
    if (!(P.lc() == Poly<Rat>::constant(Rat(1)))) throw Error("certify_s3 expects a monic cubic");
    S3Certificate cert;
    YPoly f = to_x_poly_over_ratfunc(P);
    cert.disc = discriminant(f);
    if (cert.disc.is_zero()) throw Error("certify_s3: cubic is not separable");
    cert.root = detail::cubic_polynomial_root(P);
    cert.irreducible = !cert.root.has_value();
    // disc lies in k[t]; square in k(t) iff square in k[t]
    if (!(cert.disc.den == Poly<Rat>::constant(Rat(1))))
        throw Error("certify_s3: discriminant unexpectedly not polynomial");
    cert.disc_nonsquare = !poly_sqrt(cert.disc.num).has_value();
    cert.certified = cert.irreducible && cert.disc_nonsquare;
    return cert;
}

} // namespace skewgal
