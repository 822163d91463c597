#pragma once

// Rational root finding and the small irreducibility tests over Q used by
// center-is-field decisions and cubic certification. Degrees <= 4 are decided
// exactly (rational roots + quadratic-split resolvent); higher degrees fall
// back to irreducibility witnesses mod p and otherwise report inconclusive.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <vector>

#include "skewgal/polynomial.hpp"

namespace skewgal {

namespace detail {

// All divisors of |n| (positive), by trial division. Throws Inconclusive
// instead of stalling on huge inputs.
inline std::vector<mpz_class> positive_divisors(mpz_class n) {
    n = abs(n);
    if (n == 0) throw Error("divisors of zero requested");
    std::vector<mpz_class> small, large;
    mpz_class d = 1;
    unsigned long steps = 0;
    while (d * d <= n) {
        if (++steps > 20'000'000UL)
            throw Inconclusive("divisor enumeration beyond trial-division budget");
        if (n % d == 0) {
            small.push_back(d);
            if (d * d != n) large.push_back(n / d);
        }
        ++d;
    }
    for (auto it = large.rbegin(); it != large.rend(); ++it) small.push_back(*it);
    return small;
}

} // namespace detail

// Exact set of rational roots of a nonzero p in Q[x], each returned once.
inline std::vector<Rat> rational_roots(const Poly<Rat>& p) {
    if (p.is_zero()) throw Error("rational roots of the zero polynomial");
    std::vector<Rat> roots;
    Poly<Rat> f = p;
    // factor out x^v
    int v = 0;
    while (f.coeff(v).is_zero()) ++v;
    if (v > 0) {
        roots.push_back(Rat(0));
        std::vector<Rat> c(f.c.begin() + v, f.c.end());
        f = Poly<Rat>(std::move(c));
    }
    if (f.degree() < 1) return roots;
    // clear denominators to integer coefficients
    mpz_class lcm = 1;
    for (const auto& ck : f.c) lcm = lcm * ck.den() / gcd(lcm, ck.den());
    std::vector<mpz_class> ic;
    for (const auto& ck : f.c) ic.push_back(ck.num() * (lcm / ck.den()));
    // monic substitution y = lead * x: integer roots of the monicized
    // polynomial are lead * (rational roots of f)
    mpz_class lead = ic.back();
    mpz_class c0 = ic.front(); // nonzero after the x^v strip
    // integer root y0 of the monicized polynomial divides lead^{n-1} c0;
    // equivalently candidates x = p/q with p | c0 and q | lead
    auto ps = detail::positive_divisors(c0);
    auto qs = detail::positive_divisors(lead);
    for (const auto& pp : ps)
        for (const auto& qq : qs) {
            for (int sign = 0; sign < 2; ++sign) {
                Rat cand(sign == 0 ? pp : -pp, qq);
                if (f.eval(cand).is_zero()) {
                    if (std::find(roots.begin(), roots.end(), cand) == roots.end())
                        roots.push_back(cand);
                }
            }
        }
    return roots;
}

namespace detail {

// q must be monic with integer coefficients. Distinct-degree style test:
// irreducible over F_p iff x^{p^n} == x mod q and gcd(x^{p^{n/r}} - x, q) = 1
// for every prime r | n. A positive answer certifies irreducibility over Q.
inline bool irreducible_mod_p(const Poly<Rat>& q, std::uint64_t p) {
    int n = q.degree();
    std::vector<std::uint64_t> mod(q.c.size());
    for (std::size_t i = 0; i < q.c.size(); ++i) {
        mpz_class r = q.c[i].num() % static_cast<long>(p);
        if (r < 0) r += static_cast<long>(p);
        mod[i] = r.get_ui();
    }
    if (mod.back() % p == 0) return false;

    using PolyP = std::vector<std::uint64_t>; // low first, trimmed
    auto trim = [](PolyP& a) { while (!a.empty() && a.back() == 0) a.pop_back(); };
    auto mulmod = [&](const PolyP& a, const PolyP& b) {
        if (a.empty() || b.empty()) return PolyP{};
        PolyP r(a.size() + b.size() - 1, 0);
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (a[i] == 0) continue;
            for (std::size_t j = 0; j < b.size(); ++j)
                r[i + j] = (r[i + j] + static_cast<__uint128_t>(a[i]) * b[j]) % p;
        }
        // reduce mod q (monic mod p after scaling)
        std::uint64_t inv_lead = 1;
        {
            // Fermat inverse of mod.back()
            std::uint64_t base = mod.back() % p, e = p - 2, acc = 1;
            while (e) {
                if (e & 1) acc = static_cast<__uint128_t>(acc) * base % p;
                base = static_cast<__uint128_t>(base) * base % p;
                e >>= 1;
            }
            inv_lead = acc;
        }
        while (r.size() > static_cast<std::size_t>(n)) {
            std::uint64_t c = static_cast<__uint128_t>(r.back()) * inv_lead % p;
            std::size_t off = r.size() - mod.size();
            for (std::size_t i = 0; i < mod.size(); ++i) {
                std::uint64_t sub = static_cast<__uint128_t>(c) * mod[i] % p;
                r[off + i] = (r[off + i] + p - sub) % p;
            }
            trim(r);
            if (r.empty()) break;
        }
        trim(r);
        return r;
    };
    auto powx = [&](mpz_class e) {
        PolyP acc{1};            // 1
        PolyP base{0, 1};        // x
        while (e > 0) {
            if (mpz_odd_p(e.get_mpz_t())) acc = mulmod(acc, base);
            base = mulmod(base, base);
            e >>= 1;
        }
        return acc;
    };
    auto gcdp = [&](PolyP a, PolyP b) {
        auto inv = [&](std::uint64_t x) {
            std::uint64_t e = p - 2, acc = 1;
            while (e) {
                if (e & 1) acc = static_cast<__uint128_t>(acc) * x % p;
                x = static_cast<__uint128_t>(x) * x % p;
                e >>= 1;
            }
            return acc;
        };
        while (!b.empty()) {
            // a mod b
            std::uint64_t il = inv(b.back());
            PolyP r = a;
            while (r.size() >= b.size() && !r.empty()) {
                std::uint64_t c = static_cast<__uint128_t>(r.back()) * il % p;
                std::size_t off = r.size() - b.size();
                for (std::size_t i = 0; i < b.size(); ++i) {
                    std::uint64_t sub = static_cast<__uint128_t>(c) * b[i] % p;
                    r[off + i] = (r[off + i] + p - sub) % p;
                }
                trim(r);
            }
            a = std::move(b);
            b = std::move(r);
        }
        return a;
    };

    mpz_class pn = 1;
    for (int i = 0; i < n; ++i) pn *= static_cast<long>(p);
    PolyP frob = powx(pn);
    // x^{p^n} - x must reduce to 0
    PolyP diff = frob;
    if (diff.size() < 2) diff.resize(2, 0);
    diff[1] = (diff[1] + p - 1) % p;
    trim(diff);
    if (!diff.empty()) return false;
    // proper subfield checks
    for (int r = 2; r <= n; ++r) {
        if (n % r != 0) continue;
        bool prime = true;
        for (int d = 2; d * d <= r; ++d)
            if (r % d == 0) prime = false;
        if (!prime) continue;
        mpz_class e = 1;
        for (int i = 0; i < n / r; ++i) e *= static_cast<long>(p);
        PolyP fr = powx(e);
        if (fr.size() < 2) fr.resize(2, 0);
        fr[1] = (fr[1] + p - 1) % p;
        trim(fr);
        PolyP g = gcdp(fr, mod);
        if (g.size() != 1) return false;
    }
    return true;
}

} // namespace detail

// Does the monic quartic split into two rational monic quadratics?
// Resolvent-cubic route: a rational root z of the resolvent gives candidate
// quadratic factors whose coefficients must be rational and consistent.
inline bool quartic_has_quadratic_split(const Poly<Rat>& f) {
    Rat b = f.coeff(3), c = f.coeff(2), d = f.coeff(1), e = f.coeff(0);
    // resolvent cubic with roots r_i r_j + r_k r_l
    Poly<Rat> res(std::vector<Rat>{-(b * b * e - Rat(4) * c * e + d * d),
                                   b * d - Rat(4) * e, -c, Rat(1)});
    for (const Rat& z : rational_roots(res)) {
        // q + s = z, q s = e ; p + r = b, p r = c - z ; f = (x^2+px+q)(x^2+rx+s)
        auto qs_disc = rat_sqrt(z * z - Rat(4) * e);
        auto pr_disc = rat_sqrt(b * b - Rat(4) * (c - z));
        if (!qs_disc || !pr_disc) continue;
        Rat q = (z + *qs_disc) / Rat(2), s = (z - *qs_disc) / Rat(2);
        Rat pp = (b + *pr_disc) / Rat(2), rr = (b - *pr_disc) / Rat(2);
        // cross-coefficient check, both pairings
        if (pp * s + q * rr == d || pp * q + s * rr == d) {
            Poly<Rat> g(std::vector<Rat>{q, pp, Rat(1)});
            Poly<Rat> h(std::vector<Rat>{s, rr, Rat(1)});
            if (g * h == f) return true;
            Poly<Rat> g2(std::vector<Rat>{s, pp, Rat(1)});
            Poly<Rat> h2(std::vector<Rat>{q, rr, Rat(1)});
            if (g2 * h2 == f) return true;
        }
    }
    return false;
}

// Irreducibility over Q. Exact through degree 4; degree >= 5 certified by a
// mod-p witness when one exists, otherwise Inconclusive.
inline bool is_irreducible_q(const Poly<Rat>& p) {
    int n = p.degree();
    if (n <= 0) throw Error("irreducibility of a constant polynomial");
    if (n == 1) return true;
    if (!rational_roots(p).empty()) return false;
    if (n <= 3) return true;
    Poly<Rat> f = p.monic();
    if (n == 4) return !quartic_has_quadratic_split(f);
    // clear to a monic integer model: g(y) = lead^{n-1} f(y/lead)
    mpz_class lcm = 1;
    for (const auto& ck : f.c) lcm = lcm * ck.den() / gcd(lcm, ck.den());
    std::vector<Rat> scaled;
    Rat l(lcm, mpz_class(1));
    for (int k = 0; k <= n; ++k) scaled.push_back(f.coeff(k) * pow_field(l, n - k));
    Poly<Rat> g(std::move(scaled)); // monic, integer coefficients
    for (std::uint64_t q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL})
        if (detail::irreducible_mod_p(g, q)) return true;
    throw Inconclusive("no irreducibility witness mod small primes; degree > 4 factor search unsupported");
}

} // namespace skewgal
