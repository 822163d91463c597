#pragma once

// Shared generators and independent oracles for the test suites. Oracles here
// must stay independent of the library code paths they check.

#include <random>
#include <vector>

#include "skewgal/polynomial.hpp"
#include "skewgal/ratfunc.hpp"
#include "skewgal/rational.hpp"
#include "skewgal/series.hpp"

namespace testutil {

using skewgal::Poly;
using skewgal::Rat;
using skewgal::RatFunc;
using skewgal::TruncSeries;

using Rng = std::mt19937_64;

inline long rand_int(Rng& rng, long lo, long hi) {
    return lo + static_cast<long>(rng() % static_cast<unsigned long>(hi - lo + 1));
}

inline Rat rand_rat(Rng& rng, long num_bound = 9, long den_bound = 5) {
    return Rat(rand_int(rng, -num_bound, num_bound), rand_int(rng, 1, den_bound));
}

inline Rat rand_rat_nonzero(Rng& rng, long num_bound = 9, long den_bound = 5) {
    for (;;) {
        Rat r = rand_rat(rng, num_bound, den_bound);
        if (!r.is_zero()) return r;
    }
}

inline Poly<Rat> rand_poly(Rng& rng, int max_deg = 3, long bound = 5) {
    std::vector<Rat> c;
    int d = static_cast<int>(rand_int(rng, 0, max_deg));
    for (int i = 0; i <= d; ++i) c.push_back(Rat(rand_int(rng, -bound, bound)));
    return Poly<Rat>(std::move(c));
}

inline Poly<Rat> rand_poly_nonzero(Rng& rng, int max_deg = 3, long bound = 5) {
    for (;;) {
        auto p = rand_poly(rng, max_deg, bound);
        if (!p.is_zero()) return p;
    }
}

inline RatFunc<Rat> rand_ratfunc(Rng& rng, int max_deg = 2, long bound = 4) {
    return RatFunc<Rat>(rand_poly(rng, max_deg, bound), rand_poly_nonzero(rng, max_deg, bound));
}

inline RatFunc<Rat> rand_ratfunc_nonzero(Rng& rng, int max_deg = 2, long bound = 4) {
    for (;;) {
        auto r = rand_ratfunc(rng, max_deg, bound);
        if (!r.is_zero()) return r;
    }
}

inline TruncSeries<Rat> rand_series(Rng& rng, int order, int max_val = 3) {
    int val = static_cast<int>(rand_int(rng, -max_val, max_val));
    std::vector<Rat> c;
    for (int k = val; k < order; ++k) c.push_back(Rat(rand_int(rng, -4, 4)));
    return TruncSeries<Rat>(val, std::move(c), order);
}

// --- independent oracles ------------------------------------------------

// Discriminant of a cubic a3 x^3 + a2 x^2 + a1 x + a0 by the textbook
// closed form; used against the resultant-based route.
template <class F>
F cubic_disc_formula(const Poly<F>& p) {
    F a = p.coeff(3), b = p.coeff(2), c = p.coeff(1), d = p.coeff(0);
    F n18 = skewgal::from_int_like(a, 18), n4 = skewgal::from_int_like(a, 4),
      n27 = skewgal::from_int_like(a, 27);
    return n18 * a * b * c * d - n4 * b * b * b * d + b * b * c * c - n4 * a * c * c * c -
           n27 * a * a * d * d;
}

// Power-series root of P(t,x) from a simple root r0 of P(0,x), solved one
// coefficient at a time by substitution; independent of Newton lifting.
// P is given x-major with k[t] coefficients.
inline TruncSeries<Rat> substitution_root_oracle(const Poly<Poly<Rat>>& P, const Rat& r0, int order) {
    auto embed = [order](const Poly<Rat>& coeff_t) {
        return TruncSeries<Rat>::from_poly(coeff_t, order);
    };
    // dP/dx at (0, r0)
    Poly<Poly<Rat>> dPdx;
    for (std::size_t i = 1; i < P.c.size(); ++i)
        dPdx.c.push_back(P.c[i].scaled(Rat(static_cast<long>(i))));
    dPdx.trim();
    Rat slope{};
    {
        Rat acc{};
        for (std::size_t i = dPdx.c.size(); i-- > 0;) acc = acc * r0 + dPdx.c[i].coeff(0);
        slope = acc;
    }
    if (slope.is_zero()) throw skewgal::Error("oracle: root is not simple");

    std::vector<Rat> coeffs{r0};
    for (int m = 1; m < order; ++m) {
        // evaluate P at the current truncation, read the t^m coefficient
        TruncSeries<Rat> r(0, coeffs, m + 1);
        TruncSeries<Rat> value = TruncSeries<Rat>::zero_to(m + 1);
        for (std::size_t i = P.c.size(); i-- > 0;)
            value = value * r + embed(P.c[i]).truncated(m + 1);
        Rat cm = value.coeff(m);
        coeffs.push_back(-(cm / slope));
    }
    return TruncSeries<Rat>(0, coeffs, order);
}

// binomial series (1+t)^{1/2} coefficients: C(1/2, n)
inline TruncSeries<Rat> sqrt_one_plus_t_oracle(int order) {
    std::vector<Rat> c;
    Rat coeff(1);
    c.push_back(coeff);
    Rat half(1, 2);
    for (int n = 1; n < order; ++n) {
        // C(1/2, n) = C(1/2, n-1) * (1/2 - (n-1)) / n
        coeff = coeff * (half - Rat(n - 1)) / Rat(n);
        c.push_back(coeff);
    }
    return TruncSeries<Rat>(0, c, order);
}

} // namespace testutil
