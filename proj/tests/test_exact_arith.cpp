#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "skewgal/polynomial.hpp"
#include "skewgal/ratfunc.hpp"
#include "skewgal/rational.hpp"
#include "skewgal/series.hpp"

#include "test_util.hpp"

using namespace skewgal;
using testutil::Rng;

namespace {

Poly<Rat> P(std::initializer_list<long> coeffs) {
    std::vector<Rat> c;
    for (long x : coeffs) c.emplace_back(x);
    return Poly<Rat>(std::move(c));
}

} // namespace

TEST_CASE("rat: canonical form and arithmetic") {
    Rat a(2, 4);
    CHECK(a.num() == 1);
    CHECK(a.den() == 2);
    Rat b(-3, -6);
    CHECK(b.num() == 1);
    CHECK(b.den() == 2);
    CHECK(a == b);
    CHECK((Rat(1, 3) + Rat(1, 6)) == Rat(1, 2));
    CHECK((Rat(2, 3) * Rat(3, 2)) == Rat(1));
    CHECK_THROWS_AS(Rat(1) / Rat(0), Error);
    CHECK_THROWS_AS(Rat(1, 0), Error);
    CHECK(Rat::from_string("-7/21") == Rat(-1, 3));
    CHECK_THROWS_AS(Rat::from_string("1.5"), Error);
    CHECK(to_string(Rat(-5, 10)) == "-1/2");
}

TEST_CASE("rat: exact square root detection") {
    CHECK(*rat_sqrt(Rat(9, 4)) == Rat(3, 2));
    CHECK(!rat_sqrt(Rat(2)).has_value());
    CHECK(!rat_sqrt(Rat(-4)).has_value());
    CHECK(*rat_sqrt(Rat(0)) == Rat(0));
}

TEST_CASE("rat: field axioms on random values") {
    Rng rng(101);
    for (int it = 0; it < 200; ++it) {
        Rat x = testutil::rand_rat(rng), y = testutil::rand_rat(rng), z = testutil::rand_rat(rng);
        CHECK((x + y) + z == x + (y + z));
        CHECK((x * y) * z == x * (y * z));
        CHECK(x * (y + z) == x * y + x * z);
        CHECK(x + y == y + x);
        CHECK(x * y == y * x);
    }
}

TEST_CASE("poly: gcd examples") {
    // gcd(x^2-1, x-1) = x-1
    CHECK(gcd_poly(P({-1, 0, 1}), P({-1, 1})) == P({-1, 1}));
    // gcd(x, 1) = 1
    CHECK(gcd_poly(P({0, 1}), P({1})) == P({1}));
    // both zero -> zero
    CHECK(gcd_poly(Poly<Rat>{}, Poly<Rat>{}).is_zero());
    // one zero -> monic other
    CHECK(gcd_poly(P({0, 2}), Poly<Rat>{}) == P({0, 1}));
}

TEST_CASE("poly: gcd of x^3 - x - t and derivative over Q(t) is 1") {
    // run Euclid by hand: x^3 - x - t = (x/3)(3x^2 - 1) + (-2x/3 - t),
    // then 3x^2 - 1 mod (-2x/3 - t) is a nonzero constant, so the gcd is 1.
    using RF = RatFunc<Rat>;
    auto rf = [](long v) { return RF(Rat(v)); };
    RF t = RF::t();
    Poly<RF> f(std::vector<RF>{-t, rf(-1), rf(0), rf(1)});
    Poly<RF> fp(std::vector<RF>{rf(-1), rf(0), rf(3)});
    auto g = gcd_poly(f, fp);
    CHECK(g.degree() == 0);
    CHECK(g == one_like(f));
}

TEST_CASE("poly: divmod invariants on random inputs") {
    Rng rng(7);
    for (int it = 0; it < 100; ++it) {
        auto f = testutil::rand_poly(rng, 5);
        auto g = testutil::rand_poly_nonzero(rng, 3);
        auto [q, r] = divmod(f, g);
        CHECK(q * g + r == f);
        CHECK(r.degree() < g.degree());
    }
}

TEST_CASE("poly: ring axioms on random inputs") {
    Rng rng(13);
    for (int it = 0; it < 100; ++it) {
        auto a = testutil::rand_poly(rng), b = testutil::rand_poly(rng), c = testutil::rand_poly(rng);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == b * a);
    }
}

TEST_CASE("poly: resultant against cubic discriminant formula") {
    Rng rng(17);
    for (int it = 0; it < 50; ++it) {
        Poly<Rat> p;
        do {
            p = testutil::rand_poly(rng, 3);
        } while (p.degree() != 3);
        if (gcd_poly(p, p.derivative()).degree() > 0) continue; // disc 0 both ways
        CHECK(discriminant(p) == testutil::cubic_disc_formula(p));
    }
    // pinned instance: disc(x^3 - x - t) = 4 - 27 t^2 over Q(t)
    using RF = RatFunc<Rat>;
    Poly<RF> f(std::vector<RF>{-RF::t(), RF(Rat(-1)), RF(Rat(0)), RF(Rat(1))});
    RF d = discriminant(f);
    RF expected = RF(Rat(4)) - RF(Rat(27)) * RF::t() * RF::t();
    CHECK(d == expected);
}

TEST_CASE("poly: exact square root attempt") {
    auto sq = P({1, -2, 3}) * P({1, -2, 3});
    auto r = poly_sqrt(sq);
    REQUIRE(r.has_value());
    CHECK((*r) * (*r) == sq);
    CHECK(!poly_sqrt(P({0, 1})).has_value());       // t
    CHECK(!poly_sqrt(P({4, 0, 0, 0, 3})).has_value());
    CHECK(poly_sqrt(P({4})).value() == P({2}));
    // leading coefficient not a rational square
    CHECK(!poly_sqrt(P({0, 0, 2})).has_value());
}

TEST_CASE("ratfunc: normalization examples") {
    using RF = RatFunc<Rat>;
    // (t^2 + t)/t = t + 1
    RF a(P({0, 1, 1}), P({0, 1}));
    CHECK(a.num == P({1, 1}));
    CHECK(a.den == P({1}));
    // (0, t^5) -> 0/1
    RF b(Poly<Rat>{}, P({0, 0, 0, 0, 0, 1}));
    CHECK(b.is_zero());
    CHECK(b.den == P({1}));
    // (2t, 2) -> t/1
    RF c(P({0, 2}), P({2}));
    CHECK(c.num == P({0, 1}));
    CHECK(c.den == P({1}));
    CHECK_THROWS_AS(RF(P({1}), Poly<Rat>{}), Error);
}

TEST_CASE("ratfunc: normalization is idempotent and representative-independent") {
    Rng rng(23);
    for (int it = 0; it < 100; ++it) {
        auto n = testutil::rand_poly(rng);
        auto d = testutil::rand_poly_nonzero(rng);
        RatFunc<Rat> x(n, d);
        RatFunc<Rat> renorm(x.num, x.den);
        CHECK(renorm == x);
        auto c = testutil::rand_poly_nonzero(rng, 2);
        RatFunc<Rat> y(n * c, d * c);
        CHECK(y == x);
        auto s = testutil::rand_rat_nonzero(rng);
        RatFunc<Rat> z(n.scaled(s), d.scaled(s));
        CHECK(z == x);
    }
}

TEST_CASE("ratfunc: field axioms on random values") {
    Rng rng(29);
    for (int it = 0; it < 60; ++it) {
        auto x = testutil::rand_ratfunc(rng), y = testutil::rand_ratfunc(rng), z = testutil::rand_ratfunc(rng);
        CHECK((x + y) + z == x + (y + z));
        CHECK((x * y) * z == x * (y * z));
        CHECK(x * (y + z) == x * y + x * z);
        CHECK(x * y == y * x);
        if (!x.is_zero()) CHECK(x * x.inverse() == one_like(x));
    }
}

TEST_CASE("series: inversion examples") {
    using TS = TruncSeries<Rat>;
    // invert(1+t) to order 4 = 1 - t + t^2 - t^3
    TS a = TS::from_poly(P({1, 1}), 4);
    TS inv = a.invert();
    CHECK(inv == TS(0, {Rat(1), Rat(-1), Rat(1), Rat(-1)}, 4));
    // invert(1+t^2) to order 6 = 1 - t^2 + t^4; checked by multiplying back
    TS b = TS::from_poly(P({1, 0, 1}), 6);
    TS binv = b.invert();
    CHECK(binv == TS(0, {Rat(1), Rat(0), Rat(-1), Rat(0), Rat(1), Rat(0)}, 6));
    TS prod = b * binv;
    CHECK(prod == TS(0, {Rat(1)}, 6));
    // inverting an unknown-zero series fails
    CHECK_THROWS_AS(TS::zero_to(5).invert(), Error);
}

TEST_CASE("series: valuation additivity and precision bookkeeping") {
    Rng rng(31);
    for (int it = 0; it < 100; ++it) {
        auto a = testutil::rand_series(rng, 8);
        auto b = testutil::rand_series(rng, 8);
        if (a.is_zero_to_order() || b.is_zero_to_order()) continue;
        auto p = a * b;
        CHECK(p.order == std::min(a.val + b.order, b.val + a.order));
        if (!p.is_zero_to_order()) CHECK(p.val == a.val + b.val);
        // a * a^{-1} = 1 up to the resulting precision
        auto inv = a.invert();
        auto one = a * inv;
        CHECK(one.val == 0);
        CHECK(one.coeff(0) == Rat(1));
        for (int k = 1; k < one.order; ++k) CHECK(one.coeff(k) == Rat(0));
    }
}

TEST_CASE("series: ring axioms at matched precision") {
    Rng rng(37);
    for (int it = 0; it < 80; ++it) {
        auto a = testutil::rand_series(rng, 7, 2);
        auto b = testutil::rand_series(rng, 7, 2);
        auto c = testutil::rand_series(rng, 7, 2);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a + b == b + a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * b == b * a);
        // distributivity requires comparing at the common precision
        auto lhs = a * (b + c);
        auto rhs = a * b + a * c;
        auto l2 = lhs.truncated(std::min(lhs.order, rhs.order));
        auto r2 = rhs.truncated(std::min(lhs.order, rhs.order));
        CHECK(l2 == r2);
    }
}

TEST_CASE("series: eval at zero of a valuation-0 series is its constant term") {
    using TS = TruncSeries<Rat>;
    TS s(0, {Rat(7), Rat(3)}, 4);
    CHECK(s.eval_at_zero() == Rat(7));
    TS shifted(2, {Rat(5)}, 4);
    CHECK(shifted.eval_at_zero() == Rat(0));
    TS pole(-1, {Rat(5)}, 4);
    CHECK_THROWS_AS(pole.eval_at_zero(), Error);
}

TEST_CASE("series: printing") {
    TruncSeries<Rat> s(1, {Rat(-1), Rat(0), Rat(-1), Rat(0), Rat(-3)}, 6);
    CHECK(to_string(s) == "-t - t^3 - 3*t^5 + O(t^6)");
}
