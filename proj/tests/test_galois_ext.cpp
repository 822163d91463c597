#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "skewgal/galois_ext.hpp"

#include "test_util.hpp"

using namespace skewgal;
using testutil::Rng;

namespace {

Poly<Rat> tpoly(std::initializer_list<long> c) {
    std::vector<Rat> v;
    for (long x : c) v.emplace_back(x);
    return Poly<Rat>(std::move(v));
}

YPoly ypoly(std::initializer_list<Poly<Rat>> coeffs) {
    std::vector<KRatFunc> v;
    for (const auto& p : coeffs) v.emplace_back(p);
    return YPoly(std::move(v));
}

// y^2 - (1+t) with automorphisms {y, -y}
ExtensionPresentation quadratic_fixture() {
    ExtensionPresentation E;
    E.name = "quad";
    E.min_poly = ypoly({tpoly({-1, -1}), tpoly({}), tpoly({1})});
    E.automorphisms.push_back({ypoly({tpoly({}), tpoly({1})})});
    E.automorphisms.push_back({ypoly({tpoly({}), tpoly({-1})})});
    return E;
}

// Shanks' simplest cubic y^3 - a y^2 - (a+3) y - 1 with a = t - 3/2, chosen
// so that the t = 0 specialization splits over Q. The cyclic symmetry
// y -> -1/(y+1) gives the C_3 automorphisms:
//   sigma(y)  = y^2 - (a+1) y - 2
//   sigma2(y) = -y^2 + a y + a + 2
ExtensionPresentation cubic_fixture() {
    ExtensionPresentation E;
    E.name = "cubic";
    Poly<Rat> a(std::vector<Rat>{Rat(-3, 2), Rat(1)});
    Poly<Rat> one = tpoly({1});
    E.min_poly = ypoly({tpoly({-1}), -(a + tpoly({3})), -a, one});
    E.automorphisms.push_back({ypoly({tpoly({}), one})});
    E.automorphisms.push_back({ypoly({tpoly({-2}), -(a + one), one})});
    E.automorphisms.push_back({ypoly({a + tpoly({2}), a, -one})});
    return E;
}

ExtensionPresentation trivial_fixture() {
    ExtensionPresentation E;
    E.name = "trivial";
    E.min_poly = ypoly({tpoly({}), tpoly({1})}); // y
    E.automorphisms.push_back({ypoly({tpoly({}), tpoly({1})})});
    return E;
}

} // namespace

TEST_CASE("verify_galois_presentation: quadratic fixture passes") {
    CHECK(verify_galois_presentation(quadratic_fixture()).ok);
    CHECK(verify_galois_presentation(trivial_fixture()).ok);
}

TEST_CASE("verify_galois_presentation: cubic fixture passes") {
    auto E = cubic_fixture();
    auto v = verify_galois_presentation(E);
    INFO(v.witness);
    CHECK(v.ok);
}

TEST_CASE("verify_galois_presentation: mutations are rejected with witnesses") {
    // cardinality: {y} only under y^2 - (1+t)
    auto E = quadratic_fixture();
    E.automorphisms.pop_back();
    auto v1 = verify_galois_presentation(E);
    CHECK(!v1.ok);
    // y^3 - 2 with only {y}: not enough automorphisms, and no linear image
    // can repair it (that would need a cube root of unity in Q(t))
    ExtensionPresentation C;
    C.min_poly = ypoly({tpoly({-2}), tpoly({}), tpoly({}), tpoly({1})});
    C.automorphisms.push_back({ypoly({tpoly({}), tpoly({1})})});
    auto v2 = verify_galois_presentation(C);
    CHECK(!v2.ok);
    // adding scaled images y -> c y fails the root test for every c != 1
    C.automorphisms.push_back({ypoly({tpoly({}), tpoly({2})})});
    C.automorphisms.push_back({ypoly({tpoly({}), tpoly({3})})});
    auto v3 = verify_galois_presentation(C);
    CHECK(!v3.ok);
    CHECK(v3.witness.find("not a root") != std::string::npos);
    // a non-root image in the quadratic fixture
    auto E2 = quadratic_fixture();
    E2.automorphisms[1].image = ypoly({tpoly({1}), tpoly({1})}); // y + 1
    CHECK(!verify_galois_presentation(E2).ok);
    // closure violation: order-4 Kummer presentation with a missing element
    ExtensionPresentation K;
    K.min_poly = ypoly({tpoly({0, -1}), tpoly({}), tpoly({}), tpoly({}), tpoly({1})}); // y^4 - t
    K.automorphisms.push_back({ypoly({tpoly({}), tpoly({1})})});
    K.automorphisms.push_back({ypoly({tpoly({}), tpoly({-1})})});
    K.automorphisms.push_back({ypoly({tpoly({}), tpoly({1})})}); // duplicate to hit cardinality
    K.automorphisms.push_back({ypoly({tpoly({}), tpoly({-1})})});
    CHECK(!verify_galois_presentation(K).ok);
}

TEST_CASE("interpolation_construct: pinned and random examples") {
    // (1-t)(x^3-x) + t(x^3-x-1) = x^3 - x - t
    auto P = interpolation_construct(tpoly({0, -1, 0, 1}), tpoly({-1, -1, 0, 1}));
    CHECK(P.degree() == 3);
    CHECK(P.c[0] == tpoly({0, -1}));
    CHECK(P.c[1] == tpoly({-1}));
    CHECK(P.c[2].is_zero());
    CHECK(P.c[3] == tpoly({1}));
    // P0 = P1 gives a t-free polynomial
    auto Q = interpolation_construct(tpoly({-2, 0, 1}), tpoly({-2, 0, 1}));
    for (const auto& c : Q.c) CHECK(c.degree() <= 0);
    // endpoint identities on random monic pairs
    Rng rng(97);
    for (int it = 0; it < 40; ++it) {
        auto a = testutil::rand_poly(rng, 2);
        auto b = testutil::rand_poly(rng, 2);
        std::vector<Rat> ca(a.c), cb(b.c);
        ca.resize(4);
        cb.resize(4);
        ca[3] = Rat(1);
        cb[3] = Rat(1);
        Poly<Rat> P0(ca), P1(cb);
        auto R = interpolation_construct(P0, P1);
        CHECK(eval_at_t(R, Rat(0)) == P0);
        CHECK(eval_at_t(R, Rat(1)) == P1);
    }
    CHECK_THROWS_AS(interpolation_construct(tpoly({0, 1}), tpoly({0, 0, 1})), Error);
    CHECK_THROWS_AS(interpolation_construct(tpoly({0, 2}), tpoly({0, 2})), Error);
}

TEST_CASE("hensel_lift: x^3 - x - t from r0 = 0 against the substitution oracle") {
    auto P = interpolation_construct(tpoly({0, -1, 0, 1}), tpoly({-1, -1, 0, 1}));
    auto lifted = hensel_lift(P, Rat(0), 6);
    // independent order-by-order substitution oracle
    auto oracle = testutil::substitution_root_oracle(P, Rat(0), 6);
    CHECK(lifted.root == oracle);
    // the pinned head: -t - t^3 - 3 t^5 + O(t^6)
    CHECK(to_string(lifted.root) == "-t - t^3 - 3*t^5 + O(t^6)");
    // deeper order still matches the oracle
    auto lifted16 = hensel_lift(P, Rat(0), 16);
    auto oracle16 = testutil::substitution_root_oracle(P, Rat(0), 16);
    CHECK(lifted16.root == oracle16);
}

TEST_CASE("hensel_lift: x^2 - (1+t) from r0 = 1 against the binomial oracle") {
    BivarPoly P;
    P.c = {tpoly({-1, -1}), tpoly({}), tpoly({1})};
    P.trim();
    auto lifted = hensel_lift(P, Rat(1), 3);
    auto oracle = testutil::sqrt_one_plus_t_oracle(3);
    CHECK(lifted.root == oracle);
    CHECK(lifted.root.coeff(1) == Rat(1, 2));
    CHECK(lifted.root.coeff(2) == Rat(-1, 8));
    auto deep = hensel_lift(P, Rat(1), 12);
    CHECK(deep.root == testutil::sqrt_one_plus_t_oracle(12));
}

TEST_CASE("hensel_lift: ramified root is rejected") {
    BivarPoly P; // x^2 - t
    P.c = {tpoly({0, -1}), tpoly({}), tpoly({1})};
    P.trim();
    CHECK_THROWS_AS(hensel_lift(P, Rat(0), 8), Error);
    // and a non-root r0
    auto Q = interpolation_construct(tpoly({0, -1, 0, 1}), tpoly({-1, -1, 0, 1}));
    CHECK_THROWS_AS(hensel_lift(Q, Rat(5), 8), Error);
}

TEST_CASE("hensel_lift: all roots of a split P0 lift and stay distinct") {
    auto P = interpolation_construct(tpoly({0, -1, 0, 1}), tpoly({-1, -1, 0, 1}));
    std::vector<Rat> roots{Rat(0), Rat(1), Rat(-1)};
    std::vector<TruncSeries<Rat>> lifts;
    for (const auto& r0 : roots) {
        auto s = hensel_lift(P, r0, 16);
        CHECK(s.root.coeff(0) == r0);
        lifts.push_back(s.root);
    }
    for (std::size_t i = 0; i < lifts.size(); ++i)
        for (std::size_t j = i + 1; j < lifts.size(); ++j) {
            auto a = lifts[i].truncated(2), b = lifts[j].truncated(2);
            CHECK(a != b);
        }
}

TEST_CASE("certify_s3: x^3 - x - t is certified") {
    auto P = interpolation_construct(tpoly({0, -1, 0, 1}), tpoly({-1, -1, 0, 1}));
    auto cert = certify_s3(P);
    CHECK(cert.certified);
    CHECK(cert.irreducible);
    CHECK(cert.disc_nonsquare);
    // disc = 4 - 27 t^2, via the formula oracle on the x-polynomial
    YPoly f = to_x_poly_over_ratfunc(P);
    CHECK(cert.disc == testutil::cubic_disc_formula(f));
    CHECK(cert.disc.num == tpoly({4, 0, -27}));
}

TEST_CASE("certify_s3: x^3 - t^3 fails with the root witness") {
    BivarPoly P;
    P.c = {tpoly({0, 0, 0, -1}), tpoly({}), tpoly({}), tpoly({1})};
    P.trim();
    auto cert = certify_s3(P);
    CHECK(!cert.certified);
    CHECK(!cert.irreducible);
    REQUIRE(cert.root.has_value());
    CHECK(*cert.root == tpoly({0, 1})); // x = t
}

TEST_CASE("certify_s3: cyclic cubics fail on the square-discriminant branch") {
    // x^3 - 3x - 1: irreducible with disc 81 = 9^2
    BivarPoly A;
    A.c = {tpoly({-1}), tpoly({-3}), tpoly({}), tpoly({1})};
    A.trim();
    auto certA = certify_s3(A);
    CHECK(!certA.certified);
    CHECK(certA.irreducible);
    CHECK(!certA.disc_nonsquare);
    CHECK(certA.disc.num == tpoly({81}));
    // the Shanks family member used as the Omega fixture: disc = (t^2 + 27/4)^2
    auto E = cubic_fixture();
    BivarPoly S;
    for (int k = 0; k <= 3; ++k) S.c.push_back(E.min_poly.coeff(k).num);
    S.trim();
    auto certS = certify_s3(S);
    CHECK(!certS.certified);
    CHECK(certS.irreducible);
    CHECK(!certS.disc_nonsquare);
}

TEST_CASE("certify_s3: invariant under x -> x + c(t) shifts") {
    auto P = interpolation_construct(tpoly({0, -1, 0, 1}), tpoly({-1, -1, 0, 1}));
    Rng rng(103);
    for (int it = 0; it < 10; ++it) {
        auto c = testutil::rand_poly(rng, 2, 3);
        auto shifted = shift_x(P, c);
        auto cert = certify_s3(shifted);
        CHECK(cert.certified);
    }
}

TEST_CASE("ExtElem: field arithmetic in k(t)[y]/(m)") {
    auto ctx = std::make_shared<const LContext>(quadratic_fixture());
    auto y = ext_y(ctx);
    auto one = one_like(y);
    // y^2 = 1 + t
    auto t = ext_from_ratfunc(ctx, KRatFunc::t());
    CHECK(y * y == one + t);
    // (y - 1)(y + 1) = y^2 - 1 = t
    CHECK((y - one) * (y + one) == t);
    // inverse: y * y / (1+t) = 1
    auto yinv = y.inverse();
    CHECK(y * yinv == one);
    CHECK((one + y).inverse() * (one + y) == one);
    CHECK_THROWS_AS((y - y).inverse(), Error);
}
