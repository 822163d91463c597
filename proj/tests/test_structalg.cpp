#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "skewgal/normform.hpp"
#include "skewgal/structalg.hpp"

#include "test_util.hpp"

using namespace skewgal;
using testutil::Rng;

namespace {

StructureAlgebra<Rat> hamilton() { return quaternion_algebra(Rat(-1), Rat(-1)); }

Vec<Rat> elem(std::initializer_list<long> v) {
    Vec<Rat> r;
    for (long x : v) r.emplace_back(x);
    return r;
}

// Q x Q as the quotient algebra Q[y]/(y^2 - y); (0,1) corresponds to y.
StructureAlgebra<Rat> qxq() {
    return quotient_algebra(Poly<Rat>(std::vector<Rat>{Rat(0), Rat(-1), Rat(1)}));
}

// Q(sqrt 2) = Q[y]/(y^2 - 2): simple but not central simple over Q.
StructureAlgebra<Rat> qsqrt2() {
    return quotient_algebra(Poly<Rat>(std::vector<Rat>{Rat(-2), Rat(0), Rat(1)}));
}

Subspace<Rat> span_of(std::vector<Vec<Rat>> vs, int ambient) { return subspace_span(vs, ambient); }

} // namespace

TEST_CASE("verify_structure: Hamilton table passes") {
    CHECK(verify_structure(hamilton()).ok());
}

TEST_CASE("verify_structure: broken unity reports witness (1,2)") {
    auto A = hamilton();
    A.tbl[0 * 4 + 1] = elem({0, 0, 1, 0}); // lambda^{(1,2)} != e_2
    auto v = verify_structure(A);
    CHECK(!v.ok());
    CHECK(v.kind == StructureViolation::Kind::unity);
    CHECK(v.i == 1);
    CHECK(v.j == 2);
}

TEST_CASE("verify_structure: broken associativity reports a triple") {
    auto A = hamilton();
    A.tbl[1 * 4 + 2] = elem({0, 0, 0, -1}); // i*j = -k breaks associativity
    auto v = verify_structure(A);
    CHECK(!v.ok());
    CHECK(v.kind == StructureViolation::Kind::associativity);
}

TEST_CASE("verify_structure: M2(Q) from matrix units passes") {
    auto M = matrix_algebra(2, Rat(1));
    CHECK(verify_structure(M.alg).ok());
    // the unit-basis presentation is associative but e_1 is not the unity
    auto U = matrix_algebra_units(2, Rat(1));
    auto v = verify_structure(U.alg);
    CHECK(!v.ok());
    CHECK(v.kind == StructureViolation::Kind::unity);
    // it still has a (computed) two-sided unity: the identity matrix
    auto u = unity(U.alg);
    REQUIRE(u.has_value());
    CHECK(*u == elem({1, 0, 0, 1}));
}

TEST_CASE("multiply: quaternion examples") {
    auto H = hamilton();
    // i*j = k
    CHECK(multiply(H, elem({0, 1, 0, 0}), elem({0, 0, 1, 0})) == elem({0, 0, 0, 1}));
    // x*e_1 = x
    Vec<Rat> x = elem({3, -2, 5, 7});
    CHECK(multiply(H, x, elem({1, 0, 0, 0})) == x);
    // (1+i)(1-i) = 2
    CHECK(multiply(H, elem({1, 1, 0, 0}), elem({1, -1, 0, 0})) == elem({2, 0, 0, 0}));
}

TEST_CASE("inverse: examples and involution property") {
    auto H = hamilton();
    // inverse(i) = -i
    CHECK(*inverse(H, elem({0, 1, 0, 0})) == elem({0, -1, 0, 0}));
    // inverse(1+i+j+k) = (1-i-j-k)/4, and multiplying back gives 1
    auto inv = inverse(H, elem({1, 1, 1, 1}));
    REQUIRE(inv.has_value());
    Vec<Rat> expected{Rat(1, 4), Rat(-1, 4), Rat(-1, 4), Rat(-1, 4)};
    CHECK(*inv == expected);
    CHECK(multiply(H, elem({1, 1, 1, 1}), *inv) == elem({1, 0, 0, 0}));
    // idempotent != 1 in M2 is not invertible
    auto U = matrix_algebra_units(2, Rat(1));
    CHECK(!inverse(U.alg, U.unit(1, 1, Rat(1))).has_value());
    // inverse of inverse is the identity map on random invertible elements
    Rng rng(41);
    for (int it = 0; it < 30; ++it) {
        Vec<Rat> x{testutil::rand_rat(rng), testutil::rand_rat(rng), testutil::rand_rat(rng), testutil::rand_rat(rng)};
        if (is_zero_vec(x)) continue;
        auto ix = inverse(H, x);
        REQUIRE(ix.has_value());
        CHECK(*inverse(H, *ix) == x);
    }
}

TEST_CASE("commutant: examples") {
    auto H = hamilton();
    // commutant of span{1} is everything
    auto all = commutant(H, {elem({1, 0, 0, 0})});
    CHECK(all.dim() == 4);
    // commutant of span{1, i} is span{1, i}: the kernel system solved by hand
    // forces the j and k coordinates to vanish
    auto c = commutant(H, {elem({1, 0, 0, 0}), elem({0, 1, 0, 0})});
    CHECK(subspace_equal(c, span_of({elem({1, 0, 0, 0}), elem({0, 1, 0, 0})}, 4), 4));
    // commutant of the full basis is the center
    std::vector<Vec<Rat>> full;
    for (int i = 0; i < 4; ++i) full.push_back(basis_vec(4, i, Rat(1)));
    CHECK(subspace_equal(commutant(H, full), center(H), 4));
}

TEST_CASE("center: examples") {
    CHECK(subspace_equal(center(hamilton()), span_of({elem({1, 0, 0, 0})}, 4), 4));
    auto M = matrix_algebra(2, Rat(1));
    auto u = unity(M.alg);
    CHECK(subspace_equal(center(M.alg), span_of({*u}, 4), 4));
    auto Q2 = qxq();
    CHECK(center(Q2).dim() == 2);
}

TEST_CASE("tensor: dimensions, unit law, center of H (x) H") {
    auto H = hamilton();
    auto M = matrix_algebra(2, Rat(1));
    CHECK(tensor(H, M.alg).dim == 16);
    // tensor with the trivial algebra is the identical table
    auto T = tensor(H, trivial_algebra(Rat(1)));
    CHECK(T.dim == 4);
    CHECK(T.tbl == H.tbl);
    // the tensor square of a central simple algebra has a 1-dimensional center
    CHECK(center(tensor(H, H)).dim() == 1);
}

TEST_CASE("radical: semisimple and nilpotent examples") {
    CHECK(radical(hamilton()).dim() == 0);
    CHECK(radical(matrix_algebra(2, Rat(1)).alg).dim() == 0);
    auto U = upper_triangular2(Rat(1));
    auto r = radical(U);
    CHECK(subspace_equal(r, span_of({elem({0, 1, 0})}, 3), 3));
}

TEST_CASE("radical is a two-sided ideal") {
    auto U = upper_triangular2(Rat(1));
    auto r = radical(U);
    for (const auto& x : r.basis)
        for (int i = 0; i < U.dim; ++i) {
            CHECK(subspace_contains(r, multiply(U, basis_vec(U.dim, i, Rat(1)), x), U.dim));
            CHECK(subspace_contains(r, multiply(U, x, basis_vec(U.dim, i, Rat(1))), U.dim));
        }
}

TEST_CASE("is_simple: fleet verdicts") {
    CHECK(is_simple(hamilton()));
    CHECK(is_simple(matrix_algebra(2, Rat(1)).alg));
    CHECK(is_simple(qsqrt2()));
    CHECK(!is_simple(qxq()));
    CHECK(!is_simple(upper_triangular2(Rat(1))));
    // tensoring two central simple algebras stays simple
    CHECK(is_simple(tensor(hamilton(), matrix_algebra(2, Rat(1)).alg)));
}

TEST_CASE("matrix units: calculus") {
    auto U = matrix_algebra_units(2, Rat(1));
    auto g12 = U.unit(1, 2, Rat(1)), g21 = U.unit(2, 1, Rat(1)), g11 = U.unit(1, 1, Rat(1));
    CHECK(multiply(U.alg, g12, g21) == g11);
    CHECK(is_zero_vec(multiply(U.alg, g12, g12)));
    CHECK(add_vec(U.unit(1, 1, Rat(1)), U.unit(2, 2, Rat(1))) == *unity(U.alg));
    CHECK_THROWS_AS(U.unit(0, 1, Rat(1)), Error);
    CHECK_THROWS_AS(U.unit(1, 3, Rat(1)), Error);
    // Gamma_{i,i0}(1) M Gamma_{j0,j}(1) = Gamma_{i,j}(m_{i0,j0})
    Vec<Rat> m = U.from_entries({Rat(3), Rat(5), Rat(7), Rat(11)});
    auto lhs = multiply(U.alg, multiply(U.alg, U.unit(1, 2, Rat(1)), m), U.unit(1, 2, Rat(1)));
    CHECK(lhs == U.unit(1, 2, Rat(7))); // m_{2,1} = 7
}

TEST_CASE("adapted matrix presentation: unit coordinates agree with products") {
    auto M = matrix_algebra(2, Rat(1));
    auto g12 = M.unit(1, 2, Rat(1)), g21 = M.unit(2, 1, Rat(1));
    CHECK(multiply(M.alg, g12, g21) == M.unit(1, 1, Rat(1)));
    CHECK(multiply(M.alg, g21, g12) == M.unit(2, 2, Rat(1)));
    auto e = M.from_entries({Rat(1), Rat(0), Rat(0), Rat(1)});
    CHECK(e == basis_vec(4, 0, Rat(1)));
}

TEST_CASE("minimal polynomial: quotient algebra generator") {
    auto A = qsqrt2();
    auto mp = minimal_polynomial(A, elem({0, 1}));
    CHECK(mp == Poly<Rat>(std::vector<Rat>{Rat(-2), Rat(0), Rat(1)}));
    auto B = qxq();
    auto mq = minimal_polynomial(B, elem({0, 1}));
    CHECK(mq == Poly<Rat>(std::vector<Rat>{Rat(0), Rat(-1), Rat(1)}));
}

// Instance-quantified: commutant(A(x)B, C(x)D) = C~ (x) D~ and
// Z(A(x)B) = Z(A)(x)Z(B), over the fixture fleet and catalogued subalgebras.
namespace {

struct FleetEntry {
    const char* name;
    StructureAlgebra<Rat> alg;
    std::vector<std::vector<Vec<Rat>>> subalgebras;
};

std::vector<FleetEntry> tensor_fleet() {
    std::vector<FleetEntry> fleet;
    {
        auto H = hamilton();
        fleet.push_back({"hamilton", H, {{elem({1, 0, 0, 0})}, {elem({1, 0, 0, 0}), elem({0, 1, 0, 0})}}});
    }
    {
        auto Q = quaternion_algebra(Rat(-1), Rat(-3));
        fleet.push_back({"quat(-1,-3)", Q, {{elem({1, 0, 0, 0})}, {elem({1, 0, 0, 0}), elem({0, 0, 1, 0})}}});
    }
    {
        auto M = matrix_algebra(2, Rat(1));
        fleet.push_back({"m2", M.alg,
                          {{*unity(M.alg)}, {*unity(M.alg), M.unit(2, 2, Rat(1))}}});
    }
    {
        auto Q2 = qxq();
        std::vector<Vec<Rat>> whole{elem({1, 0}), elem({0, 1})};
        fleet.push_back({"qxq", Q2, {{elem({1, 0})}, whole}});
    }
    {
        auto U = upper_triangular2(Rat(1));
        fleet.push_back({"upper2", U, {{elem({1, 0, 0})}, {elem({1, 0, 0}), elem({0, 1, 0})}}});
    }
    return fleet;
}

std::vector<Vec<Rat>> tensor_span(const std::vector<Vec<Rat>>& xs, const std::vector<Vec<Rat>>& ys, int db) {
    std::vector<Vec<Rat>> out;
    for (const auto& x : xs)
        for (const auto& y : ys) {
            Vec<Rat> v(x.size() * y.size());
            for (std::size_t i = 0; i < x.size(); ++i)
                for (std::size_t j = 0; j < y.size(); ++j)
                    v[i * static_cast<std::size_t>(db) + j] = x[i] * y[j];
            out.push_back(std::move(v));
        }
    return out;
}

} // namespace

TEST_CASE("commutants and centers factor through tensor products") {
    auto fleet = tensor_fleet();
    int pairs = 0;
    for (std::size_t a = 0; a < fleet.size(); ++a)
        for (std::size_t b = 0; b < fleet.size(); ++b) {
            if ((a + b) % 2 == 1 && a != b) continue; // keep runtime modest, still >= 6 pairs
            const auto& A = fleet[a].alg;
            const auto& B = fleet[b].alg;
            auto AB = tensor(A, B);
            ++pairs;
            // centers
            auto zc = tensor_span(center(A).basis, center(B).basis, B.dim);
            CHECK(subspace_equal(center(AB), subspace_span(zc, AB.dim), AB.dim));
            // catalogued subalgebra pairs
            for (const auto& C : fleet[a].subalgebras)
                for (const auto& D : fleet[b].subalgebras) {
                    auto Ct = commutant(A, C);
                    auto Dt = commutant(B, D);
                    auto lhs = commutant(AB, tensor_span(C, D, B.dim));
                    auto rhs = subspace_span(tensor_span(Ct.basis, Dt.basis, B.dim), AB.dim);
                    CHECK(subspace_equal(lhs, rhs, AB.dim));
                }
        }
    CHECK(pairs >= 6);
}

TEST_CASE("tensoring with a central simple algebra preserves simplicity") {
    std::vector<StructureAlgebra<Rat>> csa{hamilton(), quaternion_algebra(Rat(-1), Rat(-3)),
                                           matrix_algebra(2, Rat(1)).alg};
    std::vector<StructureAlgebra<Rat>> simple{hamilton(), matrix_algebra(2, Rat(1)).alg, qsqrt2()};
    for (const auto& A : csa) {
        for (const auto& B : simple) CHECK(is_simple(tensor(A, B)));
        CHECK(!is_simple(tensor(A, qxq())));
    }
}

TEST_CASE("irreducibility helpers") {
    // rational roots
    auto roots = rational_roots(Poly<Rat>(std::vector<Rat>{Rat(0), Rat(-1), Rat(1)})); // y^2 - y
    CHECK(roots.size() == 2);
    CHECK(rational_roots(Poly<Rat>(std::vector<Rat>{Rat(-2), Rat(0), Rat(1)})).empty());
    // 2x^2 - 3x + 1 has roots 1 and 1/2
    auto r2 = rational_roots(Poly<Rat>(std::vector<Rat>{Rat(1), Rat(-3), Rat(2)}));
    CHECK(r2.size() == 2);
    // quartic: x^4 + 1 is irreducible (splits into quadratics only over R)
    CHECK(is_irreducible_q(Poly<Rat>(std::vector<Rat>{Rat(1), Rat(0), Rat(0), Rat(0), Rat(1)})));
    // x^4 + 4 = (x^2-2x+2)(x^2+2x+2): quadratic split with no rational root
    CHECK(!is_irreducible_q(Poly<Rat>(std::vector<Rat>{Rat(4), Rat(0), Rat(0), Rat(0), Rat(1)})));
    // x^4 - 5x^2 + 6 = (x^2-2)(x^2-3)
    CHECK(!is_irreducible_q(Poly<Rat>(std::vector<Rat>{Rat(6), Rat(0), Rat(-5), Rat(0), Rat(1)})));
    // degree 5 witness mod p: x^5 - x - 1
    CHECK(is_irreducible_q(Poly<Rat>(std::vector<Rat>{Rat(-1), Rat(-1), Rat(0), Rat(0), Rat(0), Rat(1)})));
}
