#pragma once

// Finite-dimensional algebras presented by structure constants
// e_i e_j = sum_h lambda^{(i,j)}_h e_h, together with the linear-algebra
// toolbox built on the regular representation: center, commutants, the
// Jacobson radical (characteristic 0), simplicity, tensor products and the
// matrix-algebra presentations.

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "skewgal/irreducible.hpp"
#include "skewgal/linalg.hpp"

namespace skewgal {

template <class F>
struct StructureAlgebra {
    int dim = 0;
    std::vector<Vec<F>> tbl; // tbl[i*dim + j] = coordinates of e_{i+1} e_{j+1}
    F one_scalar;            // exemplar 1 of F, for generic construction

    StructureAlgebra() = default;
    StructureAlgebra(int d, std::vector<Vec<F>> table) : dim(d), tbl(std::move(table)) {
        if (static_cast<int>(tbl.size()) != dim * dim) throw Error("structure table size mismatch");
        for (const auto& v : tbl)
            if (static_cast<int>(v.size()) != dim) throw Error("structure vector length mismatch");
        bool found = false;
        for (const auto& v : tbl) {
            for (const auto& x : v)
                if (!x.is_zero()) {
                    one_scalar = one_like(x);
                    found = true;
                    break;
                }
            if (found) break;
        }
        if (!found) throw Error("degenerate structure table (all products zero)");
    }

    const Vec<F>& structure(int i, int j) const { // 0-based
        return tbl[static_cast<std::size_t>(i) * dim + j];
    }
};

template <class F>
Vec<F> multiply(const StructureAlgebra<F>& A, const Vec<F>& x, const Vec<F>& y) {
    if (static_cast<int>(x.size()) != A.dim || static_cast<int>(y.size()) != A.dim)
        throw Error("element dimension mismatch");
    Vec<F> r(static_cast<std::size_t>(A.dim));
    for (int i = 0; i < A.dim; ++i) {
        if (x[static_cast<std::size_t>(i)].is_zero()) continue;
        for (int j = 0; j < A.dim; ++j) {
            if (y[static_cast<std::size_t>(j)].is_zero()) continue;
            F c = x[static_cast<std::size_t>(i)] * y[static_cast<std::size_t>(j)];
            const Vec<F>& s = A.structure(i, j);
            for (int h = 0; h < A.dim; ++h)
                if (!s[static_cast<std::size_t>(h)].is_zero())
                    r[static_cast<std::size_t>(h)] = r[static_cast<std::size_t>(h)] + c * s[static_cast<std::size_t>(h)];
        }
    }
    return r;
}

struct StructureViolation {
    enum class Kind { none, unity, associativity } kind = Kind::none;
    int i = 0, j = 0, h = 0; // 1-based witness triple
    bool ok() const { return kind == Kind::none; }
    std::string describe() const {
        switch (kind) {
            case Kind::none: return "ok";
            case Kind::unity: return "unity violated at (" + std::to_string(i) + "," + std::to_string(j) + ")";
            default:
                return "associativity violated at (" + std::to_string(i) + "," + std::to_string(j) + "," +
                       std::to_string(h) + ")";
        }
    }
};

// Checks that e_1 is a two-sided unity and that all basis triples associate.
template <class F>
StructureViolation verify_structure(const StructureAlgebra<F>& A) {
    const F one = A.one_scalar;
    for (int j = 0; j < A.dim; ++j) {
        Vec<F> ej = basis_vec(A.dim, j, one);
        if (A.structure(0, j) != ej) return {StructureViolation::Kind::unity, 1, j + 1, 0};
        if (A.structure(j, 0) != ej) return {StructureViolation::Kind::unity, j + 1, 1, 0};
    }
    for (int i = 0; i < A.dim; ++i)
        for (int j = 0; j < A.dim; ++j)
            for (int h = 0; h < A.dim; ++h) {
                Vec<F> ei = basis_vec(A.dim, i, one), ej = basis_vec(A.dim, j, one), eh = basis_vec(A.dim, h, one);
                Vec<F> lhs = multiply(A, multiply(A, ei, ej), eh);
                Vec<F> rhs = multiply(A, ei, multiply(A, ej, eh));
                if (lhs != rhs) return {StructureViolation::Kind::associativity, i + 1, j + 1, h + 1};
            }
    return {};
}

// Left and right regular representations: columns are x*e_j resp. e_j*x.
template <class F>
Matrix<F> left_mult_matrix(const StructureAlgebra<F>& A, const Vec<F>& x) {
    Matrix<F> m(A.dim, A.dim);
    for (int j = 0; j < A.dim; ++j) {
        Vec<F> col = multiply(A, x, basis_vec(A.dim, j, A.one_scalar));
        for (int i = 0; i < A.dim; ++i) m.at(i, j) = col[static_cast<std::size_t>(i)];
    }
    return m;
}
template <class F>
Matrix<F> right_mult_matrix(const StructureAlgebra<F>& A, const Vec<F>& x) {
    Matrix<F> m(A.dim, A.dim);
    for (int j = 0; j < A.dim; ++j) {
        Vec<F> col = multiply(A, basis_vec(A.dim, j, A.one_scalar), x);
        for (int i = 0; i < A.dim; ++i) m.at(i, j) = col[static_cast<std::size_t>(i)];
    }
    return m;
}

// The two-sided unity, if one exists. e_1 is recognized directly; otherwise
// the linear system u*e_j = e_j = e_j*u is solved.
template <class F>
std::optional<Vec<F>> unity(const StructureAlgebra<F>& A) {
    bool e1_ok = true;
    for (int j = 0; j < A.dim && e1_ok; ++j) {
        Vec<F> ej = basis_vec(A.dim, j, A.one_scalar);
        if (A.structure(0, j) != ej || A.structure(j, 0) != ej) e1_ok = false;
    }
    if (e1_ok) return basis_vec(A.dim, 0, A.one_scalar);
    // rows: for each j,h require sum_i u_i lambda^{(i,j)}_h = delta_{jh} (and two-sided)
    Matrix<F> m(2 * A.dim * A.dim, A.dim);
    Vec<F> b(static_cast<std::size_t>(2 * A.dim * A.dim));
    int r = 0;
    for (int j = 0; j < A.dim; ++j)
        for (int h = 0; h < A.dim; ++h) {
            for (int i = 0; i < A.dim; ++i) {
                m.at(r, i) = A.structure(i, j)[static_cast<std::size_t>(h)];
                m.at(r + 1, i) = A.structure(j, i)[static_cast<std::size_t>(h)];
            }
            if (j == h) {
                b[static_cast<std::size_t>(r)] = A.one_scalar;
                b[static_cast<std::size_t>(r + 1)] = A.one_scalar;
            }
            r += 2;
        }
    return solve(m, b);
}

// Two-sided inverse of x, or nullopt when x is a zero divisor/non-unit.
template <class F>
std::optional<Vec<F>> inverse(const StructureAlgebra<F>& A, const Vec<F>& x) {
    if (is_zero_vec(x)) return std::nullopt;
    auto u = unity(A);
    if (!u) throw Error("algebra has no unity");
    auto y = solve(left_mult_matrix(A, x), *u);
    if (!y) return std::nullopt;
    if (multiply(A, *y, x) != *u) return std::nullopt;
    return y;
}

// Conjugation x -> a x a^{-1} as a matrix; a must be invertible.
template <class F>
Matrix<F> conjugation_matrix(const StructureAlgebra<F>& A, const Vec<F>& a) {
    auto ainv = inverse(A, a);
    if (!ainv) throw Error("conjugating element is not invertible");
    return left_mult_matrix(A, a) * right_mult_matrix(A, *ainv);
}

// Commutant of a spanning set: kernel of x -> (x s - s x)_{s in S}.
template <class F>
Subspace<F> commutant(const StructureAlgebra<F>& A, const std::vector<Vec<F>>& spanning) {
    std::vector<Matrix<F>> parts;
    parts.reserve(spanning.size());
    for (const auto& s : spanning)
        parts.push_back(right_mult_matrix(A, s) - left_mult_matrix(A, s));
    if (parts.empty()) {
        Subspace<F> all;
        for (int i = 0; i < A.dim; ++i) all.basis.push_back(basis_vec(A.dim, i, A.one_scalar));
        return all;
    }
    Subspace<F> r;
    r.basis = kernel_basis(Matrix<F>::stacked(parts));
    return r;
}

template <class F>
Subspace<F> center(const StructureAlgebra<F>& A) {
    std::vector<Vec<F>> full;
    for (int i = 0; i < A.dim; ++i) full.push_back(basis_vec(A.dim, i, A.one_scalar));
    return commutant(A, full);
}

// Basis e_i (x) f_j ordered lexicographically; structure constants multiply.
template <class F>
StructureAlgebra<F> tensor(const StructureAlgebra<F>& A, const StructureAlgebra<F>& B) {
    int d = A.dim * B.dim;
    std::vector<Vec<F>> tbl(static_cast<std::size_t>(d) * d, Vec<F>(static_cast<std::size_t>(d)));
    auto idx = [&](int i, int j) { return i * B.dim + j; };
    for (int i = 0; i < A.dim; ++i)
        for (int j = 0; j < B.dim; ++j)
            for (int k = 0; k < A.dim; ++k)
                for (int l = 0; l < B.dim; ++l) {
                    Vec<F>& out = tbl[static_cast<std::size_t>(idx(i, j)) * d + idx(k, l)];
                    const Vec<F>& sa = A.structure(i, k);
                    const Vec<F>& sb = B.structure(j, l);
                    for (int h = 0; h < A.dim; ++h) {
                        if (sa[static_cast<std::size_t>(h)].is_zero()) continue;
                        for (int w = 0; w < B.dim; ++w)
                            out[static_cast<std::size_t>(idx(h, w))] =
                                sa[static_cast<std::size_t>(h)] * sb[static_cast<std::size_t>(w)];
                    }
                }
    return StructureAlgebra<F>(d, std::move(tbl));
}

// Jacobson radical over a characteristic-0 field: the radical of the trace
// form B(x,y) = tr(L_{xy}) of the regular representation (Dickson).
template <class F>
Subspace<F> radical(const StructureAlgebra<F>& A) {
    // tau_h = tr(L_{e_h}); then B(e_i, e_j) = sum_h lambda^{(i,j)}_h tau_h
    Vec<F> tau(static_cast<std::size_t>(A.dim));
    for (int h = 0; h < A.dim; ++h)
        tau[static_cast<std::size_t>(h)] = left_mult_matrix(A, basis_vec(A.dim, h, A.one_scalar)).trace();
    Matrix<F> gram(A.dim, A.dim);
    for (int i = 0; i < A.dim; ++i)
        for (int j = 0; j < A.dim; ++j) {
            F s{};
            const Vec<F>& l = A.structure(i, j);
            for (int h = 0; h < A.dim; ++h)
                if (!l[static_cast<std::size_t>(h)].is_zero()) s = s + l[static_cast<std::size_t>(h)] * tau[static_cast<std::size_t>(h)];
            gram.at(i, j) = s;
        }
    Subspace<F> r;
    r.basis = kernel_basis(gram);
    return r;
}

// Minimal polynomial of x over the base field, via linear dependence of
// its powers. Requires a unity.
template <class F>
Poly<F> minimal_polynomial(const StructureAlgebra<F>& A, const Vec<F>& x) {
    auto u = unity(A);
    if (!u) throw Error("minimal polynomial needs a unital algebra");
    std::vector<Vec<F>> powers{*u};
    Vec<F> cur = *u;
    for (int d = 1; d <= A.dim + 1; ++d) {
        cur = multiply(A, cur, x);
        // does cur lie in span(powers)? solve for the dependency
        Matrix<F> m(A.dim, static_cast<int>(powers.size()));
        for (int i = 0; i < A.dim; ++i)
            for (std::size_t j = 0; j < powers.size(); ++j) m.at(i, static_cast<int>(j)) = powers[j][static_cast<std::size_t>(i)];
        if (auto sol = solve(m, cur)) {
            std::vector<F> coeffs;
            for (const auto& s : *sol) coeffs.push_back(-s);
            coeffs.push_back(one_like(A.one_scalar));
            return Poly<F>(std::move(coeffs));
        }
        powers.push_back(cur);
    }
    throw Error("minimal polynomial not found (non-associative input?)");
}

// Is the center a field? Decided by locating a primitive element of the
// (commutative, semisimple) center and testing its minimal polynomial.
// Deterministic small-height combinations come before seeded random ones.
inline bool center_is_field(const StructureAlgebra<Rat>& A, const Subspace<Rat>& Z) {
    int z = Z.dim();
    if (z == 0) throw Error("center of a unital algebra cannot be zero-dimensional");
    if (z == 1) return true; // contains the unity, hence equals k*1
    auto try_elem = [&](const Vec<Rat>& cand) -> std::optional<bool> {
        Poly<Rat> mp = minimal_polynomial(A, cand);
        if (mp.degree() != z) return std::nullopt; // not primitive
        return is_irreducible_q(mp);
    };
    // heights 1..3 over the center basis
    for (long height = 1; height <= 3; ++height) {
        std::vector<long> w(static_cast<std::size_t>(z), -height);
        for (;;) {
            Vec<Rat> cand(static_cast<std::size_t>(A.dim));
            for (int i = 0; i < z; ++i)
                for (int k = 0; k < A.dim; ++k)
                    cand[static_cast<std::size_t>(k)] += Rat(w[static_cast<std::size_t>(i)]) * Z.basis[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)];
            if (!is_zero_vec(cand))
                if (auto r = try_elem(cand)) return *r;
            int pos = 0;
            while (pos < z && w[static_cast<std::size_t>(pos)] == height) {
                w[static_cast<std::size_t>(pos)] = -height;
                ++pos;
            }
            if (pos == z) break;
            ++w[static_cast<std::size_t>(pos)];
        }
    }
    std::mt19937_64 rng(0x5eed);
    for (int it = 0; it < 64; ++it) {
        Vec<Rat> cand(static_cast<std::size_t>(A.dim));
        for (int i = 0; i < z; ++i) {
            Rat c(static_cast<long>(rng() % 41) - 20);
            for (int k = 0; k < A.dim; ++k)
                cand[static_cast<std::size_t>(k)] += c * Z.basis[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)];
        }
        if (!is_zero_vec(cand))
            if (auto r = try_elem(cand)) return *r;
    }
    throw Inconclusive("no primitive element of the center found within the attempt budget");
}

// Wedderburn in characteristic 0: simple <=> radical zero and center a field.
inline bool is_simple(const StructureAlgebra<Rat>& A) {
    if (radical(A).dim() != 0) return false;
    return center_is_field(A, center(A));
}

// --- standard presentations ----------------------------------------------

// One-dimensional algebra k*1.
template <class F>
StructureAlgebra<F> trivial_algebra(const F& like) {
    return StructureAlgebra<F>(1, {Vec<F>{one_like(like)}});
}

// k[y]/(m) on the basis 1, y, ..., y^{g-1}; m monic of degree g >= 1.
template <class F>
StructureAlgebra<F> quotient_algebra(const Poly<F>& m) {
    int g = m.degree();
    if (g < 1) throw Error("quotient algebra needs a modulus of degree >= 1");
    if (m.lc() != one_like(m.lc())) throw Error("quotient algebra modulus must be monic");
    std::vector<Poly<F>> ypow(static_cast<std::size_t>(2 * g - 1));
    ypow[0] = one_like(m);
    for (std::size_t k = 1; k < ypow.size(); ++k)
        ypow[k] = (ypow[k - 1] * Poly<F>::monomial(one_like(m.lc()), 1)) % m;
    std::vector<Vec<F>> tbl;
    tbl.reserve(static_cast<std::size_t>(g) * g);
    for (int i = 0; i < g; ++i)
        for (int j = 0; j < g; ++j) {
            Vec<F> v(static_cast<std::size_t>(g));
            const Poly<F>& p = ypow[static_cast<std::size_t>(i + j)];
            for (int h = 0; h < g; ++h) v[static_cast<std::size_t>(h)] = p.coeff(h);
            tbl.push_back(std::move(v));
        }
    return StructureAlgebra<F>(g, std::move(tbl));
}

// Upper-triangular 2x2 matrices on the basis (I, E12, E22): dimension 3,
// radical spanned by E12.
template <class F>
StructureAlgebra<F> upper_triangular2(const F& like) {
    F one = one_like(like);
    auto vec = [&](int a, int b, int c) {
        Vec<F> v(3);
        if (a) v[0] = one;
        if (b) v[1] = one;
        if (c) v[2] = one;
        return v;
    };
    std::vector<Vec<F>> tbl(9, Vec<F>(3));
    auto set = [&](int i, int j, Vec<F> v) { tbl[static_cast<std::size_t>(i) * 3 + j] = std::move(v); };
    set(0, 0, vec(1, 0, 0));
    set(0, 1, vec(0, 1, 0));
    set(0, 2, vec(0, 0, 1));
    set(1, 0, vec(0, 1, 0));
    set(1, 1, vec(0, 0, 0)); // E12 E12 = 0
    set(1, 2, vec(0, 1, 0)); // E12 E22 = E12
    set(2, 0, vec(0, 0, 1));
    set(2, 1, vec(0, 0, 0)); // E22 E12 = 0
    set(2, 2, vec(0, 0, 1));
    return StructureAlgebra<F>(3, std::move(tbl));
}

// Full matrix algebra M_n. Two presentations:
//  - unit basis: E_11, E_12, ..., E_nn in lexicographic order;
//  - adapted basis: E_11 replaced by the identity, so e_1 is the unity.
template <class F>
struct MatrixPresentation {
    StructureAlgebra<F> alg;
    int n = 0;
    bool unit_basis = true;

    // Coordinates of the matrix unit E_ij scaled by a (1-based indices).
    Vec<F> unit(int i, int j, const F& a) const {
        if (i < 1 || i > n || j < 1 || j > n) throw Error("matrix unit index out of range");
        Vec<F> v(static_cast<std::size_t>(n) * n);
        int pos = (i - 1) * n + (j - 1);
        if (unit_basis) {
            v[static_cast<std::size_t>(pos)] = a;
            return v;
        }
        // adapted: E_11 = e_1 - sum_{i>=2} E_ii
        if (i == j && i == 1) {
            v[0] = a;
            for (int d = 2; d <= n; ++d) v[static_cast<std::size_t>((d - 1) * n + (d - 1))] = -a;
        } else {
            v[static_cast<std::size_t>(pos)] = a;
        }
        return v;
    }

    // matrix entries (row-major) -> coordinates
    Vec<F> from_entries(const std::vector<F>& entries) const {
        if (static_cast<int>(entries.size()) != n * n) throw Error("matrix entry count mismatch");
        Vec<F> v(static_cast<std::size_t>(n) * n);
        if (unit_basis) {
            for (std::size_t k = 0; k < entries.size(); ++k) v[k] = entries[k];
            return v;
        }
        // x = m11 * I + sum_{(i,j) != (1,1)} c_ij E_ij with c_ii = m_ii - m_11
        v[0] = entries[0];
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j) {
                if (i == 1 && j == 1) continue;
                std::size_t pos = static_cast<std::size_t>((i - 1) * n + (j - 1));
                v[pos] = (i == j) ? entries[pos] - entries[0] : entries[pos];
            }
        return v;
    }
};

template <class F>
MatrixPresentation<F> matrix_algebra_units(int n, const F& like) {
    F one = one_like(like);
    int d = n * n;
    auto pos = [&](int i, int j) { return (i - 1) * n + (j - 1); }; // 1-based
    std::vector<Vec<F>> tbl(static_cast<std::size_t>(d) * d, Vec<F>(static_cast<std::size_t>(d)));
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            for (int k = 1; k <= n; ++k)
                for (int l = 1; l <= n; ++l)
                    if (j == k) tbl[static_cast<std::size_t>(pos(i, j)) * d + pos(k, l)][static_cast<std::size_t>(pos(i, l))] = one;
    MatrixPresentation<F> m;
    m.alg = StructureAlgebra<F>(d, std::move(tbl));
    m.n = n;
    m.unit_basis = true;
    return m;
}

template <class F>
MatrixPresentation<F> matrix_algebra(int n, const F& like) {
    MatrixPresentation<F> units = matrix_algebra_units(n, like);
    int d = n * n;
    // basis matrices of the adapted presentation, written in unit coordinates
    std::vector<Vec<F>> basis;
    for (int b = 0; b < d; ++b) {
        int i = b / n + 1, j = b % n + 1;
        if (i == 1 && j == 1) {
            Vec<F> id(static_cast<std::size_t>(d));
            for (int k = 1; k <= n; ++k) id[static_cast<std::size_t>((k - 1) * n + (k - 1))] = one_like(like);
            basis.push_back(std::move(id));
        } else {
            basis.push_back(units.unit(i, j, one_like(like)));
        }
    }
    // change of basis: coordinates in the adapted basis solve P c = x
    Matrix<F> P(d, d);
    for (int col = 0; col < d; ++col)
        for (int row = 0; row < d; ++row) P.at(row, col) = basis[static_cast<std::size_t>(col)][static_cast<std::size_t>(row)];
    std::vector<Vec<F>> tbl;
    tbl.reserve(static_cast<std::size_t>(d) * d);
    for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b) {
            Vec<F> prod = multiply(units.alg, basis[static_cast<std::size_t>(a)], basis[static_cast<std::size_t>(b)]);
            auto sol = solve(P, prod);
            if (!sol) throw Error("adapted matrix basis is not a basis");
            tbl.push_back(std::move(*sol));
        }
    MatrixPresentation<F> m;
    m.alg = StructureAlgebra<F>(d, std::move(tbl));
    m.n = n;
    m.unit_basis = false;
    return m;
}

// Map a structure algebra over F into one over G through a ring embedding.
template <class G, class F, class Fn>
StructureAlgebra<G> base_change(const StructureAlgebra<F>& A, Fn embed) {
    std::vector<Vec<G>> tbl;
    tbl.reserve(A.tbl.size());
    for (const auto& v : A.tbl) {
        Vec<G> w;
        w.reserve(v.size());
        for (const auto& x : v) w.push_back(embed(x));
        tbl.push_back(std::move(w));
    }
    return StructureAlgebra<G>(A.dim, std::move(tbl));
}

} // namespace skewgal
