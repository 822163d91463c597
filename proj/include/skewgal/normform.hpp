#pragma once

// Reduced norm forms of central simple algebras. The form is obtained
// symbolically: the characteristic polynomial of the left regular
// representation of a generic element is an n-th power of the reduced
// characteristic polynomial; its constant term gives Nrd up to sign. The
// n-th root extraction is verified by re-raising, which doubles as a
// central-simplicity sanity check.

#include <optional>
#include <string>
#include <vector>

#include "skewgal/mpoly.hpp"
#include "skewgal/ratfunc.hpp"
#include "skewgal/series.hpp"
#include "skewgal/structalg.hpp"

namespace skewgal {

template <class F>
struct NormForm {
    int nvars = 0;
    int degree = 0; // homogeneous degree n
    MPoly<F> form;

    template <class G, class Fn>
    G eval(const std::vector<G>& pts, Fn embed) const {
        return form.template eval<G>(pts, embed);
    }
    F eval(const std::vector<F>& pts) const { return form.eval(pts); }
    friend bool operator==(const NormForm& a, const NormForm& b) {
        return a.nvars == b.nvars && a.degree == b.degree && a.form == b.form;
    }
};

// Quaternion algebra (a,b): basis 1, i, j, ij with i^2 = a, j^2 = b, ji = -ij.
template <class F>
StructureAlgebra<F> quaternion_algebra(const F& a, const F& b) {
    if (a.is_zero() || b.is_zero()) throw Error("quaternion symbol parameters must be nonzero");
    F one = one_like(a);
    F zero{};
    auto vec = [&](F c1, F c2, F c3, F c4) { return Vec<F>{c1, c2, c3, c4}; };
    std::vector<Vec<F>> tbl(16, Vec<F>(4));
    auto set = [&](int i, int j, Vec<F> v) { tbl[static_cast<std::size_t>(i) * 4 + j] = std::move(v); };
    // unity row/column
    for (int j = 0; j < 4; ++j) {
        set(0, j, basis_vec(4, j, one));
        set(j, 0, basis_vec(4, j, one));
    }
    set(1, 1, vec(a, zero, zero, zero));
    set(1, 2, vec(zero, zero, zero, one));
    set(1, 3, vec(zero, zero, a, zero));
    set(2, 1, vec(zero, zero, zero, -one));
    set(2, 2, vec(b, zero, zero, zero));
    set(2, 3, vec(zero, -b, zero, zero));
    set(3, 1, vec(zero, zero, -a, zero));
    set(3, 2, vec(zero, b, zero, zero));
    set(3, 3, vec(-(a * b), zero, zero, zero));
    return StructureAlgebra<F>(4, std::move(tbl));
}

// Monic n-th root of a monic polynomial (coefficient list, low first) over a
// commutative Q-algebra; nullopt when no exact root exists.
template <class R>
std::optional<std::vector<R>> monic_nth_root(const std::vector<R>& cpoly, int n, const R& like) {
    int n2 = static_cast<int>(cpoly.size()) - 1;
    if (n <= 0 || n2 % n != 0) return std::nullopt;
    int deg = n2 / n;
    R one = one_like(like);
    std::vector<R> root(static_cast<std::size_t>(deg) + 1);
    root[static_cast<std::size_t>(deg)] = one;
    auto power = [&](const std::vector<R>& p) {
        std::vector<R> acc{one};
        for (int k = 0; k < n; ++k) {
            std::vector<R> nxt(acc.size() + p.size() - 1);
            for (std::size_t i = 0; i < acc.size(); ++i) {
                if (acc[i].is_zero()) continue;
                for (std::size_t j = 0; j < p.size(); ++j) nxt[i + j] = nxt[i + j] + acc[i] * p[j];
            }
            acc = std::move(nxt);
        }
        return acc;
    };
    for (int m = 1; m <= deg; ++m) {
        // coeff of lambda^{n2-m} in cpoly - root^n equals n * root[deg-m]
        std::vector<R> pw = power(root);
        R diff = cpoly[static_cast<std::size_t>(n2 - m)] - pw[static_cast<std::size_t>(n2 - m)];
        root[static_cast<std::size_t>(deg - m)] = diff / from_int_like(like, n);
    }
    if (power(root) != cpoly) return std::nullopt;
    return root;
}

// The norm form F_A(x_1..x_d) = Nrd(x_1 e_1 + ... + x_d e_d) of a central
// simple algebra of dimension d = n^2.
template <class F>
NormForm<F> norm_form(const StructureAlgebra<F>& A) {
    int d = A.dim;
    int n = 0;
    while (n * n < d) ++n;
    if (n * n != d) throw Error("norm form needs an algebra of square dimension");
    using MP = MPoly<F>;
    // generic element x = sum x_i e_i; left multiplication matrix over MPoly
    Matrix<MP> L(d, d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) L.at(i, j) = MP(d);
    for (int i = 0; i < d; ++i) {
        MP xi = MP::variable(d, i, A.one_scalar);
        for (int j = 0; j < d; ++j) {
            const Vec<F>& s = A.structure(i, j);
            for (int h = 0; h < d; ++h)
                if (!s[static_cast<std::size_t>(h)].is_zero())
                    L.at(h, j) = L.at(h, j) + xi.scaled(s[static_cast<std::size_t>(h)]);
        }
    }
    std::vector<MP> cp = char_poly(L);
    auto root = monic_nth_root(cp, n, MP::constant(d, A.one_scalar));
    if (!root)
        throw Error("reduced characteristic polynomial extraction failed (input not central simple of degree " +
                    std::to_string(n) + ")");
    NormForm<F> nf;
    nf.nvars = d;
    nf.degree = n;
    nf.form = (n % 2 == 0) ? (*root)[0] : -(*root)[0];
    if (!nf.form.is_homogeneous(n)) throw Error("norm form is not homogeneous (input not central simple)");
    return nf;
}

// --- trivial-zero decision over Q ------------------------------------------

struct DivisionVerdict {
    bool is_division = false;
    std::optional<std::vector<Rat>> witness; // nontrivial zero when not a division algebra
    std::string method;
};

namespace detail {

// Integer vectors ordered by L1 norm, leading coordinates first, positive
// before negative; the first zero found is the reported witness.
template <class Fn>
bool l1_enumerate(int dim, long radius, Fn&& visit) {
    std::vector<long> v(static_cast<std::size_t>(dim));
    auto rec = [&](auto&& self, int pos, long rem) -> bool {
        if (pos == dim - 1) {
            for (long x : {rem, -rem}) {
                v[static_cast<std::size_t>(pos)] = x;
                if (visit(v)) return true;
                if (rem == 0) break;
            }
            return false;
        }
        for (long mag = rem; mag >= 0; --mag) {
            for (long x : {mag, -mag}) {
                v[static_cast<std::size_t>(pos)] = x;
                if (self(self, pos + 1, rem - mag)) return true;
                if (mag == 0) break;
            }
        }
        return false;
    };
    for (long m = 1; m <= radius; ++m)
        if (rec(rec, 0, m)) return true;
    return false;
}

} // namespace detail

// Diagonal quadratic forms are decided by signature; everything else gets a
// bounded integer search (sound for homogeneous forms: any rational zero
// scales to an integer one). Outside both: Inconclusive, never a guess.
inline DivisionVerdict has_only_trivial_zero(const NormForm<Rat>& f, long radius = 12) {
    std::optional<std::vector<Rat>> witness;
    detail::l1_enumerate(f.nvars, radius, [&](const std::vector<long>& v) {
        std::vector<Rat> pt;
        pt.reserve(v.size());
        for (long x : v) pt.emplace_back(x);
        if (f.eval(pt).is_zero()) {
            witness = std::move(pt);
            return true;
        }
        return false;
    });
    if (witness) return {false, witness, "witness-search"};
    if (f.degree == 2) {
        bool diagonal = true;
        int sign = 0;
        bool mixed = false, missing = false;
        std::vector<bool> seen(static_cast<std::size_t>(f.nvars), false);
        for (const auto& [e, c] : f.form.terms) {
            int nz = 0, idx = -1;
            for (std::size_t i = 0; i < e.size(); ++i)
                if (e[i] != 0) {
                    ++nz;
                    idx = static_cast<int>(i);
                }
            if (nz != 1 || e[static_cast<std::size_t>(idx)] != 2) {
                diagonal = false;
                break;
            }
            seen[static_cast<std::size_t>(idx)] = true;
            int s = c.sign();
            if (sign == 0) sign = s;
            else if (s != sign) mixed = true;
        }
        for (bool b : seen) missing = missing || !b;
        if (diagonal && !mixed && !missing) return {true, std::nullopt, "definite-diagonal"};
        // indefinite diagonal with no witness inside the radius: undecided
    }
    throw Inconclusive("form outside the decidable class and no zero within search radius " +
                       std::to_string(radius));
}

inline DivisionVerdict is_division_algebra(const StructureAlgebra<Rat>& A, long radius = 12) {
    return has_only_trivial_zero(norm_form(A), radius);
}

// --- zero reductions (clearing denominators, shifting by t, setting t = 0) --

inline std::vector<Rat> reduce_zero_ratfunc(const NormForm<Rat>& f, const std::vector<RatFunc<Rat>>& z) {
    if (static_cast<int>(z.size()) != f.nvars) throw Error("zero vector length mismatch");
    bool all_zero = true;
    for (const auto& x : z) all_zero = all_zero && x.is_zero();
    if (all_zero) throw Error("reduce_zero_ratfunc: input vector is zero");
    auto embed = [](const Rat& c) { return RatFunc<Rat>(c); };
    if (!f.eval(z, embed).is_zero()) throw Error("reduce_zero_ratfunc: input is not a zero of the form");
    // clear denominators with the monic lcm
    Poly<Rat> l = Poly<Rat>::constant(Rat(1));
    for (const auto& x : z) l = (l * x.den) / gcd_poly(l, x.den);
    std::vector<Poly<Rat>> cleared;
    cleared.reserve(z.size());
    for (const auto& x : z) cleared.push_back(x.num * (l / x.den));
    // divide by the minimal t-valuation
    int vmin = -1;
    for (const auto& p : cleared) {
        if (p.is_zero()) continue;
        int v = 0;
        while (p.coeff(v).is_zero()) ++v;
        vmin = vmin < 0 ? v : std::min(vmin, v);
    }
    std::vector<Rat> out;
    out.reserve(cleared.size());
    for (const auto& p : cleared) out.push_back(p.coeff(vmin));
    if (!f.eval(out).is_zero() || [&] {
            for (const auto& x : out)
                if (!x.is_zero()) return false;
            return true;
        }())
        throw Error("reduce_zero_ratfunc: reduction did not produce a nonzero rational zero");
    return out;
}

inline std::vector<Rat> reduce_zero_series(const NormForm<Rat>& f, const std::vector<TruncSeries<Rat>>& z) {
    if (static_cast<int>(z.size()) != f.nvars) throw Error("zero vector length mismatch");
    int vmin = 0;
    bool any = false;
    for (const auto& s : z)
        if (!s.is_zero_to_order()) {
            vmin = any ? std::min(vmin, s.val) : s.val;
            any = true;
        }
    if (!any) throw Error("reduce_zero_series: all coordinates are zero to their order");
    int min_order = z.front().order;
    for (const auto& s : z) min_order = std::min(min_order, s.order);
    auto embed = [&](const Rat& c) { return TruncSeries<Rat>(0, {c}, min_order); };
    TruncSeries<Rat> value = f.eval(z, embed);
    if (!value.is_zero_to_order())
        throw Error("reduce_zero_series: input is not a zero of the form to the working order");
    // after shifting by t^{-vmin} the residual must still vanish mod t
    if (value.order - f.degree * vmin < 1)
        throw Error("reduce_zero_series: precision exhausted by the valuation shift");
    std::vector<Rat> out;
    out.reserve(z.size());
    for (const auto& s : z) {
        // constant term of t^{-vmin} s; must be inside the known range
        if (s.order <= vmin)
            throw Error("reduce_zero_series: precision exhausted by the valuation shift");
        out.push_back(s.coeff(vmin));
    }
    if (!f.eval(out).is_zero())
        throw Error("reduce_zero_series: reduced vector is not an exact zero");
    return out;
}

// JSON-ready view: sorted (exponent vector, coefficient) pairs.
template <class F>
std::vector<std::pair<std::vector<int>, std::string>> norm_form_entries(const NormForm<F>& f) {
    std::vector<std::pair<std::vector<int>, std::string>> out;
    for (const auto& [e, c] : f.form.terms) out.emplace_back(e, to_string(c));
    return out;
}

} // namespace skewgal
