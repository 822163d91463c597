#pragma once

// Sparse multivariate polynomials: exponent vector -> coefficient, used for
// the symbolic regular-representation characteristic polynomials behind the
// norm forms. Deterministic term order (lexicographic on exponent vectors).

#include <map>
#include <string>
#include <vector>

#include "skewgal/linalg.hpp"

namespace skewgal {

template <class F>
struct MPoly {
    int nvars = 0;
    std::map<std::vector<int>, F> terms; // nonzero coefficients only

    MPoly() = default;
    explicit MPoly(int n) : nvars(n) {}
    static MPoly constant(int n, F c) {
        MPoly p(n);
        if (!c.is_zero()) p.terms.emplace(std::vector<int>(static_cast<std::size_t>(n)), std::move(c));
        return p;
    }
    static MPoly variable(int n, int idx, const F& like) {
        MPoly p(n);
        std::vector<int> e(static_cast<std::size_t>(n));
        e[static_cast<std::size_t>(idx)] = 1;
        p.terms.emplace(std::move(e), one_like(like));
        return p;
    }

    bool is_zero() const { return terms.empty(); }

    void add_term(const std::vector<int>& e, const F& c) {
        if (c.is_zero()) return;
        auto it = terms.find(e);
        if (it == terms.end()) {
            terms.emplace(e, c);
        } else {
            it->second = it->second + c;
            if (it->second.is_zero()) terms.erase(it);
        }
    }

    MPoly operator-() const {
        MPoly r(nvars);
        for (const auto& [e, c] : terms) r.terms.emplace(e, -c);
        return r;
    }
    friend MPoly operator+(const MPoly& a, const MPoly& b) {
        MPoly r = a;
        r.nvars = std::max(a.nvars, b.nvars);
        for (const auto& [e, c] : b.terms) r.add_term(e, c);
        return r;
    }
    friend MPoly operator-(const MPoly& a, const MPoly& b) { return a + (-b); }
    friend MPoly operator*(const MPoly& a, const MPoly& b) {
        MPoly r(std::max(a.nvars, b.nvars));
        for (const auto& [ea, ca] : a.terms)
            for (const auto& [eb, cb] : b.terms) {
                std::vector<int> e(ea.size());
                for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
                r.add_term(e, ca * cb);
            }
        return r;
    }
    friend bool operator==(const MPoly& a, const MPoly& b) { return a.terms == b.terms; }
    friend bool operator!=(const MPoly& a, const MPoly& b) { return !(a == b); }

    // only division by a nonzero constant is defined
    friend MPoly operator/(const MPoly& a, const MPoly& b) {
        if (b.terms.size() != 1) throw Error("multivariate division by a non-constant");
        const auto& [e, c] = *b.terms.begin();
        for (int k : e)
            if (k != 0) throw Error("multivariate division by a non-constant");
        return a.scaled(one_like(c) / c);
    }

    MPoly scaled(const F& s) const {
        MPoly r(nvars);
        if (s.is_zero()) return r;
        for (const auto& [e, c] : terms) {
            F x = c * s;
            if (!x.is_zero()) r.terms.emplace(e, std::move(x));
        }
        return r;
    }

    int total_degree() const {
        int d = 0;
        for (const auto& [e, c] : terms) {
            int s = 0;
            for (int k : e) s += k;
            d = std::max(d, s);
        }
        return d;
    }
    bool is_homogeneous(int deg) const {
        for (const auto& [e, c] : terms) {
            int s = 0;
            for (int k : e) s += k;
            if (s != deg) return false;
        }
        return true;
    }

    template <class G, class Fn>
    G eval(const std::vector<G>& pts, Fn embed) const {
        G acc = embed(F{}); // embed the zero so precision metadata survives
        for (const auto& [e, c] : terms) {
            G term = embed(c);
            for (std::size_t i = 0; i < e.size(); ++i)
                for (int k = 0; k < e[i]; ++k) term = term * pts[i];
            acc = acc + term;
        }
        return acc;
    }
    F eval(const std::vector<F>& pts) const {
        return eval<F>(pts, [](const F& c) { return c; });
    }

    template <class G, class Fn>
    MPoly<G> map_coeffs(Fn embed) const {
        MPoly<G> r(nvars);
        for (const auto& [e, c] : terms) {
            G x = embed(c);
            if (!x.is_zero()) r.terms.emplace(e, std::move(x));
        }
        return r;
    }
};

template <class F>
bool is_zero(const MPoly<F>& p) {
    return p.is_zero();
}
template <class F>
MPoly<F> one_like(const MPoly<F>& p) {
    F c = p.terms.empty() ? one_like(F{}) : one_like(p.terms.begin()->second);
    return MPoly<F>::constant(p.nvars, std::move(c));
}
template <class F>
MPoly<F> from_int_like(const MPoly<F>& p, long k) {
    F c = p.terms.empty() ? from_int_like(F{}, k) : from_int_like(p.terms.begin()->second, k);
    return MPoly<F>::constant(p.nvars, std::move(c));
}

template <class F>
std::string to_string(const MPoly<F>& p, const std::string& stem = "x") {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : p.terms) {
        std::string cs = to_string(c);
        bool neg = !cs.empty() && cs[0] == '-';
        if (neg) cs = cs.substr(1);
        out += first ? (neg ? "-" : "") : (neg ? " - " : " + ");
        first = false;
        std::string mono;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += stem + std::to_string(i + 1);
            if (e[i] != 1) mono += "^" + std::to_string(e[i]);
        }
        if (mono.empty()) {
            out += cs;
        } else {
            if (cs != "1") out += (detail::needs_parens(cs) ? "(" + cs + ")" : cs) + "*";
            out += mono;
        }
    }
    return out;
}

// Characteristic polynomial of a square matrix over a commutative Q-algebra
// by Faddeev-LeVerrier; returned monic, coefficients low degree first.
template <class R>
std::vector<R> char_poly(const Matrix<R>& A) {
    if (A.rows != A.cols) throw Error("characteristic polynomial of a non-square matrix");
    int n = A.rows;
    const R like = [&] {
        for (const auto& x : A.a)
            if (!x.is_zero()) return x;
        return A.a.empty() ? R{} : A.a.front();
    }();
    R one = one_like(like);
    std::vector<R> cs(static_cast<std::size_t>(n) + 1); // cs[k] = coeff of lambda^k
    cs[static_cast<std::size_t>(n)] = one;
    Matrix<R> M = A;
    std::vector<R> c(static_cast<std::size_t>(n) + 1);
    for (int k = 1; k <= n; ++k) {
        R tr = M.trace();
        R ck = -(tr / from_int_like(like, k));
        c[static_cast<std::size_t>(k)] = ck;
        cs[static_cast<std::size_t>(n - k)] = ck;
        if (k < n) {
            Matrix<R> Mk = M;
            for (int i = 0; i < n; ++i) Mk.at(i, i) = Mk.at(i, i) + ck;
            M = A * Mk;
        }
    }
    return cs;
}

} // namespace skewgal
