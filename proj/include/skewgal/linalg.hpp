#pragma once

// Small dense exact linear algebra over a field: rref, rank, kernel, solve.
// Rows over k(t) are cleared to polynomial entries before elimination to
// keep gcd work cheap.

#include <optional>
#include <vector>

#include "skewgal/ratfunc.hpp"

namespace skewgal {

template <class F>
using Vec = std::vector<F>;

template <class F>
bool is_zero_vec(const Vec<F>& v) {
    for (const auto& x : v)
        if (!x.is_zero()) return false;
    return true;
}
template <class F>
Vec<F> add_vec(const Vec<F>& a, const Vec<F>& b) {
    Vec<F> r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}
template <class F>
Vec<F> sub_vec(const Vec<F>& a, const Vec<F>& b) {
    Vec<F> r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}
template <class F>
Vec<F> scale_vec(const Vec<F>& a, const F& s) {
    Vec<F> r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] * s;
    return r;
}
template <class F>
Vec<F> basis_vec(int dim, int i, const F& like) {
    Vec<F> r(static_cast<std::size_t>(dim));
    r[static_cast<std::size_t>(i)] = one_like(like);
    return r;
}

template <class F>
struct Matrix {
    int rows = 0, cols = 0;
    std::vector<F> a;

    Matrix() = default;
    Matrix(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * static_cast<std::size_t>(c)) {}
    F& at(int i, int j) { return a[static_cast<std::size_t>(i) * cols + j]; }
    const F& at(int i, int j) const { return a[static_cast<std::size_t>(i) * cols + j]; }

    static Matrix identity(int n, const F& like) {
        Matrix m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = one_like(like);
        return m;
    }

    friend Matrix operator*(const Matrix& x, const Matrix& y) {
        if (x.cols != y.rows) throw Error("matrix product dimension mismatch");
        Matrix r(x.rows, y.cols);
        for (int i = 0; i < x.rows; ++i)
            for (int k = 0; k < x.cols; ++k) {
                if (x.at(i, k).is_zero()) continue;
                for (int j = 0; j < y.cols; ++j)
                    r.at(i, j) = r.at(i, j) + x.at(i, k) * y.at(k, j);
            }
        return r;
    }
    friend Matrix operator-(const Matrix& x, const Matrix& y) {
        if (x.rows != y.rows || x.cols != y.cols) throw Error("matrix difference dimension mismatch");
        Matrix r(x.rows, x.cols);
        for (std::size_t i = 0; i < r.a.size(); ++i) r.a[i] = x.a[i] - y.a[i];
        return r;
    }
    friend bool operator==(const Matrix& x, const Matrix& y) {
        return x.rows == y.rows && x.cols == y.cols && x.a == y.a;
    }

    Vec<F> apply(const Vec<F>& v) const {
        if (static_cast<int>(v.size()) != cols) throw Error("matrix apply dimension mismatch");
        Vec<F> r(static_cast<std::size_t>(rows));
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j)
                if (!at(i, j).is_zero()) r[static_cast<std::size_t>(i)] = r[static_cast<std::size_t>(i)] + at(i, j) * v[static_cast<std::size_t>(j)];
        return r;
    }

    F trace() const {
        F s{};
        for (int i = 0; i < rows; ++i) s = s + at(i, i);
        return s;
    }

    static Matrix stacked(const std::vector<Matrix>& parts) {
        if (parts.empty()) return Matrix{};
        int c = parts.front().cols, r = 0;
        for (const auto& p : parts) r += p.rows;
        Matrix m(r, c);
        int off = 0;
        for (const auto& p : parts) {
            for (int i = 0; i < p.rows; ++i)
                for (int j = 0; j < c; ++j) m.at(off + i, j) = p.at(i, j);
            off += p.rows;
        }
        return m;
    }
};

// Pre-elimination row cleanup hooks. The k(t) overload clears denominators
// and divides off the numerator content.
template <class F>
void cleanup_row(std::vector<F>&, int, int) {}

template <class F>
void cleanup_row(std::vector<RatFunc<F>>& a, int begin, int end) {
    Poly<F> l = Poly<F>::constant(one_like(F{}));
    for (int j = begin; j < end; ++j) {
        const auto& d = a[static_cast<std::size_t>(j)].den;
        l = (l * d) / gcd_poly(l, d);
    }
    Poly<F> content;
    std::vector<Poly<F>> nums(static_cast<std::size_t>(end - begin));
    for (int j = begin; j < end; ++j) {
        const auto& x = a[static_cast<std::size_t>(j)];
        nums[static_cast<std::size_t>(j - begin)] = x.num * (l / x.den);
        content = gcd_poly(content, nums[static_cast<std::size_t>(j - begin)]);
    }
    if (content.is_zero()) return;
    for (int j = begin; j < end; ++j)
        a[static_cast<std::size_t>(j)] = RatFunc<F>(nums[static_cast<std::size_t>(j - begin)] / content);
}

// Reduced row echelon form. Returns the pivot column of each pivot row.
template <class F>
std::vector<int> rref(Matrix<F>& m) {
    for (int i = 0; i < m.rows; ++i) {
        std::vector<F> tmp(m.a.begin() + static_cast<std::ptrdiff_t>(i) * m.cols,
                           m.a.begin() + static_cast<std::ptrdiff_t>(i + 1) * m.cols);
        cleanup_row(tmp, 0, m.cols);
        for (int j = 0; j < m.cols; ++j) m.at(i, j) = tmp[static_cast<std::size_t>(j)];
    }
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < m.cols && row < m.rows; ++col) {
        int p = -1;
        for (int i = row; i < m.rows; ++i)
            if (!m.at(i, col).is_zero()) {
                p = i;
                break;
            }
        if (p < 0) continue;
        if (p != row)
            for (int j = 0; j < m.cols; ++j) std::swap(m.at(p, j), m.at(row, j));
        F inv = one_like(m.at(row, col)) / m.at(row, col);
        for (int j = col; j < m.cols; ++j) m.at(row, j) = m.at(row, j) * inv;
        for (int i = 0; i < m.rows; ++i) {
            if (i == row || m.at(i, col).is_zero()) continue;
            F f = m.at(i, col);
            std::vector<F> tmp(m.a.begin() + static_cast<std::ptrdiff_t>(i) * m.cols,
                               m.a.begin() + static_cast<std::ptrdiff_t>(i + 1) * m.cols);
            for (int j = col; j < m.cols; ++j) tmp[static_cast<std::size_t>(j)] = tmp[static_cast<std::size_t>(j)] - f * m.at(row, j);
            // rescaling a finished pivot row would break the reduced form
            if (i > row) cleanup_row(tmp, 0, m.cols);
            for (int j = 0; j < m.cols; ++j) m.at(i, j) = tmp[static_cast<std::size_t>(j)];
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

template <class F>
int rank(Matrix<F> m) {
    return static_cast<int>(rref(m).size());
}

// Basis of the right kernel {v : Mv = 0}.
template <class F>
std::vector<Vec<F>> kernel_basis(Matrix<F> m) {
    const F like = m.a.empty() ? F{} : m.a.front();
    std::vector<int> pivots = rref(m);
    std::vector<bool> is_pivot(static_cast<std::size_t>(m.cols), false);
    for (int p : pivots) is_pivot[static_cast<std::size_t>(p)] = true;
    std::vector<Vec<F>> basis;
    for (int free = 0; free < m.cols; ++free) {
        if (is_pivot[static_cast<std::size_t>(free)]) continue;
        Vec<F> v(static_cast<std::size_t>(m.cols));
        v[static_cast<std::size_t>(free)] = one_like(like);
        for (std::size_t r = 0; r < pivots.size(); ++r)
            v[static_cast<std::size_t>(pivots[r])] = -m.at(static_cast<int>(r), free);
        basis.push_back(std::move(v));
    }
    return basis;
}

// Any exact solution of Mx = b, or nullopt.
template <class F>
std::optional<Vec<F>> solve(const Matrix<F>& m, const Vec<F>& b) {
    Matrix<F> aug(m.rows, m.cols + 1);
    for (int i = 0; i < m.rows; ++i) {
        for (int j = 0; j < m.cols; ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, m.cols) = b[static_cast<std::size_t>(i)];
    }
    std::vector<int> pivots = rref(aug);
    if (!pivots.empty() && pivots.back() == m.cols) return std::nullopt;
    Vec<F> x(static_cast<std::size_t>(m.cols));
    for (std::size_t r = 0; r < pivots.size(); ++r) x[static_cast<std::size_t>(pivots[r])] = aug.at(static_cast<int>(r), m.cols);
    return x;
}

// Subspaces are given by spanning lists; equality goes through ranks so the
// answer is basis-independent.
template <class F>
struct Subspace {
    std::vector<Vec<F>> basis;
    int dim() const { return static_cast<int>(basis.size()); }
};

template <class F>
Matrix<F> rows_matrix(const std::vector<Vec<F>>& rows, int cols) {
    Matrix<F> m(static_cast<int>(rows.size()), cols);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (int j = 0; j < cols; ++j) m.at(static_cast<int>(i), j) = rows[i][static_cast<std::size_t>(j)];
    return m;
}

// Reduce a spanning set to an independent basis (canonical rref rows).
template <class F>
Subspace<F> subspace_span(const std::vector<Vec<F>>& spanning, int ambient) {
    Matrix<F> m = rows_matrix(spanning, ambient);
    std::vector<int> pivots = rref(m);
    Subspace<F> s;
    for (std::size_t r = 0; r < pivots.size(); ++r) {
        Vec<F> v(static_cast<std::size_t>(ambient));
        for (int j = 0; j < ambient; ++j) v[static_cast<std::size_t>(j)] = m.at(static_cast<int>(r), j);
        s.basis.push_back(std::move(v));
    }
    return s;
}

template <class F>
bool subspace_contains(const Subspace<F>& s, const Vec<F>& v, int ambient) {
    if (is_zero_vec(v)) return true;
    std::vector<Vec<F>> rows = s.basis;
    int r0 = rank(rows_matrix(rows, ambient));
    rows.push_back(v);
    return rank(rows_matrix(rows, ambient)) == r0;
}

template <class F>
bool subspace_equal(const Subspace<F>& a, const Subspace<F>& b, int ambient) {
    std::vector<Vec<F>> stacked = a.basis;
    stacked.insert(stacked.end(), b.basis.begin(), b.basis.end());
    int ra = rank(rows_matrix(a.basis, ambient));
    int rb = rank(rows_matrix(b.basis, ambient));
    int rs = rank(rows_matrix(stacked, ambient));
    return ra == rb && rb == rs;
}

} // namespace skewgal
