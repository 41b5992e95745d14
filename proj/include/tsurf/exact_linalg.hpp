#pragma once

#include "tsurf/numeric.hpp"

#include <algorithm>
#include <cassert>
#include <cstddef>
#include <utility>
#include <vector>

namespace tsurf {

template <typename T>
struct Mat {
    size_t rows = 0, cols = 0;
    std::vector<T> a;

    Mat() = default;
    Mat(size_t r, size_t c) : rows(r), cols(c), a(r * c, T(0)) {}

    T& operator()(size_t i, size_t j) { return a[i * cols + j]; }
    const T& operator()(size_t i, size_t j) const { return a[i * cols + j]; }

    static Mat identity(size_t n) {
        Mat m(n, n);
        for (size_t i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    Mat transposed() const {
        Mat m(cols, rows);
        for (size_t i = 0; i < rows; ++i)
            for (size_t j = 0; j < cols; ++j) m(j, i) = (*this)(i, j);
        return m;
    }
};

using IMat = Mat<Int>;
using QMat = Mat<Rat>;

inline IMat imat_mul(const IMat& A, const IMat& B) {
    assert(A.cols == B.rows);
    IMat C(A.rows, B.cols);
    for (size_t i = 0; i < A.rows; ++i)
        for (size_t k = 0; k < A.cols; ++k) {
            if (A(i, k) == 0) continue;
            for (size_t j = 0; j < B.cols; ++j) C(i, j) += A(i, k) * B(k, j);
        }
    return C;
}

inline std::vector<Int> imat_apply(const IMat& A, const std::vector<Int>& x) {
    assert(A.cols == x.size());
    std::vector<Int> y(A.rows, 0);
    for (size_t i = 0; i < A.rows; ++i)
        for (size_t j = 0; j < A.cols; ++j)
            if (A(i, j) != 0) y[i] += A(i, j) * x[j];
    return y;
}

/// Reduced row echelon form in place; returns pivot columns in order.
inline std::vector<size_t> rref(QMat& M) {
    std::vector<size_t> pivots;
    size_t row = 0;
    for (size_t col = 0; col < M.cols && row < M.rows; ++col) {
        size_t sel = row;
        while (sel < M.rows && M(sel, col) == 0) ++sel;
        if (sel == M.rows) continue;
        if (sel != row)
            for (size_t j = 0; j < M.cols; ++j) std::swap(M(sel, j), M(row, j));
        Rat inv = Rat(1) / M(row, col);
        for (size_t j = col; j < M.cols; ++j) M(row, j) *= inv;
        for (size_t i = 0; i < M.rows; ++i) {
            if (i == row || M(i, col) == 0) continue;
            Rat f = M(i, col);
            for (size_t j = col; j < M.cols; ++j) M(i, j) -= f * M(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

inline size_t rank_of(QMat M) { return rref(M).size(); }

/// One rational solution of A x = b, or empty if inconsistent.
inline bool solve_rational(const QMat& A, const std::vector<Rat>& b, std::vector<Rat>& x_out) {
    QMat aug(A.rows, A.cols + 1);
    for (size_t i = 0; i < A.rows; ++i) {
        for (size_t j = 0; j < A.cols; ++j) aug(i, j) = A(i, j);
        aug(i, A.cols) = b[i];
    }
    auto pivots = rref(aug);
    for (size_t p : pivots)
        if (p == A.cols) return false;
    x_out.assign(A.cols, Rat(0));
    for (size_t r = 0; r < pivots.size(); ++r) x_out[pivots[r]] = aug(r, A.cols);
    return true;
}

struct SmithForm {
    IMat D;          // U * A * V = D, diagonal with divisibility chain
    IMat U, Uinv;    // unimodular row transform and its inverse
    IMat V, Vinv;    // unimodular column transform and its inverse
    size_t rank = 0; // number of nonzero diagonal entries
};

/// Smith normal form with all four transform matrices tracked exactly.
inline SmithForm smith_normal_form(IMat A) {
    const size_t m = A.rows, n = A.cols;
    SmithForm s;
    s.U = IMat::identity(m);
    s.Uinv = IMat::identity(m);
    s.V = IMat::identity(n);
    s.Vinv = IMat::identity(n);

    auto row_swap = [&](size_t i, size_t j) {
        if (i == j) return;
        for (size_t c = 0; c < n; ++c) std::swap(A(i, c), A(j, c));
        for (size_t c = 0; c < m; ++c) std::swap(s.U(i, c), s.U(j, c));
        for (size_t r = 0; r < m; ++r) std::swap(s.Uinv(r, i), s.Uinv(r, j));
    };
    auto col_swap = [&](size_t i, size_t j) {
        if (i == j) return;
        for (size_t r = 0; r < m; ++r) std::swap(A(r, i), A(r, j));
        for (size_t r = 0; r < n; ++r) std::swap(s.V(r, i), s.V(r, j));
        for (size_t c = 0; c < n; ++c) std::swap(s.Vinv(i, c), s.Vinv(j, c));
    };
    // row i -= f * row j  (A, U); Uinv gets the inverse op on columns.
    auto row_addmul = [&](size_t i, size_t j, const Int& f) {
        if (f == 0) return;
        for (size_t c = 0; c < n; ++c) A(i, c) -= f * A(j, c);
        for (size_t c = 0; c < m; ++c) s.U(i, c) -= f * s.U(j, c);
        for (size_t r = 0; r < m; ++r) s.Uinv(r, j) += f * s.Uinv(r, i);
    };
    auto col_addmul = [&](size_t i, size_t j, const Int& f) {
        if (f == 0) return;
        for (size_t r = 0; r < m; ++r) A(r, i) -= f * A(r, j);
        for (size_t r = 0; r < n; ++r) s.V(r, i) -= f * s.V(r, j);
        for (size_t c = 0; c < n; ++c) s.Vinv(j, c) += f * s.Vinv(i, c);
    };
    auto row_negate = [&](size_t i) {
        for (size_t c = 0; c < n; ++c) A(i, c) = -A(i, c);
        for (size_t c = 0; c < m; ++c) s.U(i, c) = -s.U(i, c);
        for (size_t r = 0; r < m; ++r) s.Uinv(r, i) = -s.Uinv(r, i);
    };

    size_t t = 0;
    while (t < m && t < n) {
        // locate a nonzero entry of minimal magnitude in the trailing block
        size_t pi = m, pj = n;
        Int best = 0;
        for (size_t i = t; i < m; ++i)
            for (size_t j = t; j < n; ++j) {
                if (A(i, j) == 0) continue;
                Int v = boost::multiprecision::abs(A(i, j));
                if (pi == m || v < best) {
                    best = v;
                    pi = i;
                    pj = j;
                }
            }
        if (pi == m) break;
        row_swap(t, pi);
        col_swap(t, pj);

        bool again = true;
        while (again) {
            again = false;
            for (size_t i = t + 1; i < m; ++i) {
                if (A(i, t) == 0) continue;
                Int q = A(i, t) / A(t, t);
                row_addmul(i, t, q);
                if (A(i, t) != 0) {
                    row_swap(t, i);
                    again = true;
                }
            }
            for (size_t j = t + 1; j < n; ++j) {
                if (A(t, j) == 0) continue;
                Int q = A(t, j) / A(t, t);
                col_addmul(j, t, q);
                if (A(t, j) != 0) {
                    col_swap(t, j);
                    again = true;
                }
            }
        }
        if (A(t, t) < 0) row_negate(t);

        // enforce divisibility of the remaining block by the pivot
        bool fixed = false;
        for (size_t i = t + 1; i < m && !fixed; ++i)
            for (size_t j = t + 1; j < n && !fixed; ++j)
                if (A(i, j) % A(t, t) != 0) {
                    row_addmul(t, i, Int(-1));
                    fixed = true;
                }
        if (fixed) continue;  // redo the elimination at the same t
        ++t;
    }
    s.rank = t;
    s.D = std::move(A);
    return s;
}

/// Basis of the saturated integer kernel {x in Z^n : A x = 0}, as columns.
inline IMat integer_kernel(const IMat& A) {
    SmithForm s = smith_normal_form(A);
    size_t n = A.cols;
    size_t k = n - s.rank;
    IMat K(n, k);
    for (size_t j = 0; j < k; ++j)
        for (size_t i = 0; i < n; ++i) K(i, j) = s.V(i, s.rank + j);
    return K;
}

/// Divides the vector by the gcd of its entries (no-op on the zero vector).
inline void make_primitive(std::vector<Int>& v) {
    Int g = gcd_vec(v);
    if (g > 1)
        for (Int& x : v) x /= g;
}

/// Scales a rational vector to the primitive integer vector on the same ray.
inline std::vector<Int> primitive_integer_ray(const std::vector<Rat>& v) {
    Int lcm = 1;
    for (const Rat& r : v) {
        Int d = boost::multiprecision::denominator(r);
        lcm = lcm / gcd_int(lcm, d) * d;
    }
    std::vector<Int> w;
    w.reserve(v.size());
    for (const Rat& r : v)
        w.push_back(boost::multiprecision::numerator(r) *
                    (lcm / boost::multiprecision::denominator(r)));
    make_primitive(w);
    return w;
}

}  // namespace tsurf
