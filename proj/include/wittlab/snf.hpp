#pragma once

#include <optional>
#include <tuple>

#include "wittlab/matrix.hpp"

namespace wittlab {

/// Smith normal form D = U * A * V with U, V unimodular and the diagonal
/// divisibility chain d1 | d2 | ... All diagonal entries nonnegative.
struct SmithForm {
    Mat d;  // diagonal form, same shape as input
    Mat u;  // rows x rows
    Mat v;  // cols x cols
    int rank = 0;
    IntVec invariant_factors() const {
        IntVec f;
        for (int i = 0; i < rank; ++i) f.push_back(d(i, i));
        return f;
    }
};

namespace detail {

inline void snf_swap_rows(Mat& d, Mat& u, int a, int b) {
    if (a == b) return;
    for (int c = 0; c < d.cols(); ++c) std::swap(d(a, c), d(b, c));
    for (int c = 0; c < u.cols(); ++c) std::swap(u(a, c), u(b, c));
}

inline void snf_swap_cols(Mat& d, Mat& v, int a, int b) {
    if (a == b) return;
    for (int r = 0; r < d.rows(); ++r) std::swap(d(r, a), d(r, b));
    for (int r = 0; r < v.rows(); ++r) std::swap(v(r, a), v(r, b));
}

// row[a] -= q * row[b], mirrored in U
inline void snf_row_op(Mat& d, Mat& u, int a, int b, const Int& q) {
    if (q == 0) return;
    for (int c = 0; c < d.cols(); ++c) d(a, c) -= q * d(b, c);
    for (int c = 0; c < u.cols(); ++c) u(a, c) -= q * u(b, c);
}

// col[a] -= q * col[b], mirrored in V
inline void snf_col_op(Mat& d, Mat& v, int a, int b, const Int& q) {
    if (q == 0) return;
    for (int r = 0; r < d.rows(); ++r) d(r, a) -= q * d(r, b);
    for (int r = 0; r < v.rows(); ++r) v(r, a) -= q * v(r, b);
}

}  // namespace detail

inline bool smith_form_certifies(const SmithForm& s, const Mat& a);

inline SmithForm smith_normal_form(const Mat& a) {
    SmithForm s{a, Mat::identity(a.rows()), Mat::identity(a.cols())};
    Mat& d = s.d;
    const int m = a.rows(), n = a.cols();
    int t = 0;
    while (t < m && t < n) {
        // pivot of minimal absolute value in the remaining block
        int pr = -1, pc = -1;
        for (int r = t; r < m; ++r)
            for (int c = t; c < n; ++c)
                if (d(r, c) != 0 && (pr < 0 || abs(d(r, c)) < abs(d(pr, pc)))) { pr = r; pc = c; }
        if (pr < 0) break;
        detail::snf_swap_rows(d, s.u, t, pr);
        detail::snf_swap_cols(d, s.v, t, pc);

        bool clean = true;
        for (int r = t + 1; r < m; ++r) {
            Int q = d(r, t) / d(t, t);
            detail::snf_row_op(d, s.u, r, t, q);
            if (d(r, t) != 0) clean = false;
        }
        for (int c = t + 1; c < n; ++c) {
            Int q = d(t, c) / d(t, t);
            detail::snf_col_op(d, s.v, c, t, q);
            if (d(t, c) != 0) clean = false;
        }
        if (!clean) continue;  // residues became new smaller pivot candidates

        // enforce divisibility: pivot must divide every remaining entry
        bool divides_all = true;
        for (int r = t + 1; r < m && divides_all; ++r)
            for (int c = t + 1; c < n && divides_all; ++c)
                if (d(r, c) % d(t, t) != 0) {
                    detail::snf_row_op(d, s.u, t, r, Int(-1));  // fold row r into pivot row
                    divides_all = false;
                }
        if (!divides_all) continue;

        if (d(t, t) < 0) {
            for (int c = t; c < n; ++c) d(t, c) = -d(t, c);
            for (int c = 0; c < m; ++c) s.u(t, c) = -s.u(t, c);
        }
        ++t;
    }
    s.rank = t;
#ifndef NDEBUG
    // assertion builds re-verify every decomposition by multiplication
    if (!smith_form_certifies(s, a)) throw input_error("smith normal form failed to certify");
#endif
    return s;
}

/// Verifies D == U*A*V, unimodularity, and the divisibility chain.
inline bool smith_form_certifies(const SmithForm& s, const Mat& a) {
    if (!(s.u * a * s.v == s.d)) return false;
    if (!is_unimodular(s.u) || !is_unimodular(s.v)) return false;
    for (int i = 0; i + 1 < s.rank; ++i)
        if (s.d(i + 1, i + 1) % s.d(i, i) != 0) return false;
    for (int r = 0; r < s.d.rows(); ++r)
        for (int c = 0; c < s.d.cols(); ++c)
            if (r != c && s.d(r, c) != 0) return false;
    return true;
}

inline int integer_rank(const Mat& a) { return smith_normal_form(a).rank; }

/// Basis of the saturated right kernel {x : A x = 0}, as matrix columns.
/// With D = U A V, the kernel is spanned by the last cols-rank columns of V.
inline Mat kernel_basis(const Mat& a) {
    SmithForm s = smith_normal_form(a);
    const int n = a.cols(), k = n - s.rank;
    Mat ker(n, k);
    for (int c = 0; c < k; ++c)
        for (int r = 0; r < n; ++r) ker(r, c) = s.v(r, s.rank + c);
    return ker;
}

/// Integer solution of A x = b, if one exists.
inline std::optional<IntVec> solve_integer(const Mat& a, const IntVec& b) {
    if (static_cast<int>(b.size()) != a.rows()) throw input_error("solve shape mismatch");
    SmithForm s = smith_normal_form(a);
    IntVec ub = s.u * b;
    IntVec y(a.cols());
    for (int i = 0; i < a.rows(); ++i) {
        if (i < s.rank) {
            if (ub[i] % s.d(i, i) != 0) return std::nullopt;
            y[i] = ub[i] / s.d(i, i);
        } else if (ub[i] != 0) {
            return std::nullopt;
        }
    }
    return s.v * y;
}

}  // namespace wittlab
