#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <ostream>

#include "wittlab/integer.hpp"

namespace wittlab {

/// Dense matrix over arbitrary-precision integers, row major.
class Mat {
  public:
    Mat() = default;
    Mat(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {}
    Mat(int rows, int cols, std::initializer_list<Int> entries)
        : rows_(rows), cols_(cols), a_(entries) {
        if (static_cast<size_t>(rows) * cols != a_.size())
            throw input_error("matrix literal has wrong entry count");
    }

    static Mat identity(int n) {
        Mat m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Int& operator()(int r, int c) { return a_[static_cast<size_t>(r) * cols_ + c]; }
    const Int& operator()(int r, int c) const { return a_[static_cast<size_t>(r) * cols_ + c]; }

    bool operator==(const Mat& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }

    Mat transposed() const {
        Mat t(cols_, rows_);
        for (int r = 0; r < rows_; ++r)
            for (int c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
        return t;
    }

    Mat operator*(const Mat& o) const {
        if (cols_ != o.rows_) throw input_error("matrix product shape mismatch");
        Mat p(rows_, o.cols_);
        for (int r = 0; r < rows_; ++r)
            for (int k = 0; k < cols_; ++k) {
                const Int& x = (*this)(r, k);
                if (x == 0) continue;
                for (int c = 0; c < o.cols_; ++c) p(r, c) += x * o(k, c);
            }
        return p;
    }

    IntVec operator*(const IntVec& v) const {
        if (cols_ != static_cast<int>(v.size())) throw input_error("matrix-vector shape mismatch");
        IntVec w(rows_);
        for (int r = 0; r < rows_; ++r)
            for (int c = 0; c < cols_; ++c)
                if ((*this)(r, c) != 0) w[r] += (*this)(r, c) * v[c];
        return w;
    }

    IntVec col(int c) const {
        IntVec v(rows_);
        for (int r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
        return v;
    }

    void set_col(int c, const IntVec& v) {
        for (int r = 0; r < rows_; ++r) (*this)(r, c) = v[r];
    }

    bool is_zero() const {
        return std::all_of(a_.begin(), a_.end(), [](const Int& x) { return x == 0; });
    }

    /// Horizontal concatenation [A | B].
    static Mat hcat(const Mat& a, const Mat& b) {
        if (a.rows() != b.rows()) throw input_error("hcat row mismatch");
        Mat m(a.rows(), a.cols() + b.cols());
        for (int r = 0; r < a.rows(); ++r) {
            for (int c = 0; c < a.cols(); ++c) m(r, c) = a(r, c);
            for (int c = 0; c < b.cols(); ++c) m(r, a.cols() + c) = b(r, c);
        }
        return m;
    }

    static Mat block_diag(const Mat& a, const Mat& b) {
        Mat m(a.rows() + b.rows(), a.cols() + b.cols());
        for (int r = 0; r < a.rows(); ++r)
            for (int c = 0; c < a.cols(); ++c) m(r, c) = a(r, c);
        for (int r = 0; r < b.rows(); ++r)
            for (int c = 0; c < b.cols(); ++c) m(a.rows() + r, a.cols() + c) = b(r, c);
        return m;
    }

  private:
    int rows_ = 0, cols_ = 0;
    IntVec a_;
};

inline std::ostream& operator<<(std::ostream& os, const Mat& m) {
    os << "[";
    for (int r = 0; r < m.rows(); ++r) {
        os << (r ? "; " : "");
        for (int c = 0; c < m.cols(); ++c) os << (c ? " " : "") << m(r, c);
    }
    return os << "]";
}

/// Fraction-free Gaussian elimination (Bareiss). Exact for any square matrix.
inline Int determinant(Mat m) {
    if (m.rows() != m.cols()) throw input_error("determinant of non-square matrix");
    const int n = m.rows();
    if (n == 0) return 1;
    Int sign = 1, prev = 1;
    for (int k = 0; k + 1 < n; ++k) {
        if (m(k, k) == 0) {
            int piv = -1;
            for (int r = k + 1; r < n; ++r)
                if (m(r, k) != 0) { piv = r; break; }
            if (piv < 0) return 0;
            for (int c = k; c < n; ++c) std::swap(m(k, c), m(piv, c));
            sign = -sign;
        }
        for (int r = k + 1; r < n; ++r) {
            for (int c = k + 1; c < n; ++c) {
                m(r, c) = (m(r, c) * m(k, k) - m(r, k) * m(k, c)) / prev;
            }
            m(r, k) = 0;
        }
        prev = m(k, k);
    }
    return sign * m(n - 1, n - 1);
}

inline bool is_unimodular(const Mat& m) {
    if (m.rows() != m.cols()) return false;
    Int d = determinant(m);
    return d == 1 || d == -1;
}

/// Inverse of a unimodular integer matrix via integer Gauss-Jordan.
/// Each column gcd of the running submatrix divides its determinant, so
/// pivots reduce to 1 and the elimination stays over the integers.
inline Mat inverse_unimodular(const Mat& m) {
    if (!is_unimodular(m)) throw input_error("matrix is not unimodular");
    const int n = m.rows();
    Mat a = m, inv = Mat::identity(n);
    for (int k = 0; k < n; ++k) {
        // gcd-reduce column k below and at the pivot until a unit appears
        while (true) {
            int best = -1;
            for (int r = k; r < n; ++r)
                if (a(r, k) != 0 && (best < 0 || abs(a(r, k)) < abs(a(best, k)))) best = r;
            if (best < 0) throw input_error("unexpected singular pivot");
            if (best != k)
                for (int c = 0; c < n; ++c) {
                    std::swap(a(k, c), a(best, c));
                    std::swap(inv(k, c), inv(best, c));
                }
            bool reduced = false;
            for (int r = k + 1; r < n; ++r) {
                if (a(r, k) == 0) continue;
                Int q = a(r, k) / a(k, k);
                if (q != 0) {
                    for (int c = 0; c < n; ++c) {
                        a(r, c) -= q * a(k, c);
                        inv(r, c) -= q * inv(k, c);
                    }
                }
                if (a(r, k) != 0) reduced = true;
            }
            if (!reduced) break;
        }
        if (a(k, k) < 0)
            for (int c = 0; c < n; ++c) { a(k, c) = -a(k, c); inv(k, c) = -inv(k, c); }
        if (a(k, k) != 1) throw input_error("matrix is not unimodular");
        for (int r = 0; r < k; ++r) {
            Int q = a(r, k);
            if (q != 0)
                for (int c = 0; c < n; ++c) {
                    a(r, c) -= q * a(k, c);
                    inv(r, c) -= q * inv(k, c);
                }
        }
    }
    return inv;
}

}  // namespace wittlab
