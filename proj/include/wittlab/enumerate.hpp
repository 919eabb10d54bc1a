#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <vector>

#include "wittlab/quadratic_module.hpp"

namespace wittlab {

namespace detail {

/// Advances a column through [-b, b]^n in lexicographic order (first
/// coordinate most significant). Returns false when the odometer wraps.
inline bool next_candidate(std::vector<int32_t>& c, int bound) {
    for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i) {
        if (c[i] < bound) {
            ++c[i];
            std::fill(c.begin() + i + 1, c.end(), -bound);
            return true;
        }
    }
    return false;
}

template <typename T>
struct ScanData {
    int n = 0;              // target rank
    int cols = 0;           // source rank
    int eps = 1;
    LambdaSub lambda = LambdaSub::zero;
    std::vector<T> gram;    // n*n target Gram, row major
    std::vector<T> tmu;     // n target basis mu values
    std::vector<T> req_gram;  // cols*cols source Gram (required pairings)
    std::vector<T> req_mu;    // cols required mu values

    bool mu_matches(const T& q, int col) const {
        switch (lambda) {
            case LambdaSub::zero: return q == req_mu[col];
            case LambdaSub::even: return (q - req_mu[col]) % 2 == 0;
            case LambdaSub::all: return true;
        }
        return false;
    }
};

template <typename T>
ScanData<T> make_scan_data(const QuadraticModule& source, const QuadraticModule& target) {
    ScanData<T> d;
    d.n = target.rank;
    d.cols = source.rank;
    d.eps = target.param.epsilon();
    d.lambda = target.param.lambda_sub();
    d.gram.resize(static_cast<size_t>(d.n) * d.n);
    d.tmu.resize(d.n);
    for (int r = 0; r < d.n; ++r) {
        d.tmu[r] = static_cast<T>(target.mu[r].value());
        for (int c = 0; c < d.n; ++c) d.gram[r * d.n + c] = static_cast<T>(target.gram(r, c));
    }
    d.req_gram.resize(static_cast<size_t>(d.cols) * d.cols);
    d.req_mu.resize(d.cols);
    for (int r = 0; r < d.cols; ++r) {
        d.req_mu[r] = static_cast<T>(source.mu[r].value());
        for (int c = 0; c < d.cols; ++c)
            d.req_gram[r * d.cols + c] = static_cast<T>(source.gram(r, c));
    }
    return d;
}

/// Column-by-column DFS over integer matrices with bounded entries.
/// Accepted matrices satisfy T^t G T == source Gram and mu conditions; they
/// are visited in lexicographic order of the column-major flattening.
/// `cand_list`, when given, replaces the lexicographic odometer by an explicit
/// candidate ordering (flattened k x n) shared by every column position.
/// visit returns false to abort the scan early.
template <typename T, typename Visit>
bool scan_morphism_matrices(const ScanData<T>& d, int bound, Visit&& visit,
                            const std::vector<int32_t>* cand_list = nullptr) {
    const int n = d.n, cols = d.cols;
    if (cols == 0) {
        visit(std::vector<int32_t>{});
        return true;
    }
    if (n == 0) {
        // empty target: the unique 0 x cols matrix is a morphism iff the
        // source form vanishes identically
        for (const T& g : d.req_gram)
            if (g != 0) return true;
        for (int c = 0; c < cols; ++c)
            if (!d.mu_matches(T(0), c)) return true;
        visit(std::vector<int32_t>(0));
        return true;
    }

    std::vector<int32_t> flat(static_cast<size_t>(n) * cols, 0);
    std::vector<std::vector<T>> momenta(cols, std::vector<T>(n));  // G^t c_p per accepted column
    std::vector<std::vector<int32_t>> cur(cols, std::vector<int32_t>(n, 0));
    std::vector<size_t> cursor(cols, 0);
    std::vector<bool> active(cols, false);
    const size_t cand_count = cand_list ? cand_list->size() / n : 0;

    auto column_ok = [&](const std::vector<int32_t>& c, int pos) -> bool {
        T q = 0;  // mu over the target
        for (int i = 0; i < n; ++i) {
            if (c[i] == 0) continue;
            q += T(c[i]) * c[i] * d.tmu[i];
            for (int j = i + 1; j < n; ++j)
                if (c[j] != 0) q += T(c[i]) * c[j] * d.gram[i * n + j];
        }
        if (!d.mu_matches(q, pos)) return false;
        if (d.eps == 1) {  // skew forms force lambda(c,c)=0 on both sides
            T self = 0;
            for (int i = 0; i < n; ++i) {
                if (c[i] == 0) continue;
                T row = 0;
                for (int j = 0; j < n; ++j)
                    if (c[j] != 0) row += d.gram[i * n + j] * c[j];
                self += T(c[i]) * row;
            }
            if (self != d.req_gram[pos * cols + pos]) return false;
        }
        for (int p2 = 0; p2 < pos; ++p2) {
            T dot = 0;
            for (int i = 0; i < n; ++i)
                if (c[i] != 0) dot += momenta[p2][i] * c[i];
            if (dot != d.req_gram[p2 * cols + pos]) return false;
        }
        return true;
    };

    int p = 0;
    while (true) {
        bool advanced;
        if (cand_list) {
            advanced = cursor[p] < cand_count;
            if (advanced) {
                const int32_t* src = cand_list->data() + cursor[p] * n;
                std::copy(src, src + n, cur[p].begin());
                ++cursor[p];
            }
        } else if (!active[p]) {
            std::fill(cur[p].begin(), cur[p].end(), -bound);
            active[p] = true;
            advanced = true;
        } else {
            advanced = next_candidate(cur[p], bound);
        }
        if (!advanced) {
            active[p] = false;
            cursor[p] = 0;
            if (p == 0) return true;
            --p;
            continue;
        }
        if (!column_ok(cur[p], p)) continue;
        std::copy(cur[p].begin(), cur[p].end(), flat.begin() + static_cast<size_t>(p) * n);
        for (int i = 0; i < n; ++i) {
            T acc = 0;
            for (int j = 0; j < n; ++j)
                if (cur[p][j] != 0) acc += d.gram[j * n + i] * cur[p][j];
            momenta[p][i] = acc;
        }
        if (p + 1 == cols) {
            if (!visit(flat)) return false;
        } else {
            ++p;
        }
    }
}

/// int64 arithmetic is exact as long as accumulated dot products stay small.
inline bool i64_scan_safe(const QuadraticModule& source, const QuadraticModule& target,
                          int bound) {
    Int max_g = 1;
    for (int r = 0; r < target.rank; ++r) {
        for (int c = 0; c < target.rank; ++c)
            if (abs(target.gram(r, c)) > max_g) max_g = abs(target.gram(r, c));
        if (abs(target.mu[r].value()) > max_g) max_g = abs(target.mu[r].value());
    }
    for (int r = 0; r < source.rank; ++r) {
        for (int c = 0; c < source.rank; ++c)
            if (abs(source.gram(r, c)) > max_g) max_g = abs(source.gram(r, c));
        if (abs(source.mu[r].value()) > max_g) max_g = abs(source.mu[r].value());
    }
    Int worst = max_g * Int(bound) * bound * target.rank * target.rank;
    return worst < (Int(1) << 56);
}

template <typename Visit>
void scan_morphisms_dispatch(const QuadraticModule& source, const QuadraticModule& target,
                             int bound, Visit&& visit,
                             const std::vector<int32_t>* cand_list = nullptr) {
    if (i64_scan_safe(source, target, bound)) {
        auto d = make_scan_data<long long>(source, target);
        scan_morphism_matrices(d, bound, visit, cand_list);
    } else {
        auto d = make_scan_data<Int>(source, target);
        scan_morphism_matrices(d, bound, visit, cand_list);
    }
}

/// Candidate columns sorted by (number of nonzero entries, lex): witness
/// searches hit sparse standard-looking solutions first.
inline std::vector<int32_t> sparse_first_candidates(int n, int bound) {
    std::vector<std::vector<int32_t>> all;
    std::vector<int32_t> c(n, -bound);
    while (true) {
        all.push_back(c);
        if (!next_candidate(c, bound)) break;
    }
    std::stable_sort(all.begin(), all.end(),
                     [](const std::vector<int32_t>& a, const std::vector<int32_t>& b) {
                         int na = 0, nb = 0;
                         for (int32_t x : a) na += (x != 0);
                         for (int32_t x : b) nb += (x != 0);
                         if (na != nb) return na < nb;
                         return a < b;
                     });
    std::vector<int32_t> flat;
    flat.reserve(all.size() * n);
    for (const auto& v : all) flat.insert(flat.end(), v.begin(), v.end());
    return flat;
}

inline Mat mat_from_flat(const std::vector<int32_t>& flat, int rows, int cols) {
    Mat m(rows, cols);
    for (int c = 0; c < cols; ++c)
        for (int r = 0; r < rows; ++r) m(r, c) = flat[static_cast<size_t>(c) * rows + r];
    return m;
}

}  // namespace detail

/// All morphisms H^g -> M with matrix entries in [-coeff_bound, coeff_bound],
/// in lexicographic order of the column-major flattened matrix.
inline std::vector<QModMorphism> enumerate_hyperbolic_morphisms(const QuadraticModule& m, int g,
                                                                int coeff_bound) {
    if (coeff_bound < 0) throw input_error("coefficient bound must be nonnegative");
    QuadraticModule h = hyperbolic_module(m.param, g);
    std::vector<QModMorphism> out;
    detail::scan_morphisms_dispatch(h, m, coeff_bound, [&](const std::vector<int32_t>& flat) {
        out.push_back({h, m, detail::mat_from_flat(flat, m.rank, 2 * g)});
        return true;
    });
    return out;
}

/// First morphism H^g -> M found by the sparse-first deterministic search,
/// or nullopt if none exists within the bound.
inline std::optional<Mat> find_hyperbolic_witness(const QuadraticModule& m, int g,
                                                  int coeff_bound) {
    if (g == 0) return Mat(m.rank, 0);
    if (m.rank == 0 || 2 * g > m.rank) return std::nullopt;
    QuadraticModule h = hyperbolic_module(m.param, g);
    auto cand = detail::sparse_first_candidates(m.rank, coeff_bound);
    std::optional<Mat> found;
    detail::scan_morphisms_dispatch(
        h, m, coeff_bound,
        [&](const std::vector<int32_t>& flat) {
            found = detail::mat_from_flat(flat, m.rank, 2 * g);
            return false;
        },
        &cand);
    return found;
}

struct WittBound {
    int g_lb = 0;
    std::optional<QModMorphism> witness;  // absent when g_lb == 0
};

/// Largest g whose bounded enumeration is nonempty, with one witness.
/// A lower bound for the Witt index; exact when the rank cap g <= rank/2
/// bites and the coefficient bound suffices.
inline WittBound witt_index_lower_bound(const QuadraticModule& m, int coeff_bound) {
    if (coeff_bound < 1) throw input_error("witt_index_lower_bound needs coeff_bound >= 1");
    WittBound r;
    for (int g = 1; 2 * g <= m.rank; ++g) {
        auto w = find_hyperbolic_witness(m, g, coeff_bound);
        if (!w) break;
        r.g_lb = g;
        r.witness = QModMorphism{hyperbolic_module(m.param, g), m, *w};
    }
    return r;
}

/// witt_index_lower_bound(M + H^k) - k: a lower bound for the stable Witt index.
inline int stable_witt_lower_bound(const QuadraticModule& m, int k, int coeff_bound) {
    if (k < 0) throw input_error("stabilisation count must be nonnegative");
    QuadraticModule stab = direct_sum(m, hyperbolic_module(m.param, k));
    return witt_index_lower_bound(stab, coeff_bound).g_lb - k;
}

/// Bounded search for a unimodular form-preserving map M -> N; first match in
/// lexicographic order, or nullopt. A miss does NOT certify non-isomorphism.
inline std::optional<Mat> is_isomorphic_bounded(const QuadraticModule& m,
                                                const QuadraticModule& n, int coeff_bound) {
    if (m.param != n.param) throw input_error("is_isomorphic_bounded: mismatched parameters");
    if (m.rank != n.rank) throw input_error("is_isomorphic_bounded: ranks differ");
    std::optional<Mat> found;
    detail::scan_morphisms_dispatch(m, n, coeff_bound, [&](const std::vector<int32_t>& flat) {
        Mat t = detail::mat_from_flat(flat, n.rank, m.rank);
        if (is_unimodular(t)) {
            found = std::move(t);
            return false;
        }
        return true;
    });
    return found;
}

}  // namespace wittlab
