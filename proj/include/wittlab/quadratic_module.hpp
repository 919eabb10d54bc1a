#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wittlab/form_parameter.hpp"
#include "wittlab/matrix.hpp"

namespace wittlab {

/// A finite-rank free quadratic module (M, lambda, mu) over Z: a Gram matrix
/// for the epsilon-symmetric bilinear form and the mu-values of the basis.
/// Degenerate Gram matrices are allowed.
struct QuadraticModule {
    FormParameter param;
    int rank = 0;
    Mat gram;                  // rank x rank
    std::vector<MuValue> mu;   // rank entries, values in Z/Lambda

    QuadraticModule(FormParameter p, int r, Mat g, std::vector<MuValue> m)
        : param(p), rank(r), gram(std::move(g)), mu(std::move(m)) {}

    static QuadraticModule zero_module(FormParameter p) { return {p, 0, Mat(0, 0), {}}; }
};

/// The hyperbolic module H^g: Gram made of g blocks [[0,1],[eps,0]],
/// basis mu-values all zero.
inline QuadraticModule hyperbolic_module(FormParameter p, int g) {
    if (g < 0) throw input_error("hyperbolic power must be nonnegative");
    Mat gram(2 * g, 2 * g);
    for (int k = 0; k < g; ++k) {
        gram(2 * k, 2 * k + 1) = 1;
        gram(2 * k + 1, 2 * k) = p.epsilon();
    }
    std::vector<MuValue> mu(2 * g, MuValue::zero(p.lambda_sub()));
    return {p, 2 * g, std::move(gram), std::move(mu)};
}

inline Int eval_lambda(const QuadraticModule& m, const IntVec& x, const IntVec& y) {
    if (static_cast<int>(x.size()) != m.rank || static_cast<int>(y.size()) != m.rank)
        throw input_error("eval_lambda: vector length does not match rank");
    Int acc = 0;
    for (int i = 0; i < m.rank; ++i) {
        if (x[i] == 0) continue;
        Int row = 0;
        for (int j = 0; j < m.rank; ++j)
            if (y[j] != 0) row += m.gram(i, j) * y[j];
        acc += x[i] * row;
    }
    return acc;
}

/// mu on an arbitrary vector x = sum a_i b_i, via the closed form
///   sum_i a_i^2 mu(b_i) + sum_{i<j} a_i a_j lambda(b_i, b_j)   in Z/Lambda.
/// This is the unique extension of the basis values consistent with the
/// quadratic-form axioms; the test suite checks both axioms exhaustively.
inline MuValue eval_mu(const QuadraticModule& m, const IntVec& x) {
    if (static_cast<int>(x.size()) != m.rank)
        throw input_error("eval_mu: vector length does not match rank");
    Int acc = 0;
    for (int i = 0; i < m.rank; ++i) {
        if (x[i] == 0) continue;
        acc += x[i] * x[i] * m.mu[i].value();
        for (int j = i + 1; j < m.rank; ++j)
            if (x[j] != 0) acc += x[i] * x[j] * m.gram(i, j);
    }
    return MuValue(m.param.lambda_sub(), acc);
}

struct ValidationResult {
    bool ok = true;
    std::string violation;  // names the first violated invariant when !ok
};

inline ValidationResult validate(const QuadraticModule& m) {
    if (m.rank < 0) return {false, "rank must be nonnegative"};
    if (m.gram.rows() != m.rank || m.gram.cols() != m.rank)
        return {false, "gram matrix shape does not match rank"};
    if (static_cast<int>(m.mu.size()) != m.rank)
        return {false, "mu vector length does not match rank"};
    for (const MuValue& v : m.mu)
        if (v.lambda_sub() != m.param.lambda_sub())
            return {false, "mu entry lives over the wrong Lambda"};
    for (int i = 0; i < m.rank; ++i)
        for (int j = 0; j < m.rank; ++j)
            if (m.gram(i, j) != m.param.epsilon() * m.gram(j, i))
                return {false, "gram is not epsilon-symmetric"};
    if (m.param.epsilon() == -1)
        for (int i = 0; i < m.rank; ++i)
            if (m.gram(i, i) != 0) return {false, "skew gram has nonzero diagonal"};
    if (m.param.epsilon() == 1 && m.param.lambda_sub() == LambdaSub::zero)
        for (int i = 0; i < m.rank; ++i)
            if (m.gram(i, i) != 2 * m.mu[i].value())
                return {false, "gram diagonal must equal twice mu on basis vectors"};
    return {};
}

/// A form-preserving map between quadratic modules; columns of `matrix`
/// are the images of the source basis vectors.
struct QModMorphism {
    QuadraticModule source;
    QuadraticModule target;
    Mat matrix;  // target.rank x source.rank
};

inline bool is_morphism(const Mat& f, const QuadraticModule& m, const QuadraticModule& n) {
    if (m.param != n.param) throw input_error("is_morphism: mismatched form parameters");
    if (f.rows() != n.rank || f.cols() != m.rank)
        throw input_error("is_morphism: matrix shape mismatch");
    // lambda_N(f b_i, f b_j) == lambda_M(b_i, b_j) for all basis pairs
    Mat pulled = f.transposed() * n.gram * f;
    if (!(pulled == m.gram)) return false;
    for (int i = 0; i < m.rank; ++i)
        if (eval_mu(n, f.col(i)) != m.mu[i]) return false;
    return true;
}

inline QModMorphism make_morphism(const QuadraticModule& m, const QuadraticModule& n, Mat f) {
    if (!is_morphism(f, m, n)) throw input_error("matrix is not a morphism of quadratic modules");
    return {m, n, std::move(f)};
}

inline QuadraticModule direct_sum(const QuadraticModule& m, const QuadraticModule& n) {
    if (m.param != n.param) throw input_error("direct_sum: mismatched form parameters");
    Mat gram = Mat::block_diag(m.gram, n.gram);
    std::vector<MuValue> mu = m.mu;
    mu.insert(mu.end(), n.mu.begin(), n.mu.end());
    return {m.param, m.rank + n.rank, std::move(gram), std::move(mu)};
}

/// Restriction of the form to the sublattice spanned by the columns of
/// `basis`: Gram pulls back, mu evaluates on the columns.
inline QuadraticModule restrict_to_sublattice(const QuadraticModule& m, const Mat& basis) {
    if (basis.rows() != m.rank) throw input_error("sublattice basis has wrong ambient rank");
    Mat gram = basis.transposed() * m.gram * basis;
    std::vector<MuValue> mu;
    mu.reserve(basis.cols());
    for (int c = 0; c < basis.cols(); ++c) mu.push_back(eval_mu(m, basis.col(c)));
    return {m.param, basis.cols(), std::move(gram), std::move(mu)};
}

inline bool is_nondegenerate(const QuadraticModule& m) {
    if (m.rank == 0) return true;
    Int d = determinant(m.gram);
    return d == 1 || d == -1;
}

}  // namespace wittlab
