#pragma once

#include "wittlab/quadratic_module.hpp"
#include "wittlab/snf.hpp"

namespace wittlab {

/// Result of splitting off the image of a morphism with nondegenerate source:
/// target = f(source) (+) complement, witnessed by a unimodular change of
/// basis [f.matrix | basis] that block-diagonalises the target Gram.
struct ComplementSplit {
    QuadraticModule complement;
    Mat basis;             // target.rank x complement.rank, columns span the complement
    Mat change_of_basis;   // [f.matrix | basis], unimodular
};

inline ComplementSplit orthogonal_complement(const QModMorphism& f) {
    const QuadraticModule& src = f.source;
    const QuadraticModule& tgt = f.target;
    if (!is_nondegenerate(src))
        throw input_error("orthogonal_complement: source form is degenerate, splitting not guaranteed");
    if (!is_morphism(f.matrix, src, tgt))
        throw input_error("orthogonal_complement: map is not a morphism");

    // Functionals y -> lambda(f(b_i), y) as rows; their saturated kernel is
    // the complement lattice.
    Mat funcs = f.matrix.transposed() * tgt.gram;  // src.rank x tgt.rank
    Mat basis = kernel_basis(funcs);
    QuadraticModule comp = restrict_to_sublattice(tgt, basis);

    Mat u = Mat::hcat(f.matrix, basis);
    if (u.rows() != u.cols() || !is_unimodular(u))
        throw input_error("orthogonal_complement: splitting certificate failed");
    Mat diag = u.transposed() * tgt.gram * u;
    Mat expected = Mat::block_diag(src.gram, comp.gram);
    if (!(diag == expected))
        throw input_error("orthogonal_complement: change of basis does not block-diagonalise");
    return {std::move(comp), std::move(basis), std::move(u)};
}

}  // namespace wittlab
