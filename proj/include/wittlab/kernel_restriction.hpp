#pragma once

#include "wittlab/complement.hpp"
#include "wittlab/quadratic_module.hpp"
#include "wittlab/reduce.hpp"
#include "wittlab/snf.hpp"

namespace wittlab {

struct KernelRestriction {
    QuadraticModule kernel_module;  // ker(ell) as a quadratic module
    Mat kernel_basis;               // M.rank x ker-rank, columns span ker(ell)
    QModMorphism morphism;          // H^{g-1} -> kernel_module
    MoveWord word;                  // reducing word for the detected element x
};

/// Witness that the Witt index drops by at most one under a linear
/// functional: given phi: H^g -> M and ell on M, finds x in H^g with
/// ell(phi(y)) = lambda(x, y), reduces x into the first hyperbolic block,
/// and restricts the adjusted phi to the remaining g-1 blocks, which then
/// land inside ker(ell).
/// For epsilon=+1 the reduction has no constructive move set; a bounded
/// orbit_search stands in, and exhausting its depth is reported as not-found.
inline KernelRestriction kernel_restriction(const QModMorphism& phi, const IntVec& ell,
                                            int search_depth = 10) {
    const QuadraticModule& m = phi.target;
    const int g = phi.source.rank / 2;
    if (phi.source.rank % 2 != 0 || g < 1)
        throw input_error("kernel_restriction needs a source H^g with g >= 1");
    if (static_cast<int>(ell.size()) != m.rank)
        throw input_error("functional length does not match target rank");
    if (!is_morphism(phi.matrix, phi.source, m))
        throw input_error("kernel_restriction: phi is not a morphism");

    // ell . phi on the source basis
    IntVec c(2 * g);
    for (int k = 0; k < 2 * g; ++k) {
        Int acc = 0;
        for (int r = 0; r < m.rank; ++r) acc += ell[r] * phi.matrix(r, k);
        c[k] = acc;
    }

    // Solve lambda(x, -) = c on H^g: x = J c with J the hyperbolic Gram,
    // since (J^{-1})^t = J for blocks [[0,1],[eps,0]].
    const Mat& j = phi.source.gram;
    IntVec x = j * c;

    // Adjusted phi whose blocks 1..g-1 land in ker(ell).
    Mat adjusted = phi.matrix;
    MoveWord word;
    bool all_zero = std::all_of(x.begin(), x.end(), [](const Int& t) { return t == 0; });
    if (!all_zero) {
        auto [d, xprim] = primitive_part(HVector(m.param, x));
        if (m.param.epsilon() == -1) {
            auto red = reduce_to_first_block(xprim);
            word = std::move(red.word);
        } else {
            IntVec target(2 * g, 0);
            target[0] = 1;
            target[1] = eval_mu(phi.source, xprim.coords).value();
            auto found = orbit_search(xprim, HVector(m.param, target), search_depth);
            if (!found)
                throw input_error("kernel_restriction: orbit search exhausted, no reduction found");
            word = std::move(*found);
        }
        Mat alpha = word_matrix(word, g);
        adjusted = phi.matrix * inverse_unimodular(alpha);
    }

    // ker(ell) as a saturated sublattice with the restricted form
    Mat ell_row(1, m.rank);
    for (int i = 0; i < m.rank; ++i) ell_row(0, i) = ell[i];
    Mat kbasis = kernel_basis(ell_row);
    QuadraticModule kmod = restrict_to_sublattice(m, kbasis);

    // columns of blocks 1..g-1, rewritten in the kernel basis
    Mat psi(kmod.rank, 2 * (g - 1));
    for (int k = 0; k < 2 * (g - 1); ++k) {
        IntVec img = adjusted.col(2 + k);
        Int pairing = 0;
        for (int r = 0; r < m.rank; ++r) pairing += ell[r] * img[r];
        if (pairing != 0) throw input_error("kernel_restriction: image escapes ker(ell)");
        auto z = solve_integer(kbasis, img);
        if (!z) throw input_error("kernel_restriction: image not in the kernel lattice");
        psi.set_col(k, *z);
    }
    QuadraticModule h_small = hyperbolic_module(m.param, g - 1);
    if (!is_morphism(psi, h_small, kmod))
        throw input_error("kernel_restriction: restricted map is not a morphism");
    return {std::move(kmod), std::move(kbasis), {h_small, kmod, std::move(psi)}, std::move(word)};
}

}  // namespace wittlab
