#pragma once

#include "wittlab/semisimplicial.hpp"
#include "wittlab/simplicial_complex.hpp"
#include "wittlab/snf.hpp"

namespace wittlab {

struct DegreeHomology {
    int degree = 0;
    int betti = 0;
    IntVec torsion;  // invariant factors > 1
};

struct HomologyReport {
    std::vector<DegreeHomology> degrees;  // 0..max_degree
    bool nonempty = false;

    int betti(int k) const {
        return (k >= 0 && k < static_cast<int>(degrees.size())) ? degrees[k].betti : 0;
    }
    const IntVec* torsion(int k) const {
        return (k >= 0 && k < static_cast<int>(degrees.size())) ? &degrees[k].torsion : nullptr;
    }
    /// Reduced Betti numbers: one less in degree 0 for a nonempty space.
    int reduced_betti(int k) const {
        if (k == 0) return nonempty ? betti(0) - 1 : 0;
        return betti(k);
    }
    bool reduced_vanishes(int k) const {
        if (reduced_betti(k) != 0) return false;
        const IntVec* t = torsion(k);
        return !t || t->empty();
    }
};

namespace detail {

/// Oriented boundary matrix of a complex in degree p, over the sorted face
/// lists faces_of_dim(p-1) and faces_of_dim(p).
inline Mat complex_boundary(const std::vector<Face>& lower, const std::vector<Face>& upper) {
    std::map<Face, int> idx;
    for (size_t i = 0; i < lower.size(); ++i) idx[lower[i]] = static_cast<int>(i);
    Mat b(static_cast<int>(lower.size()), static_cast<int>(upper.size()));
    for (size_t c = 0; c < upper.size(); ++c) {
        const Face& f = upper[c];
        for (size_t k = 0; k < f.size(); ++k) {
            Face sub = f;
            sub.erase(sub.begin() + static_cast<long>(k));
            b(idx.at(sub), static_cast<int>(c)) += (k % 2 == 0 ? 1 : -1);
        }
    }
    return b;
}

inline HomologyReport homology_from_boundaries(const std::vector<int>& counts,
                                               const std::vector<Mat>& boundaries,
                                               int max_degree, bool nonempty) {
    HomologyReport rep;
    rep.nonempty = nonempty;
    std::vector<int> ranks(max_degree + 2, 0);
    std::vector<IntVec> factors(max_degree + 2);
    for (int p = 1; p <= max_degree + 1; ++p) {
        if (p >= static_cast<int>(boundaries.size())) break;
        SmithForm s = smith_normal_form(boundaries[p]);
        ranks[p] = s.rank;
        factors[p] = s.invariant_factors();
    }
    for (int k = 0; k <= max_degree; ++k) {
        DegreeHomology h;
        h.degree = k;
        int nk = (k < static_cast<int>(counts.size())) ? counts[k] : 0;
        h.betti = nk - ranks[k] - ranks[k + 1];
        for (const Int& d : factors[k + 1])
            if (d > 1) h.torsion.push_back(d);
        rep.degrees.push_back(std::move(h));
    }
    return rep;
}

}  // namespace detail

/// Integral homology of a complex up to max_degree via Smith normal form.
inline HomologyReport homology(const SimplicialComplex& x, int max_degree) {
    if (max_degree < 0) throw input_error("max_degree must be nonnegative");
    std::vector<std::vector<Face>> faces(max_degree + 2);
    std::vector<int> counts(max_degree + 2, 0);
    for (int p = 0; p <= max_degree + 1; ++p) {
        faces[p] = x.faces_of_dim(p);
        counts[p] = static_cast<int>(faces[p].size());
    }
    std::vector<Mat> boundaries(max_degree + 2);
    boundaries[0] = Mat(0, counts[0]);
    for (int p = 1; p <= max_degree + 1; ++p)
        boundaries[p] = detail::complex_boundary(faces[p - 1], faces[p]);
    return detail::homology_from_boundaries(counts, boundaries, max_degree, counts[0] > 0);
}

/// Integral homology of a semisimplicial set (chain complex of its simplices).
inline HomologyReport homology(const SemiSimplicialSet& x, int max_degree) {
    if (max_degree < 0) throw input_error("max_degree must be nonnegative");
    std::vector<int> counts(max_degree + 2, 0);
    for (int p = 0; p <= max_degree + 1; ++p) counts[p] = x.count(p);
    std::vector<Mat> boundaries(max_degree + 2);
    boundaries[0] = Mat(0, counts[0]);
    for (int p = 1; p <= max_degree + 1; ++p) boundaries[p] = x.boundary(p);
    // safety: the composite of consecutive boundaries must vanish
    for (int p = 1; p <= max_degree; ++p)
        if (!(boundaries[p] * boundaries[p + 1]).is_zero())
            throw input_error("semisimplicial boundary fails d.d = 0");
    return detail::homology_from_boundaries(counts, boundaries, max_degree, counts[0] > 0);
}

/// Alternating face-count Euler characteristic, for cross-checks.
inline Int euler_characteristic_faces(const SimplicialComplex& x) {
    Int chi = 0;
    for (int p = 0; p <= x.dim(); ++p)
        chi += (p % 2 == 0 ? 1 : -1) * Int(x.faces_of_dim(p).size());
    return chi;
}

inline Int euler_characteristic_betti(const HomologyReport& rep) {
    Int chi = 0;
    for (const auto& h : rep.degrees) chi += (h.degree % 2 == 0 ? 1 : -1) * Int(h.betti);
    return chi;
}

/// Relative homology H_k(X, Y) for a subcomplex Y, via the quotient complex
/// spanned by the faces of X outside Y.
inline HomologyReport relative_homology(const SimplicialComplex& x, const SimplicialComplex& y,
                                        int max_degree) {
    if (!x.contains_subcomplex(y)) throw input_error("relative_homology: Y is not a subcomplex");
    std::vector<std::vector<Face>> faces(max_degree + 2);
    std::vector<int> counts(max_degree + 2, 0);
    for (int p = 0; p <= max_degree + 1; ++p) {
        for (const Face& f : x.faces_of_dim(p))
            if (!y.has_face(f)) faces[p].push_back(f);
        counts[p] = static_cast<int>(faces[p].size());
    }
    std::vector<Mat> boundaries(max_degree + 2);
    boundaries[0] = Mat(0, counts[0]);
    for (int p = 1; p <= max_degree + 1; ++p) {
        std::map<Face, int> idx;
        for (size_t i = 0; i < faces[p - 1].size(); ++i) idx[faces[p - 1][i]] = static_cast<int>(i);
        Mat b(counts[p - 1], counts[p]);
        for (int c = 0; c < counts[p]; ++c) {
            const Face& f = faces[p][c];
            for (size_t k = 0; k < f.size(); ++k) {
                Face sub = f;
                sub.erase(sub.begin() + static_cast<long>(k));
                auto it = idx.find(sub);
                if (it != idx.end()) b(it->second, c) += (k % 2 == 0 ? 1 : -1);
            }
        }
        boundaries[p] = std::move(b);
    }
    // relative H_0 counts no ambient component, so "nonempty" is moot here
    return detail::homology_from_boundaries(counts, boundaries, max_degree, counts[0] > 0);
}

}  // namespace wittlab
