#pragma once

#include "wittlab/matrix.hpp"
#include "wittlab/simplicial_complex.hpp"

namespace wittlab {

/// A semisimplicial set (Delta-complex): per-degree simplex counts and face
/// maps d_0..d_p into the degree below. Degenerate in nothing: face maps only.
struct SemiSimplicialSet {
    // face_maps[p][i][k] = index of d_k(i-th p-simplex), for p >= 1
    std::vector<int> counts;
    std::vector<std::vector<std::vector<int>>> face_maps;

    int top_degree() const { return static_cast<int>(counts.size()) - 1; }
    int count(int p) const {
        return (p >= 0 && p <= top_degree()) ? counts[p] : 0;
    }
    int face(int p, int simplex, int k) const { return face_maps[p][simplex][k]; }

    /// d_i d_j = d_{j-1} d_i for i < j, on every simplex of every degree.
    bool identities_hold() const {
        for (int p = 2; p <= top_degree(); ++p)
            for (int s = 0; s < count(p); ++s)
                for (int j = 1; j <= p; ++j)
                    for (int i = 0; i < j; ++i) {
                        int a = face(p - 1, face(p, s, j), i);
                        int b = face(p - 1, face(p, s, i), j - 1);
                        if (a != b) return false;
                    }
        return true;
    }

    /// Boundary matrix C_p -> C_{p-1}: alternating sum of the face maps.
    Mat boundary(int p) const {
        if (p <= 0 || p > top_degree()) return Mat(count(p - 1), count(p));
        Mat b(count(p - 1), count(p));
        for (int s = 0; s < count(p); ++s)
            for (int k = 0; k <= p; ++k) b(face(p, s, k), s) += (k % 2 == 0 ? 1 : -1);
        return b;
    }

    static SemiSimplicialSet validated(std::vector<int> counts,
                                       std::vector<std::vector<std::vector<int>>> face_maps) {
        SemiSimplicialSet s{std::move(counts), std::move(face_maps)};
        for (int p = 1; p <= s.top_degree(); ++p) {
            if (static_cast<int>(s.face_maps.size()) <= p ||
                static_cast<int>(s.face_maps[p].size()) != s.count(p))
                throw input_error("semisimplicial face map table has wrong shape");
            for (const auto& row : s.face_maps[p]) {
                if (static_cast<int>(row.size()) != p + 1)
                    throw input_error("p-simplex needs p+1 faces");
                for (int idx : row)
                    if (idx < 0 || idx >= s.count(p - 1))
                        throw input_error("face index out of range");
            }
        }
        if (!s.identities_hold())
            throw input_error("semisimplicial identities d_i d_j = d_{j-1} d_i fail");
        return s;
    }
};

/// The associated semisimplicial set of a complex: p-simplices are the
/// injective simplicial maps Delta^p -> K, i.e. ordered (p+1)-tuples of
/// distinct vertices spanning a face; d_i deletes the i-th entry.
inline SemiSimplicialSet associated_semisimplicial(const SimplicialComplex& k, int max_degree) {
    SemiSimplicialSet s;
    std::vector<std::vector<std::vector<int>>> tuples(max_degree + 1);
    std::vector<std::map<std::vector<int>, int>> index(max_degree + 1);
    for (int p = 0; p <= max_degree; ++p) {
        for (const Face& f : k.faces_of_dim(p)) {
            std::vector<int> perm = f;
            std::sort(perm.begin(), perm.end());
            do {
                index[p][perm] = static_cast<int>(tuples[p].size());
                tuples[p].push_back(perm);
            } while (std::next_permutation(perm.begin(), perm.end()));
        }
    }
    s.counts.resize(max_degree + 1);
    s.face_maps.resize(max_degree + 1);
    for (int p = 0; p <= max_degree; ++p) {
        s.counts[p] = static_cast<int>(tuples[p].size());
        if (p == 0) continue;
        s.face_maps[p].resize(tuples[p].size());
        for (size_t t = 0; t < tuples[p].size(); ++t) {
            s.face_maps[p][t].resize(p + 1);
            for (int d = 0; d <= p; ++d) {
                std::vector<int> sub = tuples[p][t];
                sub.erase(sub.begin() + d);
                s.face_maps[p][t][d] = index[p - 1].at(sub);
            }
        }
    }
    return s;
}

/// Chain map from the ordered chains of K into the chains of its associated
/// semisimplicial set (the section induced by the vertex order), and the
/// canonical surjection back. Used to check that H_*(K) splits off H_*(K_bullet).
struct SemisimplicialComparison {
    std::vector<Mat> section;     // C_p(K) -> C_p(K_bullet)
    std::vector<Mat> projection;  // C_p(K_bullet) -> C_p(K)
};

inline SemisimplicialComparison semisimplicial_comparison(const SimplicialComplex& k,
                                                          int max_degree) {
    SemisimplicialComparison c;
    std::vector<std::vector<std::vector<int>>> tuples(max_degree + 1);
    for (int p = 0; p <= max_degree; ++p) {
        for (const Face& f : k.faces_of_dim(p)) {
            std::vector<int> perm = f;
            do {
                tuples[p].push_back(perm);
            } while (std::next_permutation(perm.begin(), perm.end()));
        }
    }
    for (int p = 0; p <= max_degree; ++p) {
        auto faces = k.faces_of_dim(p);
        Mat sec(static_cast<int>(tuples[p].size()), static_cast<int>(faces.size()));
        Mat proj(static_cast<int>(faces.size()), static_cast<int>(tuples[p].size()));
        std::map<std::vector<int>, int> tuple_index;
        for (size_t t = 0; t < tuples[p].size(); ++t) tuple_index[tuples[p][t]] = static_cast<int>(t);
        std::map<Face, int> face_index;
        for (size_t f = 0; f < faces.size(); ++f) face_index[faces[f]] = static_cast<int>(f);
        for (size_t f = 0; f < faces.size(); ++f)
            sec(tuple_index.at(faces[f]), static_cast<int>(f)) = 1;  // increasing tuple
        for (size_t t = 0; t < tuples[p].size(); ++t) {
            std::vector<int> sorted = tuples[p][t];
            // sign of the permutation sorting the tuple
            int sign = 1;
            for (size_t i = 0; i < sorted.size(); ++i)
                for (size_t j = i + 1; j < sorted.size(); ++j)
                    if (sorted[i] > sorted[j]) sign = -sign;
            std::sort(sorted.begin(), sorted.end());
            proj(face_index.at(sorted), static_cast<int>(t)) = sign;
        }
        c.section.push_back(std::move(sec));
        c.projection.push_back(std::move(proj));
    }
    return c;
}

}  // namespace wittlab
