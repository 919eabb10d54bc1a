#pragma once

#include <random>

#include "wittlab/hvector.hpp"
#include "wittlab/quadratic_module.hpp"
#include "wittlab/reduce.hpp"
#include "wittlab/simplicial_complex.hpp"

namespace wittlab {

/// Seeded generators for randomized suites. mt19937_64 has a pinned
/// algorithm, so fixed seeds reproduce bit-identically everywhere.
using Rng = std::mt19937_64;

inline int rand_range(Rng& rng, int lo, int hi) {
    return static_cast<int>(lo + rng() % static_cast<unsigned long long>(hi - lo + 1));
}

inline HVector random_unimodular_hvector(Rng& rng, FormParameter param, int blocks, int bound) {
    while (true) {
        IntVec v(2 * blocks);
        for (auto& c : v) c = rand_range(rng, -bound, bound);
        if (gcd_all(v) == 1) return HVector(param, v);
    }
}

/// Random automorphism of H^g with entries within the bound, built from the
/// elementary move set for the skew parameters and from block permutations,
/// e-f swaps and paired transvections for the symmetric one.
inline Mat random_hyperbolic_isometry(Rng& rng, FormParameter param, int g, int entry_bound,
                                      int word_length = 6) {
    QuadraticModule h = hyperbolic_module(param, g);
    while (true) {
        Mat s = Mat::identity(2 * g);
        if (param.epsilon() == -1) {
            MoveWord word;
            for (int t = 0; t < word_length; ++t) {
                auto moves = bfs_move_set(g);
                word.push_back(moves[rng() % moves.size()]);
            }
            s = word_matrix(word, g);
        } else {
            for (int t = 0; t < word_length; ++t) {
                Mat step = Mat::identity(2 * g);
                int kind = rand_range(rng, 0, g >= 2 ? 2 : 1);
                int i = rand_range(rng, 0, g - 1);
                if (kind == 0) {  // swap e_i <-> f_i
                    step(2 * i, 2 * i) = step(2 * i + 1, 2 * i + 1) = 0;
                    step(2 * i, 2 * i + 1) = step(2 * i + 1, 2 * i) = 1;
                } else if (kind == 1) {  // negate block i
                    step(2 * i, 2 * i) = step(2 * i + 1, 2 * i + 1) = -1;
                } else {  // f_i += e_j, f_j -= e_i
                    int j = rand_range(rng, 0, g - 2);
                    if (j >= i) ++j;
                    step(2 * j, 2 * i + 1) = 1;
                    step(2 * i, 2 * j + 1) = -1;
                }
                s = step * s;
            }
        }
        bool bounded = true;
        for (int r = 0; r < 2 * g && bounded; ++r)
            for (int c = 0; c < 2 * g && bounded; ++c) bounded = abs(s(r, c)) <= entry_bound;
        if (!bounded) continue;
        if (!is_morphism(s, h, h) || !is_unimodular(s)) continue;
        return s;
    }
}

/// Pullback of H^g along a unimodular matrix: an isomorphic twin whose Gram
/// and mu are expressed in the twisted basis. The matrix itself is an
/// isomorphism from the twist onto H^g.
struct TwistedModule {
    QuadraticModule module;
    Mat into_h;  // columns of the twisting matrix; morphism module -> H^g
};

inline TwistedModule twisted_hyperbolic(Rng& rng, FormParameter param, int g, int entry_bound) {
    QuadraticModule h = hyperbolic_module(param, g);
    Mat s = random_hyperbolic_isometry(rng, param, g, entry_bound);
    Mat gram = s.transposed() * h.gram * s;
    std::vector<MuValue> mu;
    for (int c = 0; c < 2 * g; ++c) mu.push_back(eval_mu(h, s.col(c)));
    return {QuadraticModule{param, 2 * g, std::move(gram), std::move(mu)}, s};
}

/// Random unimodular matrix with entries within the bound (products of
/// elementary row operations, rejection sampled).
inline Mat random_unimodular_matrix(Rng& rng, int n, int entry_bound, int ops = 8) {
    while (true) {
        Mat s = Mat::identity(n);
        for (int t = 0; t < ops; ++t) {
            int i = rand_range(rng, 0, n - 1), j = rand_range(rng, 0, n - 1);
            if (i == j) continue;
            Mat step = Mat::identity(n);
            step(i, j) = rand_range(rng, -1, 1);
            s = step * s;
        }
        bool bounded = true;
        for (int r = 0; r < n && bounded; ++r)
            for (int c = 0; c < n && bounded; ++c) bounded = abs(s(r, c)) <= entry_bound;
        if (bounded && is_unimodular(s)) return s;
    }
}

inline SimplicialComplex random_flag_complex(Rng& rng, int vertices, int edge_percent) {
    std::vector<std::pair<int, int>> edges;
    for (int a = 0; a < vertices; ++a)
        for (int b = a + 1; b < vertices; ++b)
            if (rand_range(rng, 0, 99) < edge_percent) edges.emplace_back(a, b);
    return SimplicialComplex::flag_from_graph(vertices, edges);
}

inline SimplicialMap random_simplicial_map(Rng& rng, int src_vertices, int tgt_vertices,
                                           int edge_percent) {
    SimplicialComplex src = random_flag_complex(rng, src_vertices, edge_percent);
    // map vertices randomly, then let the target be generated by the images
    std::vector<int> img(src_vertices);
    for (int& v : img) v = rand_range(rng, 0, tgt_vertices - 1);
    std::vector<Face> tgt_facets;
    for (const Face& f : src.facets()) {
        Face g;
        for (int v : f) g.push_back(img[v]);
        tgt_facets.push_back(sorted_face(g));
    }
    // throw in extra structure so the map is not surjective in general
    for (int a = 0; a < tgt_vertices; ++a) tgt_facets.push_back({a});
    SimplicialComplex tgt = SimplicialComplex::from_facets(tgt_vertices, tgt_facets);
    return {std::move(src), std::move(tgt), std::move(img)};
}

}  // namespace wittlab
