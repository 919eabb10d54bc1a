#pragma once

#include <optional>

#include "wittlab/homology.hpp"

namespace wittlab {

enum class Tri { yes, no, unknown };

inline std::string to_string(Tri t) {
    switch (t) {
        case Tri::yes: return "true";
        case Tri::no: return "false";
        case Tri::unknown: return "unknown";
    }
    return "?";
}

namespace detail {

/// Decides triviality of the edge-path group from a presentation obtained by
/// collapsing a spanning forest: generators are non-tree edges, relations come
/// from triangles. Simplification uses length-1 and length-2 relations only,
/// with a move budget; a presentation that resists both is reported unknown
/// unless it is visibly free of rank >= 1.
inline Tri edge_path_group_trivial(const SimplicialComplex& x, int budget) {
    auto verts = x.vertices();
    if (verts.empty()) return Tri::yes;
    std::map<int, int> vid;
    for (size_t i = 0; i < verts.size(); ++i) vid[verts[i]] = static_cast<int>(i);
    const int n = static_cast<int>(verts.size());

    auto edges = x.faces_of_dim(1);
    // spanning forest via union-find
    std::vector<int> parent(n);
    for (int i = 0; i < n; ++i) parent[i] = i;
    auto find = [&](int a) {
        while (parent[a] != a) a = parent[a] = parent[parent[a]];
        return a;
    };
    std::map<std::pair<int, int>, int> gen_of_edge;  // non-tree edge -> generator id
    std::set<std::pair<int, int>> tree;
    int gens = 0;
    for (const Face& e : edges) {
        int a = find(vid.at(e[0])), b = find(vid.at(e[1]));
        if (a != b) {
            parent[a] = b;
            tree.insert({e[0], e[1]});
        } else {
            gen_of_edge[{e[0], e[1]}] = gens++;
        }
    }
    if (gens == 0) return Tri::yes;  // forest: every component simply connected

    // relations from 2-faces: g(ab) g(bc) = g(ac), tree edges contributing nothing
    auto gen_word = [&](int a, int b) -> std::vector<int> {  // signed generator ids, 1-based
        if (tree.count({std::min(a, b), std::max(a, b)})) return {};
        auto it = gen_of_edge.find({std::min(a, b), std::max(a, b)});
        int g = it->second + 1;
        return {a < b ? g : -g};
    };
    std::vector<std::vector<int>> rels;
    for (const Face& t : x.faces_of_dim(2)) {
        std::vector<int> w;
        auto append = [&](std::vector<int> part, bool invert) {
            if (invert) {
                std::reverse(part.begin(), part.end());
                for (int& g : part) g = -g;
            }
            w.insert(w.end(), part.begin(), part.end());
        };
        append(gen_word(t[0], t[1]), false);
        append(gen_word(t[1], t[2]), false);
        append(gen_word(t[0], t[2]), true);
        if (!w.empty()) rels.push_back(std::move(w));
    }

    auto free_reduce = [](std::vector<int>& w) {
        std::vector<int> out;
        for (int g : w) {
            if (!out.empty() && out.back() == -g) out.pop_back();
            else out.push_back(g);
        }
        w = std::move(out);
    };

    std::set<int> alive;
    for (int g = 1; g <= gens; ++g) alive.insert(g);
    int moves = 0;
    bool progress = true;
    while (progress && moves < budget) {
        progress = false;
        for (auto& w : rels) free_reduce(w);
        rels.erase(std::remove_if(rels.begin(), rels.end(),
                                  [](const std::vector<int>& w) { return w.empty(); }),
                   rels.end());
        // find a relation eliminating a generator
        int from = 0;
        std::vector<int> to;  // substitution word for `from`
        for (const auto& w : rels) {
            if (w.size() == 1) { from = w[0]; to = {}; break; }
            if (w.size() == 2 && std::abs(w[0]) != std::abs(w[1])) {
                from = w[0];
                to = {-w[1]};
                break;
            }
        }
        if (from != 0) {
            int target = std::abs(from);
            if (from < 0) {
                std::reverse(to.begin(), to.end());
                for (int& g : to) g = -g;
            }
            // substitute target -> to in every relation
            for (auto& w : rels) {
                std::vector<int> nw;
                for (int g : w) {
                    if (std::abs(g) == target) {
                        auto part = to;
                        if (g < 0) {
                            std::reverse(part.begin(), part.end());
                            for (int& q : part) q = -q;
                        }
                        nw.insert(nw.end(), part.begin(), part.end());
                    } else {
                        nw.push_back(g);
                    }
                }
                w = std::move(nw);
                ++moves;
            }
            alive.erase(target);
            progress = true;
        }
        if (alive.empty()) return Tri::yes;
    }
    if (alive.empty()) return Tri::yes;
    if (rels.empty() && !alive.empty()) return Tri::no;  // free of positive rank
    return Tri::unknown;  // budget exhausted or undecidable by these moves
}

}  // namespace detail

/// Desk-scale connectivity certificate. Certifies "homology-n-connected":
/// nonempty, reduced homology vanishing through degree n, and for n >= 1 a
/// trivial edge-path group; genuine n-connectivity follows by Hurewicz
/// exactly when pi1_trivial is yes.
struct ConnectivityReport {
    int n_requested = -1;
    bool nonempty = false;
    int h_reduced_vanishing_up_to = -2;  // largest checked k with vanishing reduced homology
    Tri pi1_trivial = Tri::unknown;
    bool certified = false;
};

inline ConnectivityReport connectivity_report(const SimplicialComplex& x, int n,
                                              int pi1_budget = 10000) {
    ConnectivityReport rep;
    rep.n_requested = n;
    rep.nonempty = !x.is_empty();
    if (n < -1) {  // every space is n-connected for n <= -2
        rep.h_reduced_vanishing_up_to = rep.nonempty ? -1 : -2;
        rep.pi1_trivial = Tri::unknown;
        rep.certified = true;
        return rep;
    }
    if (!rep.nonempty) {
        rep.h_reduced_vanishing_up_to = -2;
        rep.pi1_trivial = Tri::yes;
        rep.certified = false;  // (-1)-connected demands nonempty
        return rep;
    }
    rep.h_reduced_vanishing_up_to = -1;
    if (n >= 0) {
        HomologyReport h = homology(x, n);
        for (int k = 0; k <= n; ++k) {
            if (!h.reduced_vanishes(k)) break;
            rep.h_reduced_vanishing_up_to = k;
        }
    }
    rep.pi1_trivial = n >= 1 ? detail::edge_path_group_trivial(x, pi1_budget) : Tri::unknown;
    if (n == -1) rep.certified = true;
    else if (n == 0) rep.certified = rep.h_reduced_vanishing_up_to >= 0;
    else rep.certified = rep.h_reduced_vanishing_up_to >= n && rep.pi1_trivial == Tri::yes;
    return rep;
}

struct CmReport {
    bool value = false;
    std::optional<Face> witness;  // offending face on failure; empty face = global condition
};

/// Weakly Cohen-Macaulay of dimension n: (n-1)-connected and the link of any
/// p-simplex (n-p-2)-connected. Only faces of dimension <= n-1 impose
/// conditions; larger ones ask for (-2)-connectivity or less.
inline CmReport is_wcm(const SimplicialComplex& x, int n, int pi1_budget = 10000) {
    if (!connectivity_report(x, n - 1, pi1_budget).certified) return {false, Face{}};
    for (int p = 0; p <= std::min(n - 1, x.dim()); ++p)
        for (const Face& sigma : x.faces_of_dim(p))
            if (!connectivity_report(x.link(sigma), n - p - 2, pi1_budget).certified)
                return {false, sigma};
    return {true, std::nullopt};
}

/// Locally weakly Cohen-Macaulay: the link conditions alone.
inline CmReport is_lcm(const SimplicialComplex& x, int n, int pi1_budget = 10000) {
    for (int p = 0; p <= std::min(n - 1, x.dim()); ++p)
        for (const Face& sigma : x.faces_of_dim(p))
            if (!connectivity_report(x.link(sigma), n - p - 2, pi1_budget).certified)
                return {false, sigma};
    return {true, std::nullopt};
}

struct Prop25Report {
    bool hypothesis_holds = false;
    bool conclusion_holds = false;
};

/// Full-subcomplex inclusion harness: hypothesis is the link condition on
/// faces avoiding Y, conclusion is relative homology vanishing through n.
inline Prop25Report prop25_harness(const SimplicialComplex& x,
                                   const std::vector<int>& y_vertices, int n,
                                   int pi1_budget = 10000) {
    Prop25Report rep;
    SimplicialComplex y = x.full_subcomplex(y_vertices);
    Face yset = sorted_face(y_vertices);

    rep.hypothesis_holds = true;
    for (int p = 0; p <= std::min(n, x.dim()); ++p) {
        for (const Face& sigma : x.faces_of_dim(p)) {
            bool touches_y = false;
            for (int v : sigma) touches_y = touches_y || std::binary_search(yset.begin(), yset.end(), v);
            if (touches_y) continue;
            SimplicialComplex meet = x.link(sigma).full_subcomplex(y_vertices);
            if (!connectivity_report(meet, n - p - 1, pi1_budget).certified) {
                rep.hypothesis_holds = false;
                break;
            }
        }
        if (!rep.hypothesis_holds) break;
    }

    HomologyReport rel = relative_homology(x, y, n);
    rep.conclusion_holds = true;
    for (int k = 0; k <= n; ++k) {
        const IntVec* t = rel.torsion(k);
        if (rel.betti(k) != 0 || (t && !t->empty())) {
            rep.conclusion_holds = false;
            break;
        }
    }
    return rep;
}

}  // namespace wittlab
