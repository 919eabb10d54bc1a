#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "wittlab/integer.hpp"

namespace wittlab {

/// A face: sorted distinct vertex indices. The empty face is {}.
using Face = std::vector<int>;

inline Face sorted_face(Face f) {
    std::sort(f.begin(), f.end());
    f.erase(std::unique(f.begin(), f.end()), f.end());
    return f;
}

inline bool face_subset(const Face& a, const Face& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

inline Face face_union(const Face& a, const Face& b) {
    Face u;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(u));
    return u;
}

inline bool faces_disjoint(const Face& a, const Face& b) {
    Face i;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(i));
    return i.empty();
}

/// Finite simplicial complex stored by its maximal faces. A complex may be
/// declared flag, in which case it also keeps the underlying graph and every
/// clique of the graph is a face.
class SimplicialComplex {
  public:
    SimplicialComplex() = default;

    static SimplicialComplex from_facets(int vertex_count, std::vector<Face> facets) {
        SimplicialComplex x;
        x.vertex_count_ = vertex_count;
        for (Face& f : facets) {
            f = sorted_face(std::move(f));
            for (int v : f)
                if (v < 0 || v >= vertex_count) throw input_error("facet vertex out of range");
        }
        // drop faces contained in others
        std::sort(facets.begin(), facets.end());
        facets.erase(std::unique(facets.begin(), facets.end()), facets.end());
        for (const Face& f : facets) {
            bool dominated = false;
            for (const Face& g : facets)
                if (f != g && face_subset(f, g)) { dominated = true; break; }
            if (!dominated && !f.empty()) x.facets_.push_back(f);
        }
        return x;
    }

    /// Flag complex of a graph: faces are exactly the cliques.
    static SimplicialComplex flag_from_graph(int vertex_count,
                                             const std::vector<std::pair<int, int>>& edges) {
        SimplicialComplex x;
        x.vertex_count_ = vertex_count;
        x.flag_ = true;
        x.adj_.assign(vertex_count, std::vector<bool>(vertex_count, false));
        for (auto [a, b] : edges) {
            if (a < 0 || b < 0 || a >= vertex_count || b >= vertex_count || a == b)
                throw input_error("bad edge in flag graph");
            x.adj_[a][b] = x.adj_[b][a] = true;
        }
        x.facets_ = x.maximal_cliques();
        return x;
    }

    static SimplicialComplex empty_complex() { return SimplicialComplex(); }

    /// Full simplex on n vertices.
    static SimplicialComplex simplex(int n) {
        Face all(n);
        for (int i = 0; i < n; ++i) all[i] = i;
        return from_facets(n, {all});
    }

    /// Boundary of the (n-1)-simplex on n vertices.
    static SimplicialComplex simplex_boundary(int n) {
        std::vector<Face> fs;
        for (int skip = 0; skip < n; ++skip) {
            Face f;
            for (int i = 0; i < n; ++i)
                if (i != skip) f.push_back(i);
            fs.push_back(f);
        }
        return from_facets(n, fs);
    }

    int vertex_count() const { return vertex_count_; }
    bool is_flag() const { return flag_; }
    const std::vector<Face>& facets() const { return facets_; }
    bool is_empty() const { return facets_.empty(); }
    bool adjacent(int a, int b) const { return flag_ ? adj_[a][b] : has_face(Face{a, b}); }

    int dim() const {
        int d = -1;
        for (const Face& f : facets_) d = std::max(d, static_cast<int>(f.size()) - 1);
        return d;
    }

    bool has_face(const Face& f) const {
        if (f.empty()) return true;
        if (flag_) {
            for (size_t i = 0; i < f.size(); ++i)
                for (size_t j = i + 1; j < f.size(); ++j)
                    if (!adj_[f[i]][f[j]]) return false;
            // vertices must actually occur in the complex
            for (int v : f)
                if (!vertex_present(v)) return false;
            return true;
        }
        for (const Face& g : facets_)
            if (face_subset(f, g)) return true;
        return false;
    }

    /// Vertices that occur in some facet, ascending.
    std::vector<int> vertices() const {
        std::set<int> vs;
        for (const Face& f : facets_) vs.insert(f.begin(), f.end());
        return {vs.begin(), vs.end()};
    }

    /// All faces of dimension p, sorted. p = -1 yields the empty face.
    std::vector<Face> faces_of_dim(int p) const {
        if (p < -1) return {};
        if (p == -1) return {Face{}};
        std::set<Face> out;
        for (const Face& f : facets_) {
            if (static_cast<int>(f.size()) < p + 1) continue;
            // subsets of size p+1
            std::vector<int> idx(p + 1);
            for (int i = 0; i <= p; ++i) idx[i] = i;
            const int n = static_cast<int>(f.size());
            while (true) {
                Face sub(p + 1);
                for (int i = 0; i <= p; ++i) sub[i] = f[idx[i]];
                out.insert(sub);
                int i = p;
                while (i >= 0 && idx[i] == n - (p + 1) + i) --i;
                if (i < 0) break;
                ++idx[i];
                for (int k = i + 1; k <= p; ++k) idx[k] = idx[k - 1] + 1;
            }
        }
        return {out.begin(), out.end()};
    }

    /// All nonempty faces of dimension <= max_dim, sorted by (dim, lex).
    std::vector<Face> all_faces(int max_dim) const {
        std::vector<Face> out;
        for (int p = 0; p <= max_dim; ++p) {
            auto fp = faces_of_dim(p);
            out.insert(out.end(), fp.begin(), fp.end());
        }
        return out;
    }

    /// Link: faces tau disjoint from sigma with sigma u tau a face.
    /// Link of the empty face is the complex itself.
    SimplicialComplex link(const Face& sigma) const {
        Face s = sorted_face(sigma);
        if (!has_face(s)) throw input_error("link of a non-face");
        if (s.empty()) return *this;
        if (flag_) {
            // induced flag complex on the common neighbours
            std::vector<int> common;
            for (int v = 0; v < vertex_count_; ++v) {
                if (std::binary_search(s.begin(), s.end(), v)) continue;
                bool ok = vertex_present(v);
                for (int u : s) ok = ok && adj_[u][v];
                if (ok) common.push_back(v);
            }
            SimplicialComplex lk;
            lk.vertex_count_ = vertex_count_;
            lk.flag_ = true;
            lk.adj_.assign(vertex_count_, std::vector<bool>(vertex_count_, false));
            for (size_t i = 0; i < common.size(); ++i)
                for (size_t j = i + 1; j < common.size(); ++j)
                    if (adj_[common[i]][common[j]])
                        lk.adj_[common[i]][common[j]] = lk.adj_[common[j]][common[i]] = true;
            Face r;
            std::vector<int> xset;
            lk.bk(r, common, xset, lk.facets_);
            std::sort(lk.facets_.begin(), lk.facets_.end());
            return lk;
        }
        std::vector<Face> fs;
        for (const Face& f : facets_) {
            if (!face_subset(s, f)) continue;
            Face tau;
            std::set_difference(f.begin(), f.end(), s.begin(), s.end(), std::back_inserter(tau));
            if (!tau.empty()) fs.push_back(tau);
        }
        auto lk = from_facets(vertex_count_, fs);
        return lk;
    }

    /// Join on the disjoint vertex set; Y's vertices shift by X's count.
    static SimplicialComplex join(const SimplicialComplex& x, const SimplicialComplex& y) {
        const int n = x.vertex_count() + y.vertex_count();
        std::vector<Face> fs;
        auto shifted = [&](const Face& f) {
            Face g = f;
            for (int& v : g) v += x.vertex_count();
            return g;
        };
        if (x.is_empty()) {
            for (const Face& g : y.facets()) fs.push_back(shifted(g));
        } else if (y.is_empty()) {
            fs = x.facets();
        } else {
            for (const Face& f : x.facets())
                for (const Face& g : y.facets()) fs.push_back(face_union(f, shifted(g)));
        }
        return from_facets(n, fs);
    }

    /// Full subcomplex on a vertex subset: faces of X entirely inside it.
    SimplicialComplex full_subcomplex(const std::vector<int>& vertex_subset) const {
        Face keep = sorted_face(vertex_subset);
        std::vector<Face> fs;
        for (const Face& f : facets_) {
            Face inside;
            for (int v : f)
                if (std::binary_search(keep.begin(), keep.end(), v)) inside.push_back(v);
            if (!inside.empty()) fs.push_back(inside);
        }
        return from_facets(vertex_count_, fs);
    }

    /// True when every face of `sub` is a face of this complex.
    bool contains_subcomplex(const SimplicialComplex& sub) const {
        for (const Face& f : sub.facets())
            if (!has_face(f)) return false;
        return true;
    }

  private:
    bool vertex_present(int v) const {
        for (const Face& f : facets_)
            if (std::binary_search(f.begin(), f.end(), v)) return true;
        return false;
    }

    std::vector<Face> maximal_cliques() const {
        // Bron-Kerbosch, deterministic order
        std::vector<Face> out;
        std::vector<int> verts;
        for (int v = 0; v < vertex_count_; ++v) verts.push_back(v);
        Face r;
        std::vector<int> p = verts, xset;
        bk(r, p, xset, out);
        std::sort(out.begin(), out.end());
        return out;
    }

    void bk(Face& r, std::vector<int> p, std::vector<int> x, std::vector<Face>& out) const {
        if (p.empty() && x.empty()) {
            if (!r.empty()) out.push_back(sorted_face(r));
            return;
        }
        std::vector<int> p_copy = p;
        for (int v : p_copy) {
            r.push_back(v);
            std::vector<int> np, nx;
            for (int u : p)
                if (adj_[u][v]) np.push_back(u);
            for (int u : x)
                if (adj_[u][v]) nx.push_back(u);
            bk(r, np, nx, out);
            r.pop_back();
            p.erase(std::remove(p.begin(), p.end(), v), p.end());
            x.push_back(v);
        }
    }

    int vertex_count_ = 0;
    std::vector<Face> facets_;
    bool flag_ = false;
    std::vector<std::vector<bool>> adj_;
};

/// A simplicial map given by vertex images; valid when every face maps to a
/// face (after removing repeats).
struct SimplicialMap {
    SimplicialComplex source;
    SimplicialComplex target;
    std::vector<int> vertex_images;

    Face image_face(const Face& f) const {
        Face g;
        for (int v : f) g.push_back(vertex_images.at(v));
        return sorted_face(std::move(g));
    }

    bool valid() const {
        if (static_cast<int>(vertex_images.size()) != source.vertex_count()) return false;
        for (const Face& f : source.facets())
            if (!target.has_face(image_face(f))) return false;
        return true;
    }
};

/// Criterion (iv): the image of every 1-simplex is a nondegenerate 1-simplex.
inline bool is_simplexwise_injective(const SimplicialMap& f) {
    if (!f.valid()) throw input_error("is_simplexwise_injective: invalid simplicial map");
    for (const Face& e : f.source.faces_of_dim(1))
        if (f.vertex_images[e[0]] == f.vertex_images[e[1]]) return false;
    return true;
}

/// A face is bad when it contains a 1-face whose endpoints share an image.
/// Reported maximal-first: descending dimension, lexicographic within.
inline std::vector<Face> find_bad_simplices(const SimplicialMap& f) {
    if (!f.valid()) throw input_error("find_bad_simplices: invalid simplicial map");
    std::vector<std::pair<int, int>> bad_edges;
    for (const Face& e : f.source.faces_of_dim(1))
        if (f.vertex_images[e[0]] == f.vertex_images[e[1]]) bad_edges.emplace_back(e[0], e[1]);
    std::vector<Face> out;
    for (int p = f.source.dim(); p >= 1; --p) {
        for (const Face& face : f.source.faces_of_dim(p)) {
            bool bad = false;
            for (auto [a, b] : bad_edges) {
                if (std::binary_search(face.begin(), face.end(), a) &&
                    std::binary_search(face.begin(), face.end(), b)) { bad = true; break; }
            }
            if (bad) out.push_back(face);
        }
    }
    return out;
}

/// Barycentric subdivision relative to a subcomplex L: only faces outside L
/// get barycenters. New simplices are tau * {b_s1,...,b_sk} for chains
/// s1 < ... < sk of non-L faces and tau in L a face of s1.
/// Returns the subdivided complex and the carrier of each vertex (original
/// vertices carry themselves). Verifies that the star of every vertex
/// outside L meets L in at most one simplex, which the downstream surgery
/// arguments rely on.
struct RelativeSubdivision {
    SimplicialComplex complex;
    std::vector<Face> carrier;  // per vertex of the result
    bool star_condition_holds = true;
};

inline RelativeSubdivision barycentric_subdivide_rel(const SimplicialComplex& k,
                                                     const SimplicialComplex& l) {
    if (!k.contains_subcomplex(l)) throw input_error("L is not a subcomplex of K");

    std::vector<Face> subdividable;  // non-L faces of dim >= 1 (vertex barycenters are the vertices)
    std::map<Face, int> bary_id;
    std::vector<Face> carrier(k.vertex_count());
    for (int v = 0; v < k.vertex_count(); ++v) carrier[v] = Face{v};
    int next = k.vertex_count();
    for (const Face& f : k.all_faces(k.dim())) {
        if (l.has_face(f)) continue;
        if (f.size() == 1) continue;  // its barycenter is the vertex itself
        subdividable.push_back(f);
        bary_id[f] = next++;
        carrier.push_back(f);
    }
    if (subdividable.empty()) {
        RelativeSubdivision r{k, std::move(carrier), true};
        return r;
    }

    // facets of the subdivision: tau * chain, maximal ones suffice
    std::vector<Face> out_facets;
    // enumerate chains of non-L faces ordered by strict inclusion
    std::vector<std::vector<Face>> chains;
    {
        std::vector<std::pair<std::vector<Face>, Face>> stack;  // (chain, top)
        for (const Face& f : subdividable) stack.push_back({{f}, f});
        // also single non-L vertices can start chains; but a lone vertex not in L
        // is carried by itself and contributes via tau handling below
        while (!stack.empty()) {
            auto [chain, top] = stack.back();
            stack.pop_back();
            chains.push_back(chain);
            for (const Face& g : subdividable) {
                if (g.size() > top.size() && face_subset(top, g)) {
                    auto ext = chain;
                    ext.push_back(g);
                    stack.push_back({ext, g});
                }
            }
        }
    }
    for (const auto& chain : chains) {
        const Face& smallest = chain.front();
        // tau runs over the faces of the chain bottom that carry no
        // barycenter: L-faces, single non-L vertices, and the empty face.
        const int sn = static_cast<int>(smallest.size());
        for (unsigned mask = 0; mask < (1u << sn); ++mask) {
            Face tau;
            for (int i = 0; i < sn; ++i)
                if (mask & (1u << i)) tau.push_back(smallest[i]);
            if (!tau.empty() && !l.has_face(tau) && tau.size() > 1) continue;
            if (tau.size() == 1 && !l.has_face(tau)) {
                // a bare non-L vertex: allowed, it is its own barycenter
            }
            Face cell = tau;
            for (const Face& s : chain) cell.push_back(bary_id.at(s));
            out_facets.push_back(sorted_face(cell));
        }
    }
    // faces of K untouched by subdivision survive as they are
    for (const Face& f : k.facets())
        if (l.has_face(f) || f.size() == 1) out_facets.push_back(f);

    RelativeSubdivision r;
    r.complex = SimplicialComplex::from_facets(next, out_facets);
    r.carrier = std::move(carrier);

    // star condition: for each vertex outside L, its closed star meets L in
    // one simplex (possibly empty)
    for (int v = 0; v < r.complex.vertex_count(); ++v) {
        bool in_l = r.carrier[v].size() == 1 && l.has_face(r.carrier[v]);
        if (in_l) continue;
        std::set<Face> l_faces_in_star;
        for (const Face& f : r.complex.facets()) {
            if (!std::binary_search(f.begin(), f.end(), v)) continue;
            // faces of f lying in L (L lives on original vertices)
            Face orig;
            for (int u : f)
                if (u < k.vertex_count()) orig.push_back(u);
            const int on = static_cast<int>(orig.size());
            for (unsigned mask = 1; mask < (1u << on); ++mask) {
                Face sub;
                for (int i = 0; i < on; ++i)
                    if (mask & (1u << i)) sub.push_back(orig[i]);
                if (l.has_face(sub)) l_faces_in_star.insert(sub);
            }
        }
        // all collected faces must share one maximal simplex
        Face biggest;
        for (const Face& f : l_faces_in_star)
            if (f.size() > biggest.size()) biggest = f;
        for (const Face& f : l_faces_in_star)
            if (!face_subset(f, biggest)) { r.star_condition_holds = false; break; }
        if (!r.star_condition_holds) break;
    }
    return r;
}

}  // namespace wittlab
