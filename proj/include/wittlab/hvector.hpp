#pragma once

#include <string>
#include <vector>

#include "wittlab/matrix.hpp"
#include "wittlab/form_parameter.hpp"

namespace wittlab {

/// A vector of H^{n+1}, coordinates read blockwise as (a0,b0,...,an,bn).
struct HVector {
    FormParameter param;
    IntVec coords;  // positive even length

    HVector(FormParameter p, IntVec c) : param(p), coords(std::move(c)) {
        if (coords.empty() || coords.size() % 2 != 0)
            throw input_error("HVector needs positive even length");
    }
    int blocks() const { return static_cast<int>(coords.size()) / 2; }
};

/// Elementary automorphisms of H^{n+1} used by the orbit reduction:
///   rot(i,+):  (a,b) -> (b,-a)        rot(i,-): (a,b) -> (-b,a)
///   shear(i,fwd): (a,b) -> (a-2b,b)   shear(i,inv): (a,b) -> (a+2b,b)
///   cross(i,j): (a,b,c,d) -> (a,b+c,c,d+a)
///   final_composite(i,j): (a,b,c,d) -> (a,a+b-c+d,d-a,a-c), the linear
///     three-step composite that clears block j once both blocks sit at (g,*)
///   swap_blocks(i,j)
struct ElementaryMove {
    enum class Kind { rot, shear, cross, final_composite, swap_blocks };
    Kind kind;
    int block_i = 0;
    int block_j = 0;  // unused for single-block moves
    int sign = 1;     // rot: +1/-1 direction; shear: +1 fwd, -1 inv

    bool operator==(const ElementaryMove& o) const {
        return kind == o.kind && block_i == o.block_i && block_j == o.block_j && sign == o.sign;
    }
};

using MoveWord = std::vector<ElementaryMove>;

inline std::string move_name(const ElementaryMove& m) {
    switch (m.kind) {
        case ElementaryMove::Kind::rot: return "rot";
        case ElementaryMove::Kind::shear: return "shear";
        case ElementaryMove::Kind::cross: return "cross";
        case ElementaryMove::Kind::final_composite: return "final";
        case ElementaryMove::Kind::swap_blocks: return "swap";
    }
    return "?";
}

namespace detail {

template <typename T>
void apply_move_inplace(const ElementaryMove& m, std::vector<T>& v) {
    const int nb = static_cast<int>(v.size()) / 2;
    if (m.block_i < 0 || m.block_i >= nb) throw input_error("move block index out of range");
    T& a = v[2 * m.block_i];
    T& b = v[2 * m.block_i + 1];
    switch (m.kind) {
        case ElementaryMove::Kind::rot: {
            T na = m.sign > 0 ? b : -b;
            T nb2 = m.sign > 0 ? -a : a;
            a = na;
            b = nb2;
            return;
        }
        case ElementaryMove::Kind::shear: {
            a += (m.sign > 0 ? T(-2) : T(2)) * b;
            return;
        }
        default: break;
    }
    if (m.block_j < 0 || m.block_j >= nb || m.block_j == m.block_i)
        throw input_error("move block index out of range");
    T& c = v[2 * m.block_j];
    T& d = v[2 * m.block_j + 1];
    switch (m.kind) {
        case ElementaryMove::Kind::cross: {
            b += c;
            d += a;
            return;
        }
        case ElementaryMove::Kind::final_composite: {
            T na = a, nb2 = a + b - c + d, nc = d - a, nd = a - c;
            a = na;
            b = nb2;
            c = nc;
            d = nd;
            return;
        }
        case ElementaryMove::Kind::swap_blocks: {
            std::swap(a, c);
            std::swap(b, d);
            return;
        }
        default: break;
    }
}

}  // namespace detail

inline HVector apply_move(const ElementaryMove& m, const HVector& v) {
    HVector w = v;
    detail::apply_move_inplace(m, w.coords);
    return w;
}

inline HVector apply_word(const MoveWord& word, const HVector& v) {
    HVector w = v;
    for (const ElementaryMove& m : word) detail::apply_move_inplace(m, w.coords);
    return w;
}

/// The move as a 2(n+1) x 2(n+1) integer matrix (acting on column vectors).
inline Mat move_matrix(const ElementaryMove& m, int blocks) {
    Mat id = Mat::identity(2 * blocks);
    Mat out(2 * blocks, 2 * blocks);
    for (int c = 0; c < 2 * blocks; ++c) {
        IntVec col = id.col(c);
        detail::apply_move_inplace(m, col);
        out.set_col(c, col);
    }
    return out;
}

inline Mat word_matrix(const MoveWord& word, int blocks) {
    Mat acc = Mat::identity(2 * blocks);
    for (const ElementaryMove& m : word) acc = move_matrix(m, blocks) * acc;
    return acc;
}

/// Inverse of a single move, as a word in the move set itself.
/// rot and shear invert by sign flip and swap is an involution.  cross
/// inverts after conjugating block j by a half rotation, and the final
/// composite unfolds as T1 rot(j,+) T1 with T1 = rot(j,+) cross rot(j,-),
/// whose factors invert in reverse order.
inline MoveWord inverse_of(const ElementaryMove& m) {
    using K = ElementaryMove::Kind;
    const ElementaryMove rp{K::rot, m.block_j, 0, +1};
    const ElementaryMove rm{K::rot, m.block_j, 0, -1};
    const ElementaryMove cr{K::cross, m.block_i, m.block_j, +1};
    switch (m.kind) {
        case K::rot:
        case K::shear:
            return {{m.kind, m.block_i, m.block_j, -m.sign}};
        case K::swap_blocks:
            return {m};
        case K::cross:
            return {rp, rp, cr, rp, rp};
        case K::final_composite: {
            const MoveWord t1_inv = {rp, rp, rp, cr, rp, rp, rm};
            MoveWord w = t1_inv;
            w.push_back(rm);
            w.insert(w.end(), t1_inv.begin(), t1_inv.end());
            return w;
        }
    }
    return {};
}

/// Word realising the inverse automorphism: inverses of the moves, reversed.
inline MoveWord inverse_word(const MoveWord& word) {
    MoveWord inv;
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
        MoveWord part = inverse_of(*it);
        inv.insert(inv.end(), part.begin(), part.end());
    }
    return inv;
}

/// gcd extraction: v = d * v' with v' unimodular.
inline std::pair<Int, HVector> primitive_part(const HVector& v) {
    Int g = gcd_all(v.coords);
    if (g == 0) throw input_error("primitive_part of the zero vector");
    IntVec prim(v.coords.size());
    for (size_t i = 0; i < prim.size(); ++i) prim[i] = v.coords[i] / g;
    return {g, HVector(v.param, std::move(prim))};
}

inline bool is_unimodular_vector(const HVector& v) { return gcd_all(v.coords) == 1; }

}  // namespace wittlab
