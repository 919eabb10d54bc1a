#pragma once

#include <deque>
#include <map>
#include <optional>

#include "wittlab/hvector.hpp"

namespace wittlab {

namespace detail {

inline void emit(MoveWord& word, IntVec& v, const ElementaryMove& m) {
    word.push_back(m);
    apply_move_inplace(m, v);
}

/// Normalises block i to (a,0) or (a,a) with a >= 0 by rotations and shears.
/// The shear phase strictly decreases max(|a|,|b|); a guard asserts this.
inline void normalize_block(IntVec& v, int i, MoveWord& word) {
    using K = ElementaryMove::Kind;
    auto a = [&]() -> Int& { return v[2 * i]; };
    auto b = [&]() -> Int& { return v[2 * i + 1]; };
    while (true) {
        // rotate until |b| <= |a|, preferring the lexicographically smaller image
        while (abs(b()) > abs(a())) {
            IntVec plus = v, minus = v;
            apply_move_inplace(ElementaryMove{K::rot, i, 0, +1}, plus);
            apply_move_inplace(ElementaryMove{K::rot, i, 0, -1}, minus);
            emit(word, v, ElementaryMove{K::rot, i, 0, plus <= minus ? +1 : -1});
        }
        if (b() < 0) {  // half rotation negates the block
            emit(word, v, ElementaryMove{K::rot, i, 0, +1});
            emit(word, v, ElementaryMove{K::rot, i, 0, +1});
        }
        // now 0 <= b <= |a|
        if (b() == 0 || b() == abs(a())) {
            if (a() < 0) {
                if (b() == 0) {
                    emit(word, v, ElementaryMove{K::rot, i, 0, +1});
                    emit(word, v, ElementaryMove{K::rot, i, 0, +1});
                } else {
                    emit(word, v, ElementaryMove{K::rot, i, 0, +1});  // (a,-a) -> (-a,-a)
                }
            }
            return;
        }
        // 0 < b < |a|: one shear strictly shrinks the block
        Int before = abs(a());
        emit(word, v, ElementaryMove{K::shear, i, 0, a() > 0 ? +1 : -1});
        if (!(abs(a()) < before)) throw input_error("shear descent failed to decrease");
    }
}

/// Folds block j into block i (both normalised), leaving block j zero and
/// block i carrying the gcd of the pair, again in normal form.
inline void fold_pair(IntVec& v, int i, int j, MoveWord& word) {
    using K = ElementaryMove::Kind;
    auto block_zero = [&](int k) { return v[2 * k] == 0 && v[2 * k + 1] == 0; };
    normalize_block(v, i, word);
    normalize_block(v, j, word);
    if (block_zero(j)) return;
    if (block_zero(i)) {
        emit(word, v, ElementaryMove{K::swap_blocks, i, j, +1});
        return;
    }
    emit(word, v, ElementaryMove{K::cross, i, j, +1});
    normalize_block(v, i, word);
    normalize_block(v, j, word);
    // both blocks now read (g, x) with x in {0, g}, g = gcd of the pair
    if (v[2 * i] != v[2 * j]) throw input_error("pair fold lost the gcd alignment");
    if (v[2 * j + 1] == 0) {
        // T1 = rot(j,+) cross rot(j,-) clears block j when its lower entry is 0
        emit(word, v, ElementaryMove{K::rot, j, 0, +1});
        emit(word, v, ElementaryMove{K::cross, i, j, +1});
        emit(word, v, ElementaryMove{K::rot, j, 0, -1});
    } else {
        emit(word, v, ElementaryMove{K::final_composite, i, j, +1});
    }
    if (!block_zero(j)) throw input_error("pair fold failed to clear block");
    normalize_block(v, i, word);
}

}  // namespace detail

struct ReductionResult {
    MoveWord word;
    HVector result;
};

/// Carries a unimodular vector of H^{n+1} into H + 0 by a recorded word of
/// elementary automorphisms (the skew cases of the orbit transitivity
/// statement; the symmetric case has no constructive move set here and is
/// served by orbit_search instead).
inline ReductionResult reduce_to_first_block(const HVector& v) {
    if (v.param.epsilon() != -1)
        throw input_error("reduce_to_first_block supports the skew form parameters only");
    if (!is_unimodular_vector(v))
        throw input_error("reduce_to_first_block needs a unimodular vector");
    IntVec cur = v.coords;
    MoveWord word;
    const int nb = v.blocks();
    for (int i = 0; i < nb; ++i) detail::normalize_block(cur, i, word);
    for (int j = 1; j < nb; ++j) detail::fold_pair(cur, 0, j, word);
    for (size_t k = 2; k < cur.size(); ++k)
        if (cur[k] != 0) throw input_error("reduction left support outside block 0");
    HVector out(v.param, cur);
    // replay check: the recorded word reproduces the result
    if (!(apply_word(word, v).coords == cur))
        throw input_error("reduction word fails to replay");
    return {std::move(word), std::move(out)};
}

/// Fixed move enumeration order for breadth-first searches: single-block
/// moves for each block, then pair moves for each i<j.
inline std::vector<ElementaryMove> bfs_move_set(int blocks) {
    using K = ElementaryMove::Kind;
    std::vector<ElementaryMove> moves;
    for (int i = 0; i < blocks; ++i) {
        moves.push_back({K::rot, i, 0, +1});
        moves.push_back({K::rot, i, 0, -1});
        moves.push_back({K::shear, i, 0, +1});
        moves.push_back({K::shear, i, 0, -1});
    }
    for (int i = 0; i < blocks; ++i)
        for (int j = i + 1; j < blocks; ++j) {
            moves.push_back({K::cross, i, j, +1});
            moves.push_back({K::final_composite, i, j, +1});
            moves.push_back({K::swap_blocks, i, j, +1});
        }
    return moves;
}

/// Breadth-first search for a move word of length <= depth carrying v to w.
/// Deterministic: states expand in FIFO order, successors in the fixed move
/// order, so the returned word is the lexicographically first among the
/// shortest. not-found is a value, not an error; it does not certify that no
/// longer word exists. Vectors with different coordinate gcds are unreachable
/// from one another, so that case short-circuits to not-found.
inline std::optional<MoveWord> orbit_search(const HVector& v, const HVector& w, int depth) {
    if (v.coords.size() != w.coords.size())
        throw input_error("orbit_search: vectors of different length");
    if (gcd_all(v.coords) != gcd_all(w.coords)) return std::nullopt;

    using State = std::vector<long long>;
    auto to_state = [](const IntVec& c) {
        State s(c.size());
        for (size_t i = 0; i < c.size(); ++i) {
            if (abs(c[i]) > (Int(1) << 40)) throw input_error("orbit_search coordinates too large");
            s[i] = static_cast<long long>(c[i]);
        }
        return s;
    };
    const State start = to_state(v.coords), goal = to_state(w.coords);
    if (start == goal) return MoveWord{};

    const auto moves = bfs_move_set(v.blocks());
    std::map<State, std::pair<State, int>> parent;  // state -> (previous, move index)
    std::deque<std::pair<State, int>> queue;        // (state, depth)
    parent.emplace(start, std::make_pair(State{}, -1));
    queue.emplace_back(start, 0);
    while (!queue.empty()) {
        auto [cur, d] = queue.front();
        queue.pop_front();
        if (d >= depth) continue;
        for (size_t mi = 0; mi < moves.size(); ++mi) {
            State next = cur;
            detail::apply_move_inplace(moves[mi], next);
            auto [it, fresh] = parent.emplace(next, std::make_pair(cur, static_cast<int>(mi)));
            if (!fresh) continue;
            if (next == goal) {
                MoveWord word;
                State s = goal;
                while (true) {
                    auto& [prev, idx] = parent.at(s);
                    if (idx < 0) break;
                    word.push_back(moves[idx]);
                    s = prev;
                }
                std::reverse(word.begin(), word.end());
                return word;
            }
            queue.emplace_back(next, d + 1);
        }
    }
    return std::nullopt;
}

}  // namespace wittlab
