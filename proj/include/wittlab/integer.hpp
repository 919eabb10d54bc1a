#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>
#include <vector>

namespace wittlab {

// Exact arithmetic everywhere: Gram determinants and Smith normal form
// intermediates overflow fixed-width integers already at modest rank.
using Int = boost::multiprecision::cpp_int;
using IntVec = std::vector<Int>;

struct input_error : std::runtime_error {
    explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

inline Int gcd(const Int& a, const Int& b) { return boost::multiprecision::gcd(a, b); }

inline Int gcd_all(const IntVec& v) {
    Int g = 0;
    for (const Int& x : v) g = gcd(g, x);
    return g;
}

inline Int abs(const Int& a) { return boost::multiprecision::abs(a); }

/// Extended gcd: returns (g, s, t) with s*a + t*b == g >= 0.
inline std::tuple<Int, Int, Int> gcdx(const Int& a, const Int& b) {
    Int old_r = a, r = b;
    Int old_s = 1, s = 0;
    Int old_t = 0, t = 1;
    while (r != 0) {
        Int q = old_r / r;
        old_r -= q * r; std::swap(old_r, r);
        old_s -= q * s; std::swap(old_s, s);
        old_t -= q * t; std::swap(old_t, t);
    }
    if (old_r < 0) { old_r = -old_r; old_s = -old_s; old_t = -old_t; }
    return {old_r, old_s, old_t};
}

inline std::string to_string(const Int& a) { return a.str(); }

inline Int parse_int(const std::string& s) {
    if (s.empty()) throw input_error("empty integer literal");
    return Int(s);
}

}  // namespace wittlab
