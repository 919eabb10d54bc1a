#include <catch2/catch_amalgamated.hpp>

#include "wittlab/connectivity.hpp"
#include "wittlab/random_instances.hpp"
#include "wittlab/snf.hpp"

using namespace wittlab;

namespace {

SimplicialComplex projective_plane_6() {
    return SimplicialComplex::from_facets(
        6, {{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 5}, {0, 1, 5},
            {1, 2, 4}, {2, 3, 5}, {3, 4, 1}, {4, 5, 2}, {5, 1, 3}});
}

}  // namespace

TEST_CASE("smith normal form certifies D = U A V on random matrices") {
    Rng rng(61);
    for (int t = 0; t < 60; ++t) {
        int rows = rand_range(rng, 1, 6), cols = rand_range(rng, 1, 6);
        Mat a(rows, cols);
        for (int r = 0; r < rows; ++r)
            for (int c = 0; c < cols; ++c) a(r, c) = rand_range(rng, -9, 9);
        SmithForm s = smith_normal_form(a);
        REQUIRE(smith_form_certifies(s, a));
    }
}

TEST_CASE("kernel basis is saturated and solves A x = 0") {
    Mat a(2, 4, {1, 2, 3, 4, 2, 4, 6, 8});  // rank 1
    Mat k = kernel_basis(a);
    REQUIRE(k.cols() == 3);
    REQUIRE((a * k).is_zero());
    // saturation: content of any kernel combination stays primitive on basis columns
    SmithForm s = smith_normal_form(k);
    for (int i = 0; i < s.rank; ++i) REQUIRE(s.d(i, i) == 1);
}

TEST_CASE("solve_integer finds integral solutions exactly when they exist") {
    Mat a(2, 2, {2, 0, 0, 3});
    auto x = solve_integer(a, {4, 9});
    REQUIRE(x.has_value());
    REQUIRE((*x)[0] == 2);
    REQUIRE((*x)[1] == 3);
    REQUIRE_FALSE(solve_integer(a, {1, 0}).has_value());
}

TEST_CASE("boundary of boundary vanishes") {
    Rng rng(67);
    for (int t = 0; t < 10; ++t) {
        auto x = random_flag_complex(rng, rand_range(rng, 4, 9), rand_range(rng, 40, 80));
        for (int p = 1; p <= 2; ++p) {
            Mat b1 = detail::complex_boundary(x.faces_of_dim(p - 1), x.faces_of_dim(p));
            Mat b2 = detail::complex_boundary(x.faces_of_dim(p), x.faces_of_dim(p + 1));
            REQUIRE((b1 * b2).is_zero());
        }
    }
}

TEST_CASE("homology golden values") {
    SECTION("circle") {
        auto h = homology(SimplicialComplex::simplex_boundary(3), 1);
        REQUIRE(h.betti(0) == 1);
        REQUIRE(h.betti(1) == 1);
    }
    SECTION("2-sphere") {
        auto h = homology(SimplicialComplex::simplex_boundary(4), 2);
        REQUIRE(h.betti(0) == 1);
        REQUIRE(h.betti(1) == 0);
        REQUIRE(h.betti(2) == 1);
    }
    SECTION("projective plane has 2-torsion") {
        auto h = homology(projective_plane_6(), 2);
        REQUIRE(h.betti(0) == 1);
        REQUIRE(h.betti(1) == 0);
        REQUIRE(*h.torsion(1) == IntVec{2});
        REQUIRE(h.betti(2) == 0);
        REQUIRE(h.torsion(2)->empty());
    }
    SECTION("euler characteristic cross-check") {
        auto rp2 = projective_plane_6();
        REQUIRE(euler_characteristic_faces(rp2) == 1);
        REQUIRE(euler_characteristic_betti(homology(rp2, 2)) == 1);
    }
}

TEST_CASE("euler characteristic from betti equals face count on random complexes") {
    Rng rng(71);
    for (int t = 0; t < 15; ++t) {
        auto x = random_flag_complex(rng, rand_range(rng, 3, 8), rand_range(rng, 30, 80));
        if (x.is_empty()) continue;
        auto h = homology(x, std::max(0, x.dim()));
        REQUIRE(euler_characteristic_betti(h) == euler_characteristic_faces(x));
    }
}

TEST_CASE("connectivity report") {
    SECTION("sphere is certified 1-connected") {
        auto rep = connectivity_report(SimplicialComplex::simplex_boundary(4), 1);
        REQUIRE(rep.nonempty);
        REQUIRE(rep.h_reduced_vanishing_up_to >= 1);
        REQUIRE(rep.pi1_trivial == Tri::yes);
        REQUIRE(rep.certified);
    }
    SECTION("two points fail 0-connectivity") {
        auto two = SimplicialComplex::from_facets(2, {{0}, {1}});
        auto rep = connectivity_report(two, 0);
        REQUIRE(rep.nonempty);
        REQUIRE(rep.h_reduced_vanishing_up_to == -1);
        REQUIRE_FALSE(rep.certified);
    }
    SECTION("empty complex is not even (-1)-connected") {
        auto rep = connectivity_report(SimplicialComplex::empty_complex(), -1);
        REQUIRE_FALSE(rep.nonempty);
        REQUIRE_FALSE(rep.certified);
    }
    SECTION("circle: homology vanishing fails at degree 1") {
        auto rep = connectivity_report(SimplicialComplex::simplex_boundary(3), 1);
        REQUIRE(rep.h_reduced_vanishing_up_to == 0);
        REQUIRE(rep.pi1_trivial == Tri::no);  // free group of rank 1
        REQUIRE_FALSE(rep.certified);
    }
    SECTION("projective plane: pi1 is not decided by these moves but homology speaks") {
        auto rep = connectivity_report(projective_plane_6(), 1);
        REQUIRE(rep.h_reduced_vanishing_up_to == 0);  // H_1 = Z/2
        REQUIRE_FALSE(rep.certified);
    }
}

TEST_CASE("weak Cohen-Macaulay checks") {
    REQUIRE(is_wcm(SimplicialComplex::simplex_boundary(4), 2).value);
    REQUIRE(is_wcm(SimplicialComplex::simplex(2), 1).value);  // a single edge

    auto two_triangles = SimplicialComplex::from_facets(6, {{0, 1, 2}, {3, 4, 5}});
    auto rep = is_wcm(two_triangles, 1);
    REQUIRE_FALSE(rep.value);
    REQUIRE(rep.witness == Face{});  // global connectivity is the offender

    REQUIRE(is_lcm(two_triangles, 1).value);  // links are fine locally
    REQUIRE(is_lcm(SimplicialComplex::simplex_boundary(4), 2).value);

    auto path2 = SimplicialComplex::from_facets(3, {{0, 1}, {1, 2}});
    auto bad = is_lcm(path2, 2);
    REQUIRE_FALSE(bad.value);
    REQUIRE(bad.witness.has_value());
}

TEST_CASE("links of lcm complexes are wcm (key lemma, randomized)") {
    Rng rng(73);
    int tested = 0;
    for (int t = 0; t < 60; ++t) {
        auto x = random_flag_complex(rng, rand_range(rng, 4, 9), rand_range(rng, 30, 75));
        for (int n = 1; n <= 2; ++n) {
            if (!is_lcm(x, n).value) continue;
            for (int p = 0; p <= std::min(n, x.dim()); ++p)
                for (const Face& sigma : x.faces_of_dim(p)) {
                    REQUIRE(is_wcm(x.link(sigma), n - p - 1).value);
                    ++tested;
                }
        }
    }
    REQUIRE(tested > 50);
}

TEST_CASE("relative homology and the full-subcomplex harness") {
    auto s2 = SimplicialComplex::simplex_boundary(4);
    SECTION("Y = X makes everything vacuous") {
        auto rep = prop25_harness(s2, {0, 1, 2, 3}, 1);
        REQUIRE(rep.hypothesis_holds);
        REQUIRE(rep.conclusion_holds);
    }
    SECTION("closed 2-face inside the sphere at n = 0") {
        auto rep = prop25_harness(s2, {0, 1, 2}, 0);
        REQUIRE(rep.hypothesis_holds);
        REQUIRE(rep.conclusion_holds);
    }
    SECTION("disjoint triangles violate the hypothesis") {
        auto x = SimplicialComplex::from_facets(6, {{0, 1, 2}, {3, 4, 5}});
        auto rep = prop25_harness(x, {0, 1, 2}, 0);
        REQUIRE_FALSE(rep.hypothesis_holds);
        REQUIRE_FALSE(rep.conclusion_holds);  // relative H_0 detects the gap
    }
}
