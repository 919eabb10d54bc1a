#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "wittlab/connectivity.hpp"
#include "wittlab/ka.hpp"
#include "wittlab/random_instances.hpp"

using namespace wittlab;

namespace {
const FormParameter kPlus = FormParameter::symmetric_zero();
const FormParameter kEven = FormParameter::skew_even();
const FormParameter kAll = FormParameter::skew_all();
}  // namespace

TEST_CASE("build_ka frozen small cases") {
    SECTION("K^a(H) for the symmetric parameter: 4 vertices, no edges") {
        auto ka = build_ka(hyperbolic_module(kPlus, 1), 1);
        REQUIRE(ka.vertex_count() == 4);
        REQUIRE(*ka.edge_count() == 0);
        REQUIRE_FALSE(ka.is_connected());
    }
    SECTION("rank zero module gives the empty complex") {
        auto ka = build_ka(QuadraticModule::zero_module(kEven), 2);
        REQUIRE(ka.vertex_count() == 0);
        REQUIRE_FALSE(ka.is_connected());
    }
    SECTION("H^2 contains the standard block edge") {
        for (FormParameter p : {kPlus, kEven, kAll}) {
            auto ka = build_ka(hyperbolic_module(p, 2), 1);
            REQUIRE(ka.vertex_count() > 0);
            Mat first(4, 2), second(4, 2);
            first(0, 0) = 1;
            first(1, 1) = 1;
            second(2, 0) = 1;
            second(3, 1) = 1;
            auto i = ka.find_vertex(first);
            auto j = ka.find_vertex(second);
            REQUIRE(i.has_value());
            REQUIRE(j.has_value());
            REQUIRE(ka.vertices_adjacent(*i, *j));
        }
    }
}

TEST_CASE("vertex sets grow monotonically with the bound") {
    for (FormParameter p : {kPlus, kEven}) {
        auto m = hyperbolic_module(p, 1);
        auto small = build_ka(m, 1);
        auto large = build_ka(m, 2);
        std::set<std::vector<int>> big_set;
        for (size_t i = 0; i < large.vertex_count(); ++i) {
            Mat v = large.vertex_matrix(i);
            std::vector<int> key;
            for (int r = 0; r < v.rows(); ++r)
                for (int c = 0; c < 2; ++c) key.push_back(static_cast<int>(v(r, c)));
            big_set.insert(key);
        }
        for (size_t i = 0; i < small.vertex_count(); ++i) {
            Mat v = small.vertex_matrix(i);
            std::vector<int> key;
            for (int r = 0; r < v.rows(); ++r)
                for (int c = 0; c < 2; ++c) key.push_back(static_cast<int>(v(r, c)));
            REQUIRE(big_set.count(key) == 1);
        }
        REQUIRE(large.vertex_count() >= small.vertex_count());
    }
}

TEST_CASE("vertices landing in the M block reproduce K^a(M)") {
    auto m = hyperbolic_module(kEven, 1);
    auto mh = direct_sum(m, hyperbolic_module(kEven, 1));
    auto ka_m = build_ka(m, 1);
    auto ka_mh = build_ka(mh, 1);
    // collect vertices of K^a(M + H) supported in the M block
    std::set<std::vector<int>> in_block;
    for (size_t i = 0; i < ka_mh.vertex_count(); ++i) {
        Mat v = ka_mh.vertex_matrix(i);
        bool m_only = true;
        for (int r = m.rank; r < mh.rank; ++r)
            for (int c = 0; c < 2; ++c) m_only = m_only && v(r, c) == 0;
        if (!m_only) continue;
        std::vector<int> key;
        for (int r = 0; r < m.rank; ++r)
            for (int c = 0; c < 2; ++c) key.push_back(static_cast<int>(v(r, c)));
        in_block.insert(key);
    }
    REQUIRE(in_block.size() == ka_m.vertex_count());
    for (size_t i = 0; i < ka_m.vertex_count(); ++i) {
        Mat v = ka_m.vertex_matrix(i);
        std::vector<int> key;
        for (int r = 0; r < m.rank; ++r)
            for (int c = 0; c < 2; ++c) key.push_back(static_cast<int>(v(r, c)));
        REQUIRE(in_block.count(key) == 1);
    }
}

TEST_CASE("swap_automorphism exchanges orthogonal vertices") {
    SECTION("standard copies in H^2") {
        auto h2 = hyperbolic_module(kEven, 2);
        Mat h0(4, 2), h1(4, 2);
        h0(0, 0) = 1;
        h0(1, 1) = 1;
        h1(2, 0) = 1;
        h1(3, 1) = 1;
        Mat f = swap_automorphism(h2, h0, h1);
        REQUIRE(f * h0 == h1);
        REQUIRE(f * h1 == h0);
        REQUIRE(is_morphism(f, h2, h2));
        REQUIRE(f * f == Mat::identity(4));
    }
    SECTION("outer copies of H^3 fix the middle block") {
        auto h3 = hyperbolic_module(kEven, 3);
        Mat h0(6, 2), h1(6, 2);
        h0(0, 0) = 1;
        h0(1, 1) = 1;
        h1(4, 0) = 1;
        h1(5, 1) = 1;
        Mat f = swap_automorphism(h3, h0, h1);
        REQUIRE(f * h0 == h1);
        IntVec mid(6);
        mid[2] = 1;
        REQUIRE(f * mid == mid);
    }
    SECTION("skewed second vertex") {
        auto h2 = hyperbolic_module(kEven, 2);
        Mat h0(4, 2), h1(4, 2);
        h0(0, 0) = 1;
        h0(1, 1) = 1;
        h1(2, 0) = 1;  // e -> e2, f -> f2 + 2 e2
        h1(2, 1) = 2;
        h1(3, 1) = 1;
        REQUIRE(is_morphism(h1, hyperbolic_module(kEven, 1), h2));
        Mat f = swap_automorphism(h2, h0, h1);
        REQUIRE(f * h0 == h1);
        REQUIRE(is_morphism(f, h2, h2));
        REQUIRE(is_unimodular(f));
    }
    SECTION("non-orthogonal vertices are rejected") {
        auto h = hyperbolic_module(kEven, 1);
        Mat id2 = Mat::identity(2);
        REQUIRE_THROWS_AS(swap_automorphism(h, id2, id2), input_error);
    }
}

TEST_CASE("transitivity witness maps h0 to h1 exactly") {
    auto h2 = hyperbolic_module(kEven, 2);
    Mat h0(4, 2), h1(4, 2);
    h0(0, 0) = 1;
    h0(1, 1) = 1;
    h1(2, 0) = 1;
    h1(3, 1) = 1;
    SECTION("identity when h0 = h1") {
        auto f = transitivity_witness(h2, h0, h0, 1);
        REQUIRE(f.has_value());
        REQUIRE(*f == Mat::identity(4));
    }
    SECTION("single swap when orthogonal") {
        auto f = transitivity_witness(h2, h0, h1, 1);
        REQUIRE(f.has_value());
        REQUIRE(*f * h0 == h1);
    }
    SECTION("length-two path through an intersection vertex") {
        // both vertices inside the same block forces a middle vertex
        auto h3 = hyperbolic_module(kEven, 3);
        Mat a(6, 2), b(6, 2);
        a(0, 0) = 1;
        a(1, 1) = 1;
        b(0, 0) = 1;  // same image, different matrix
        b(0, 1) = 2;
        b(1, 1) = 1;
        REQUIRE(is_morphism(b, hyperbolic_module(kEven, 1), h3));
        auto f = transitivity_witness(h3, a, b, 2);
        REQUIRE(f.has_value());
        REQUIRE(*f * a == b);
        REQUIRE(is_morphism(*f, h3, h3));
    }
}

TEST_CASE("cancellation recovers an isomorphism") {
    SECTION("identity phi") {
        auto m = hyperbolic_module(kEven, 1);
        auto iso = cancellation_witness(m, m, Mat::identity(4), 2);
        REQUIRE(iso.has_value());
        REQUIRE(*iso == Mat::identity(2));
    }
    SECTION("rank-0 modules cancel trivially") {
        auto zero = QuadraticModule::zero_module(kEven);
        Mat rot(2, 2, {0, 1, -1, 0});
        auto iso = cancellation_witness(zero, zero, rot, 1);
        REQUIRE(iso.has_value());
        REQUIRE(iso->rows() == 0);
    }
    SECTION("base-changed summand") {
        Rng rng(83);
        auto tw_m = twisted_hyperbolic(rng, kEven, 1, 3);
        auto tw_n = twisted_hyperbolic(rng, kEven, 1, 3);
        // rank-4 truncations of K^a split into orthogonal-pair clusters, so
        // keep the mixing isometry block-split to honour the connectivity
        // hypothesis of the cancellation statement
        Mat big = Mat::block_diag(random_hyperbolic_isometry(rng, kEven, 1, 3),
                                  random_hyperbolic_isometry(rng, kEven, 1, 3));
        Mat lift_m = Mat::block_diag(tw_m.into_h, Mat::identity(2));
        Mat lift_n = Mat::block_diag(tw_n.into_h, Mat::identity(2));
        Mat phi = inverse_unimodular(lift_n) * big * lift_m;
        int bound = 6;
        for (int rr = 0; rr < phi.rows(); ++rr)
            for (int cc = 0; cc < phi.cols(); ++cc)
                bound = std::max(bound, static_cast<int>(abs(phi(rr, cc))));
        auto iso = cancellation_witness(tw_m.module, tw_n.module, phi, bound);
        REQUIRE(iso.has_value());
        REQUIRE(is_morphism(*iso, tw_m.module, tw_n.module));
        REQUIRE(is_unimodular(*iso));
    }
    SECTION("full mixing at g = 3 where connectivity is guaranteed") {
        Rng rng(89);
        auto tw_m = twisted_hyperbolic(rng, kEven, 3, 2);
        auto tw_n = twisted_hyperbolic(rng, kEven, 3, 2);
        Mat big = random_hyperbolic_isometry(rng, kEven, 4, 2);
        Mat lift_m = Mat::block_diag(tw_m.into_h, Mat::identity(2));
        Mat lift_n = Mat::block_diag(tw_n.into_h, Mat::identity(2));
        Mat phi = inverse_unimodular(lift_n) * big * lift_m;
        int bound = 6;
        for (int rr = 0; rr < phi.rows(); ++rr)
            for (int cc = 0; cc < phi.cols(); ++cc)
                bound = std::max(bound, static_cast<int>(abs(phi(rr, cc))));
        auto iso = cancellation_witness(tw_m.module, tw_n.module, phi, bound);
        REQUIRE(iso.has_value());
        REQUIRE(is_morphism(*iso, tw_m.module, tw_n.module));
        REQUIRE(is_unimodular(*iso));
    }
    SECTION("invalid phi is rejected") {
        auto m = hyperbolic_module(kEven, 1);
        REQUIRE_THROWS_AS(cancellation_witness(m, m, Mat(4, 4), 1), input_error);
    }
}

TEST_CASE("prop43 paths") {
    auto h4 = hyperbolic_module(kEven, 4);
    Mat h0(8, 2);
    h0(0, 0) = 1;
    h0(1, 1) = 1;
    SECTION("adjacent pair gives a direct path") {
        Mat h(8, 2);
        h(2, 0) = 1;
        h(3, 1) = 1;
        auto path = prop43_connect(h4, h, h0, 1);
        REQUIRE(path.has_value());
        REQUIRE(path->vertices.size() == 2);
    }
    SECTION("same block needs a middle vertex") {
        Mat h(8, 2);
        h(0, 0) = 1;
        h(0, 1) = 2;
        h(1, 1) = 1;
        auto path = prop43_connect(h4, h, h0, 1);
        REQUIRE(path.has_value());
        REQUIRE(path->vertices.size() == 3);
        REQUIRE(ka_orthogonal(h4, path->vertices[0], path->vertices[1]));
        REQUIRE(ka_orthogonal(h4, path->vertices[1], path->vertices[2]));
    }
    SECTION("precondition failure on H^2") {
        auto h2 = hyperbolic_module(kEven, 2);
        Mat a(4, 2), b(4, 2);
        a(0, 0) = 1;
        a(1, 1) = 1;
        b(0, 0) = 1;
        b(0, 1) = 2;
        b(1, 1) = 1;
        REQUIRE_THROWS_AS(prop43_connect(h2, b, a, 1), input_error);
    }
}

TEST_CASE("theorem 3.2 evidence on small hyperbolics") {
    SECTION("H with the symmetric parameter: everything vacuous at g = 1") {
        auto ev = theorem32_evidence(hyperbolic_module(kPlus, 1), 1, 1, 3);
        for (const auto& c : ev.clauses) REQUIRE((c.status == "vacuous" || c.status == "pass"));
    }
    SECTION("H^2: nonemptiness demanded and confirmed") {
        auto ev = theorem32_evidence(hyperbolic_module(kEven, 2), 2, 1, 3);
        REQUIRE(ev.all_pass());
        REQUIRE(ev.clauses[0].level == -1);
        REQUIRE(ev.clauses[0].status == "pass");
    }
    SECTION("claim beyond the certified bound is rejected") {
        REQUIRE_THROWS_AS(theorem32_evidence(hyperbolic_module(kEven, 1), 3, 1, 3), input_error);
    }
}

TEST_CASE("ka complexes materialise as flag complexes when small") {
    auto ka = build_ka(hyperbolic_module(kEven, 2), 1);
    auto flag = ka.to_flag_complex(4000);
    REQUIRE(flag.vertex_count() == static_cast<int>(ka.vertex_count()));
    // flag property: homology of the clique complex is well defined and the
    // complex is connected iff the class-level union-find says so
    auto rep = connectivity_report(flag, 0);
    REQUIRE(rep.certified == ka.is_connected());
}
