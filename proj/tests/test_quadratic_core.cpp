#include <catch2/catch_amalgamated.hpp>

#include "wittlab/arf.hpp"
#include "wittlab/complement.hpp"
#include "wittlab/enumerate.hpp"
#include "wittlab/random_instances.hpp"

using namespace wittlab;

namespace {

const FormParameter kPlus = FormParameter::symmetric_zero();
const FormParameter kEven = FormParameter::skew_even();
const FormParameter kAll = FormParameter::skew_all();

QuadraticModule diag_module(FormParameter p, std::vector<int> diag, std::vector<int> mu) {
    const int n = static_cast<int>(diag.size());
    Mat gram(n, n);
    for (int i = 0; i < n; ++i) gram(i, i) = diag[i];
    std::vector<MuValue> mv;
    for (int i = 0; i < n; ++i) mv.emplace_back(p.lambda_sub(), mu[i]);
    return {p, n, std::move(gram), std::move(mv)};
}

}  // namespace

TEST_CASE("form parameters: only three combinations construct") {
    REQUIRE_NOTHROW(FormParameter(1, LambdaSub::zero));
    REQUIRE_NOTHROW(FormParameter(-1, LambdaSub::even));
    REQUIRE_NOTHROW(FormParameter(-1, LambdaSub::all));
    REQUIRE_THROWS_AS(FormParameter(1, LambdaSub::even), input_error);
    REQUIRE_THROWS_AS(FormParameter(1, LambdaSub::all), input_error);
    REQUIRE_THROWS_AS(FormParameter(-1, LambdaSub::zero), input_error);
    REQUIRE_THROWS_AS(FormParameter(2, LambdaSub::zero), input_error);
}

TEST_CASE("form parameter containment {a - eps a} in Lambda in {a : a + eps a = 0}") {
    for (FormParameter p : {kPlus, kEven, kAll}) {
        for (int a = -8; a <= 8; ++a) {
            // lower containment: a - eps a always lands in Lambda
            REQUIRE(p.lambda_contains(Int(a) - p.epsilon() * Int(a)));
            // upper containment: members of Lambda satisfy a + eps a = 0;
            // vacuous for eps = -1, forces Lambda = {0} for eps = +1
            if (p.lambda_contains(Int(a))) REQUIRE(Int(a) + p.epsilon() * Int(a) == 0);
        }
    }
}

TEST_CASE("mu values reduce in Z/Lambda") {
    REQUIRE(MuValue(LambdaSub::even, 2).is_zero());
    REQUIRE(MuValue(LambdaSub::even, -3).value() == 1);
    REQUIRE(MuValue(LambdaSub::all, 17).is_zero());
    REQUIRE(MuValue(LambdaSub::zero, -5).value() == -5);
    REQUIRE(MuValue(LambdaSub::even, 1) + MuValue(LambdaSub::even, 1) == MuValue(LambdaSub::even, 0));
}

TEST_CASE("eval_lambda on hyperbolic modules") {
    auto h = hyperbolic_module(kEven, 1);
    REQUIRE(eval_lambda(h, {1, 0}, {0, 1}) == 1);
    REQUIRE(eval_lambda(h, {0, 1}, {1, 0}) == -1);

    // skewness forces zero on the diagonal
    Rng rng(11);
    for (int t = 0; t < 50; ++t) {
        auto tw = twisted_hyperbolic(rng, kEven, 2, 5);
        IntVec x(4);
        for (auto& c : x) c = rand_range(rng, -3, 3);
        REQUIRE(eval_lambda(tw.module, x, x) == 0);
    }

    auto h2p = hyperbolic_module(kPlus, 2);
    REQUIRE(eval_lambda(h2p, {1, 0, 0, 1}, {0, 1, 1, 0}) == 2);  // (e1+f2, f1+e2)
    REQUIRE_THROWS_AS(eval_lambda(h2p, {1, 0}, {0, 1, 0, 0}), input_error);
}

TEST_CASE("eval_mu closed form") {
    for (FormParameter p : {kPlus, kEven, kAll}) {
        auto h = hyperbolic_module(p, 1);
        REQUIRE(eval_mu(h, {1, 0}).is_zero());
        REQUIRE(eval_mu(h, {0, 1}).is_zero());
    }
    auto hp = hyperbolic_module(kPlus, 1);
    REQUIRE(eval_mu(hp, {1, 1}).value() == 1);  // mu(e+f) = lambda(e,f)
    auto he = hyperbolic_module(kEven, 1);
    REQUIRE(eval_mu(he, {2, 1}).is_zero());  // mu(f+2e) = 2 lambda(e,f) = 0 mod 2
}

TEST_CASE("quadratic form axioms hold exhaustively on small modules") {
    // axiom (i) mu(ax) = a^2 mu(x); axiom (ii) mu(x+y)-mu(x)-mu(y) = lambda(x,y)
    Rng rng(23);
    for (int t = 0; t < 60; ++t) {
        FormParameter p = t % 3 == 0 ? kPlus : (t % 3 == 1 ? kEven : kAll);
        auto tw = twisted_hyperbolic(rng, p, 1 + t % 2, 4);
        const auto& m = tw.module;
        for (int reps = 0; reps < 30; ++reps) {
            IntVec x(m.rank), y(m.rank);
            for (auto& c : x) c = rand_range(rng, -2, 2);
            for (auto& c : y) c = rand_range(rng, -2, 2);
            for (int a = -3; a <= 3; ++a) {
                IntVec ax(m.rank);
                for (int i = 0; i < m.rank; ++i) ax[i] = a * x[i];
                REQUIRE(eval_mu(m, ax) == eval_mu(m, x).scaled(Int(a) * a));
            }
            IntVec sum(m.rank);
            for (int i = 0; i < m.rank; ++i) sum[i] = x[i] + y[i];
            MuValue lhs = eval_mu(m, sum) - eval_mu(m, x) - eval_mu(m, y);
            REQUIRE(lhs == MuValue(p.lambda_sub(), eval_lambda(m, x, y)));
        }
    }
}

TEST_CASE("validate names violations") {
    for (FormParameter p : {kPlus, kEven, kAll})
        for (int g = 0; g <= 3; ++g) REQUIRE(validate(hyperbolic_module(p, g)).ok);

    auto odd_diag = diag_module(kPlus, {1, -1}, {0, 0});
    auto v = validate(odd_diag);
    REQUIRE_FALSE(v.ok);
    REQUIRE(v.violation == "gram diagonal must equal twice mu on basis vectors");

    QuadraticModule not_skew(kEven, 2, Mat(2, 2, {0, 1, 1, 0}),
                             {MuValue::zero(LambdaSub::even), MuValue::zero(LambdaSub::even)});
    REQUIRE_FALSE(validate(not_skew).ok);

    QuadraticModule diag_nonzero(kEven, 2, Mat(2, 2, {1, 1, -1, 0}),
                                 {MuValue::zero(LambdaSub::even), MuValue::zero(LambdaSub::even)});
    REQUIRE_FALSE(validate(diag_nonzero).ok);

    // degenerate gram is fine
    QuadraticModule degenerate(kPlus, 2, Mat(2, 2, {0, 0, 0, 0}),
                               {MuValue::zero(LambdaSub::zero), MuValue::zero(LambdaSub::zero)});
    REQUIRE(validate(degenerate).ok);
}

TEST_CASE("is_morphism checks both form conditions") {
    auto hp = hyperbolic_module(kPlus, 1);
    REQUIRE(is_morphism(Mat::identity(2), hp, hp));
    REQUIRE_FALSE(is_morphism(Mat(2, 2, {1, 1, 0, 1}), hp, hp));  // e->e, f->f+e kills mu

    auto he = hyperbolic_module(kEven, 1);
    REQUIRE(is_morphism(Mat(2, 2, {1, 2, 0, 1}), he, he));  // e->e, f->f+2e

    auto h2 = hyperbolic_module(kEven, 2);
    REQUIRE_THROWS_AS(is_morphism(Mat::identity(2), hp, he), input_error);
    REQUIRE_THROWS_AS(is_morphism(Mat::identity(2), he, h2), input_error);
}

TEST_CASE("direct_sum is block diagonal") {
    auto h = hyperbolic_module(kEven, 1);
    auto h2 = direct_sum(h, h);
    REQUIRE(h2.rank == 4);
    REQUIRE(h2.gram == hyperbolic_module(kEven, 2).gram);

    auto zero = QuadraticModule::zero_module(kEven);
    auto same = direct_sum(h, zero);
    REQUIRE(same.rank == 2);
    REQUIRE(same.gram == h.gram);

    auto a = diag_module(kPlus, {2}, {1});
    auto b = diag_module(kPlus, {-2}, {-1});
    auto ab = direct_sum(a, b);
    REQUIRE(ab.gram == Mat(2, 2, {2, 0, 0, -2}));
    REQUIRE_THROWS_AS(direct_sum(h, hyperbolic_module(kPlus, 1)), input_error);
}

TEST_CASE("orthogonal_complement splits off the image") {
    auto h = hyperbolic_module(kEven, 1);
    auto h2 = hyperbolic_module(kEven, 2);

    SECTION("standard inclusion H into H^2") {
        Mat inc(4, 2);
        inc(0, 0) = 1;
        inc(1, 1) = 1;
        auto split = orthogonal_complement(make_morphism(h, h2, inc));
        REQUIRE(split.complement.rank == 2);
        REQUIRE(is_isomorphic_bounded(split.complement, h, 1).has_value());
    }
    SECTION("identity has trivial complement") {
        auto split = orthogonal_complement(make_morphism(h, h, Mat::identity(2)));
        REQUIRE(split.complement.rank == 0);
    }
    SECTION("skewed embedding e -> e1, f -> f1 + e2") {
        Mat f(4, 2);
        f(0, 0) = 1;  // e -> e1
        f(1, 1) = 1;  // f -> f1 + e2
        f(2, 1) = 1;
        auto split = orthogonal_complement(make_morphism(h, h2, f));
        REQUIRE(split.complement.rank == 2);
        Int pairing = split.complement.gram(0, 1);
        REQUIRE((pairing == 1 || pairing == -1));
        REQUIRE(is_isomorphic_bounded(split.complement, h, 2).has_value());
    }
    SECTION("degenerate source is rejected") {
        QuadraticModule deg(kEven, 2, Mat(2, 2), {MuValue::zero(LambdaSub::even), MuValue::zero(LambdaSub::even)});
        QModMorphism f{deg, h2, Mat(4, 2)};
        REQUIRE_THROWS_AS(orthogonal_complement(f), input_error);
    }
}

TEST_CASE("orthogonal_complement certificate block-diagonalises") {
    Rng rng(31);
    for (int t = 0; t < 25; ++t) {
        FormParameter p = t % 2 ? kEven : kPlus;
        auto h = hyperbolic_module(p, 1);
        auto tw = twisted_hyperbolic(rng, p, 2, 4);
        // embed H as the first twisted block
        Mat s_inv = inverse_unimodular(tw.into_h);
        Mat f(4, 2);
        for (int r = 0; r < 4; ++r) {
            f(r, 0) = s_inv(r, 0);
            f(r, 1) = s_inv(r, 1);
        }
        auto split = orthogonal_complement(make_morphism(h, tw.module, f));
        const Mat& u = split.change_of_basis;
        REQUIRE(is_unimodular(u));
        Mat diag = u.transposed() * tw.module.gram * u;
        REQUIRE(diag == Mat::block_diag(h.gram, split.complement.gram));
    }
}

TEST_CASE("enumerate_hyperbolic_morphisms matches the frozen example") {
    auto hp = hyperbolic_module(kPlus, 1);
    auto ms = enumerate_hyperbolic_morphisms(hp, 1, 1);
    REQUIRE(ms.size() == 4);
    // lexicographic order of the column-major flattening, from (-1,...)
    REQUIRE(ms[0].matrix == Mat(2, 2, {-1, 0, 0, -1}));
    REQUIRE(ms[1].matrix == Mat(2, 2, {0, -1, -1, 0}));
    REQUIRE(ms[2].matrix == Mat(2, 2, {0, 1, 1, 0}));
    REQUIRE(ms[3].matrix == Mat(2, 2, {1, 0, 0, 1}));

    REQUIRE(enumerate_hyperbolic_morphisms(QuadraticModule::zero_module(kPlus), 1, 2).empty());
    auto h2e = hyperbolic_module(kEven, 2);
    auto all2 = enumerate_hyperbolic_morphisms(h2e, 2, 1);
    bool has_identity = false;
    for (const auto& m : all2) has_identity = has_identity || m.matrix == Mat::identity(4);
    REQUIRE(has_identity);
}

TEST_CASE("every enumerated morphism is a morphism") {
    Rng rng(41);
    for (int t = 0; t < 8; ++t) {
        FormParameter p = t % 3 == 0 ? kPlus : (t % 3 == 1 ? kEven : kAll);
        auto tw = twisted_hyperbolic(rng, p, 1 + t % 2, 3);
        auto h = hyperbolic_module(p, 1);
        for (const auto& m : enumerate_hyperbolic_morphisms(tw.module, 1, 1))
            REQUIRE(is_morphism(m.matrix, h, tw.module));
    }
}

TEST_CASE("witt index lower bounds") {
    REQUIRE(witt_index_lower_bound(hyperbolic_module(kEven, 3), 1).g_lb == 3);
    auto w = witt_index_lower_bound(hyperbolic_module(kPlus, 3), 1);
    REQUIRE(w.g_lb == 3);
    REQUIRE(w.witness.has_value());
    REQUIRE(is_morphism(w.witness->matrix, w.witness->source, w.witness->target));

    QuadraticModule zero_form(kPlus, 2, Mat(2, 2),
                              {MuValue::zero(LambdaSub::zero), MuValue::zero(LambdaSub::zero)});
    REQUIRE(witt_index_lower_bound(zero_form, 2).g_lb == 0);

    // definite diagonal form: lambda(x,y) always even, no hyperbolic pair
    auto definite = diag_module(kPlus, {2, -2}, {1, -1});
    REQUIRE(witt_index_lower_bound(definite, 3).g_lb == 0);
}

TEST_CASE("stable witt lower bound") {
    REQUIRE(stable_witt_lower_bound(hyperbolic_module(kEven, 2), 1, 1) == 2);
    REQUIRE(stable_witt_lower_bound(QuadraticModule::zero_module(kEven), 2, 1) == 0);
    auto definite = diag_module(kPlus, {2, -2}, {1, -1});
    REQUIRE(stable_witt_lower_bound(definite, 1, 2) >= 0);
}

TEST_CASE("stable witt grows by one under adding H") {
    Rng rng(47);
    for (int t = 0; t < 6; ++t) {
        FormParameter p = t % 2 ? kEven : kPlus;
        auto tw = twisted_hyperbolic(rng, p, 1, 3);
        auto stabilized = direct_sum(tw.module, hyperbolic_module(p, 1));
        for (int k = 0; k <= 1; ++k)
            REQUIRE(stable_witt_lower_bound(stabilized, k, 2) >=
                    stable_witt_lower_bound(tw.module, k, 2) + 1);
    }
}

TEST_CASE("arf invariant examples") {
    REQUIRE(arf_invariant(hyperbolic_module(kEven, 1)) == 0);
    REQUIRE(arf_invariant(hyperbolic_module(kEven, 2)) == 0);
    QuadraticModule tw(kEven, 2, Mat(2, 2, {0, 1, -1, 0}),
                       {MuValue(LambdaSub::even, 1), MuValue(LambdaSub::even, 1)});
    REQUIRE(arf_invariant(tw) == 1);

    REQUIRE_THROWS_AS(arf_invariant(hyperbolic_module(kPlus, 1)), input_error);
    QuadraticModule degenerate(kEven, 2, Mat(2, 2, {0, 2, -2, 0}),
                               {MuValue::zero(LambdaSub::even), MuValue::zero(LambdaSub::even)});
    REQUIRE_THROWS_AS(arf_invariant(degenerate), input_error);
}

TEST_CASE("arf additivity on rank <= 4 pairs") {
    std::vector<QuadraticModule> planes;
    for (int mask = 0; mask < 4; ++mask)
        planes.emplace_back(kEven, 2, Mat(2, 2, {0, 1, -1, 0}),
                            std::vector<MuValue>{MuValue(LambdaSub::even, mask & 1),
                                                 MuValue(LambdaSub::even, (mask >> 1) & 1)});
    for (const auto& m : planes)
        for (const auto& n : planes)
            REQUIRE(arf_invariant(direct_sum(m, n)) == (arf_invariant(m) ^ arf_invariant(n)));
}

TEST_CASE("is_isomorphic_bounded") {
    auto h = hyperbolic_module(kEven, 1);
    auto w = is_isomorphic_bounded(h, h, 1);
    REQUIRE(w.has_value());
    REQUIRE(*w == Mat(2, 2, {-1, 0, 0, -1}));  // first in lexicographic order

    QuadraticModule zero_form(kEven, 2, Mat(2, 2),
                              {MuValue::zero(LambdaSub::even), MuValue::zero(LambdaSub::even)});
    REQUIRE_FALSE(is_isomorphic_bounded(h, zero_form, 2).has_value());

    // base-changed copy of H: the base change itself is a witness
    Mat base(2, 2, {1, 2, 0, 1});  // e -> e, f -> f + 2e
    Mat gram = base.transposed() * h.gram * base;
    std::vector<MuValue> mu{eval_mu(h, base.col(0)), eval_mu(h, base.col(1))};
    QuadraticModule image(kEven, 2, std::move(gram), std::move(mu));
    auto iso = is_isomorphic_bounded(image, h, 2);
    REQUIRE(iso.has_value());
    REQUIRE(is_morphism(*iso, image, h));
    REQUIRE(is_unimodular(*iso));
}
