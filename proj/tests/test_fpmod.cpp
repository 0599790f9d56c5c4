#include "doctest.h"

#include "primring/fpmod.hpp"

#include <random>

using namespace primring;

namespace {

TruncRing XY2() { return TruncRing({"X", "Y"}, 2, {1, 1}, 2); }

PresMod ideal_of(const TruncRing& R, std::vector<std::string> gens) {
    std::vector<Poly> g;
    for (const auto& s : gens) g.push_back(R.parse(s));
    return PresMod::ideal(R, g);
}

}  // namespace

TEST_CASE("balanced ideals of the worked example") {
    TruncRing R = XY2();
    PresMod I = ideal_of(R, {"X^2", "Y^2", "X*Y"});
    PresMod J = ideal_of(R, {"X^2", "Y^2+t", "X*Y"});
    CHECK(I.is_graded());
    CHECK(J.is_graded());
    auto bi = is_balanced(I);
    CHECK(bi.balanced);
    auto bj = is_balanced(J);
    CHECK_FALSE(bj.balanced);
    REQUIRE(bj.witness);
    CHECK(bj.witness->embedded->at(0) == R.parse("t*X"));
    CHECK(bj.witness->element == Vec{R.zero(), R.parse("X"), R.parse("-Y")});
    CHECK(bj.witness->certificate == "X*t = X*(Y^2+t) - Y*(X*Y)");

    auto ci = comparison_maps(I);
    for (const auto& g : ci.gamma_lower) CHECK(g.is_zero());
    for (const auto& g : ci.gamma_upper) CHECK(g.is_zero());
    auto cj = comparison_maps(J);
    CHECK_FALSE(cj.gamma_upper[0].is_zero());
    CHECK(balance_criteria(J).agree());
    CHECK(balance_criteria(I).agree());
}

TEST_CASE("canonical filtrations of small modules") {
    TruncRing R({"x", "y"}, 2);
    PresMod F = PresMod::free(R, 2);
    auto first = first_canonical_filtration(F), second = second_canonical_filtration(F);
    CHECK(first.is_valid());
    CHECK(second.is_valid());
    // M_i = M^(n-i) for free modules, G_i free of rank p.
    for (int i = 0; i <= 2; ++i)
        CHECK(same_span(R, 2, concat(first.members[i], F.relations), concat(second.members[i], F.relations)));
    CHECK(quasi_free_type(F).ranks == std::vector<int>{2, 2});

    // R = R[2]/(t): M_1 = 0.
    PresMod Rm = PresMod::cyclic(R, {R.t()});
    CHECK(contained(R, 1, first_member(Rm, 1), Rm.relations));

    // R ⊕ R[2]: M^(1) = R ⊕ t R[2].
    PresMod S = PresMod::direct_sum(Rm, PresMod::free(R, 1));
    auto m1 = second_member(S, 1);
    std::vector<Vec> expect = {{R.one(), R.zero()}, {R.zero(), R.t()}};
    CHECK(same_span(R, 2, concat(m1, S.relations), concat(expect, S.relations)));

    // R[2]/(xt) over Q[x]: G_1 = R/(x).
    TruncRing Rx({"x"}, 2);
    PresMod Q = PresMod::cyclic(Rx, {Rx.parse("x*t")});
    auto G1 = first_quotient(Q, 1).presentation();
    std::vector<Vec> rels;
    for (const auto& r : G1.relations) rels.push_back(substitute_zero(r, Rx.t_var()));
    auto mp = minimize_graded(G1.ngens, rels, {1});
    REQUIRE(mp.relations.size() == 1);
    CHECK(mp.relations[0][0] == Rx.parse("x"));
}

TEST_CASE("comparison maps of a free module are isomorphisms") {
    TruncRing R({"x", "y"}, 3);
    auto cm = comparison_maps(PresMod::free(R, 2, {0, 1}));
    CHECK(cm.lambda.size() == 2);
    for (const auto& l : cm.lambda) CHECK(l.is_surjective());
    for (const auto& m : cm.mu) CHECK(m.is_injective());
}

TEST_CASE("quasi-free type examples") {
    TruncRing R({"x", "y"}, 2);
    PresMod A = PresMod::direct_sum(PresMod::free(R, 1), PresMod::R_i(R, 1));
    CHECK(quasi_free_type(A).type == std::vector<int>{1, 1});
    // m = (x, y) over R[2] through R.
    PresMod m = PresMod::ideal(R, {R.parse("x"), R.parse("y")});
    m.relations.push_back({R.t(), R.zero()});
    m.relations.push_back({R.zero(), R.t()});
    m.normalize();
    REQUIRE(m.is_graded());
    auto q = quasi_free_type(m);
    CHECK_FALSE(q.type);
    CHECK(q.first_non_free == 0);

    TruncRing Rx({"x"}, 2);
    CHECK(generic_type(PresMod::free(Rx, 3)) == std::vector<int>{0, 3});
    CHECK(generic_type(PresMod::cyclic(Rx, {Rx.parse("x*t")})) == std::vector<int>{1, 0});
    CHECK(generic_type(PresMod::cyclic(Rx, {Rx.parse("x")})) == std::vector<int>{0, 0});
}

TEST_CASE("extensions of R by R[i]") {
    for (int n = 2; n <= 3; ++n)
        for (int i = 1; i < n; ++i) {
            TruncRing R({"x"}, n);
            auto e1 = extension_R_by_Ri(R, R.one(), i);
            CHECK(is_exact(e1));
            std::vector<int> t1(static_cast<size_t>(n), 0);
            t1[static_cast<size_t>(i)] = 1;
            CHECK(quasi_free_type(e1.P).type == t1);
            auto e0 = extension_R_by_Ri(R, R.zero(), i);
            CHECK(is_exact(e0));
            std::vector<int> t0(static_cast<size_t>(n), 0);
            t0[0] += 1;
            t0[static_cast<size_t>(i - 1)] += 1;
            CHECK(quasi_free_type(e0.P).type == t0);
        }
    TruncRing R({"x"}, 2);
    auto ex = extension_R_by_Ri(R, R.parse("x"), 1);
    CHECK(is_exact(ex));
    auto q = quasi_free_type(ex.P);
    CHECK_FALSE(q.type);
    CHECK(q.first_non_free == 0);
    CHECK(extension_is_R_i1(R.one()));
    CHECK_FALSE(extension_is_R_i1(R.parse("x")));
    CHECK(extension_is_R_i1(R.parse("1+x")));
}

TEST_CASE("split extension and the cocycle condition") {
    TruncRing R({"x", "y"}, 2);
    PresMod N = PresMod::R_i(R, 1);
    PresMod M = PresMod::cyclic(R, {R.parse("x"), R.parse("y")});
    auto e = build_extension(N, M, {Vec{R.zero()}, Vec{R.zero()}});
    CHECK(is_exact(e));
    CHECK(e.P.relations.size() == 3);
    // f1 = (1, 0) violates the cocycle condition: syzygy (y, -x) maps to y.
    CHECK_THROWS_AS(build_extension(N, M, {Vec{R.one()}, Vec{R.zero()}}), std::invalid_argument);
}

TEST_CASE("hom and ext examples") {
    TruncRing R({"x"}, 3);
    PresMod F = PresMod::free(R, 1);
    for (int i = 1; i <= 3; ++i) {
        PresMod Ri = PresMod::R_i(R, i);
        auto H = hom_module(Ri, F);
        // Generated by t^{n-i}, so the series is that of R[i] shifted by (n-i) w_t.
        CHECK(H.space.hilbert_series() ==
              Subquotient{R, 1, {{R.one()}}, Ri.relations, {0}}.hilbert_series().shifted(3 - i));
        auto H2 = hom_module(F, Ri);
        CHECK(H2.space.hilbert_series() == Subquotient{R, 1, {{R.one()}}, Ri.relations, {0}}.hilbert_series());
        CHECK(ext1_module(F, Ri).space.is_zero());
    }
    PresMod T = PresMod::cyclic(R, {R.parse("x")});
    CHECK(hom_module(T, F).space.is_zero());
    // Ext^1(R, R[i]) = R, shifted by the weight of t.
    TruncRing R0({"x", "y"}, 3, {1, 1}, 0);
    PresMod Rm = PresMod::cyclic(R0, {R0.t()});
    for (int i = 1; i < 3; ++i) {
        auto E = ext1_module(Rm, PresMod::R_i(R0, i));
        CHECK(E.space.hilbert_series() == HilbertSeries({{0, 1}}, {1, 1}));
    }
}

TEST_CASE("evaluating Hom elements") {
    TruncRing R({"x"}, 2);
    PresMod M = PresMod::R_i(R, 1);
    PresMod N = PresMod::free(R, 1);
    auto H = hom_module(M, N);
    REQUIRE(H.pres.ngens >= 1);
    for (int l = 0; l < H.pres.ngens; ++l) {
        Vec c = zero_vec(R.ring(), H.pres.ngens);
        c[l] = R.one();
        ModMap f = H.to_map(c);
        CHECK(f.images()[0][0].coefficient_of(R.t_var(), 0).is_zero());
    }
}

TEST_CASE("surjectivity from the restriction") {
    TruncRing R({"x"}, 2);
    PresMod F1 = PresMod::free(R, 1), F2 = PresMod::free(R, 2);
    CHECK(surjective_iff_restriction(ModMap(F1, F1, {{R.one()}})));
    CHECK_FALSE(surjective_iff_restriction(ModMap(F1, F1, {{R.t()}})));
    CHECK(surjective_iff_restriction(ModMap(F2, F1, {{R.one()}, {R.t()}})));
    CHECK_THROWS(surjective_iff_restriction(ModMap(PresMod::R_i(R, 1), F1, {{R.t()}})));
}

TEST_CASE("refinement of two-step chains") {
    TruncRing R({"x", "y"}, 2);
    PresMod M = PresMod::free(R, 1);
    Vec a{R.parse("x")}, b{R.parse("y")};
    FiltrationChain D{M, {{{R.one()}}, {a}, {}}}, F{M, {{{R.one()}}, {b}, {}}};
    REQUIRE(D.is_valid());
    auto ref = refine_filtrations(D, F);
    CHECK(ref.similar);
    CHECK(ref.D.is_valid());
    CHECK(ref.F.is_valid());
    // D' = M, (x) + (y), (x), (x) ∩ (y), 0.
    CHECK(ref.D.size() == 5);
    CHECK(same_span(R, 1, ref.D.members[1], {a, b}));
    CHECK(same_span(R, 1, ref.D.members[2], {a}));
    CHECK(same_span(R, 1, ref.D.members[3], {Vec{R.parse("x*y")}}));
    auto same = refine_filtrations(D, D);
    CHECK(same.D.size() == D.size());
}
