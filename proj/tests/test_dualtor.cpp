#include "doctest.h"

#include "primring/dualtor.hpp"
#include "suite.hpp"

using namespace primring;

namespace {

PresMod quotient_by(const PresMod& M, const std::vector<Vec>& extra) {
    PresMod Q = M;
    Q.relations = concat(M.relations, extra);
    Q.embedding.reset();
    Q.normalize();
    return Q;
}

bool whole_module_is_torsion(const PresMod& M) {
    auto T = torsion(M);
    std::vector<Vec> all;
    for (int j = 0; j < M.ngens; ++j) all.push_back(unit_vec(M.ring.ring(), M.ngens, j));
    return contained_global(M.ring, M.ngens, all, concat(T.generators, M.relations));
}

}  // namespace

TEST_CASE("duals") {
    TruncRing R({"x"}, 3);
    for (int i = 1; i <= 3; ++i) {
        PresMod Ri = PresMod::R_i(R, i);
        auto D = dual(Ri);
        auto hs = D.space.hilbert_series();
        CHECK(hs == Subquotient{R, 1, {{R.one()}}, Ri.relations, {0}}.hilbert_series().shifted(3 - i));
    }
    CHECK(dual(PresMod::cyclic(R, {R.parse("x")})).space.is_zero());
    auto F = dual(PresMod::free(R, 2));
    Subquotient free2{R, 2, {unit_vec(R.ring(), 2, 0), unit_vec(R.ring(), 2, 1)}, {}, {0, 0}};
    CHECK(F.space.hilbert_series() == free2.hilbert_series());
}

TEST_CASE("natural map") {
    TruncRing R({"x"}, 2);
    auto nf = natural_map(PresMod::free(R, 2));
    CHECK(nf.map.is_injective());
    CHECK(nf.map.is_surjective());
    auto nt = natural_map(PresMod::cyclic(R, {R.parse("x")}));
    CHECK(nt.map.image().is_zero());
    PresMod Q = PresMod::cyclic(R, {R.parse("x*t")});
    auto nq = natural_map(Q);
    auto K = nq.map.kernel();
    CHECK(same_span(R, 1, concat(K.gens, Q.relations), concat({Vec{R.t()}}, Q.relations)));
}

TEST_CASE("torsion examples") {
    TruncRing R({"x"}, 2);
    auto T1 = torsion(PresMod::cyclic(R, {R.parse("x")}));
    CHECK(T1.generators.size() == 1);
    CHECK(torsion(PresMod::free(R, 2)).torsion_free());
    PresMod Q = PresMod::cyclic(R, {R.parse("x*t")});
    auto T = torsion(Q);
    REQUIRE(T.generators.size() == 1);
    CHECK(same_span(R, 1, concat(T.generators, Q.relations), concat({Vec{R.t()}}, Q.relations)));
    REQUIRE(T.witnesses.size() == 1);
    CHECK_FALSE(substitute_zero(T.witnesses[0].s, R.t_var()).is_zero());
    for (const auto& w : T.witnesses) CHECK(contained_global(R, 1, {R.reduce(w.s * w.generator)}, Q.relations));
}

TEST_CASE("torsion properties on the suite") {
    int n_torsion = 0;
    for (const auto& [name, M] : suite::graded_modules()) {
        INFO(name);
        auto T = torsion(M);
        if (!T.torsion_free()) ++n_torsion;
        for (const auto& w : T.witnesses) {
            CHECK_FALSE(substitute_zero(w.s, M.ring.t_var()).is_zero());
            CHECK(contained_global(M.ring, M.ngens, {M.ring.reduce(w.s * w.generator)}, M.relations));
        }
        // Ext^1(M, R[n]) and coker(t_M) are torsion.
        auto E = ext1_module(M, PresMod::free(M.ring, 1));
        CHECK(whole_module_is_torsion(E.pres));
        auto nm = natural_map(M);
        CHECK(whole_module_is_torsion(nm.map.cokernel().presentation()));
        // ker t_M = T(M).
        CHECK(same_span(M.ring, M.ngens, concat(nm.map.kernel().gens, M.relations), concat(T.generators, M.relations)));
        // M / T(M) is torsion free.
        CHECK(torsion(torsion_free_quotient(M, T)).torsion_free());
        // Torsion-free iff M^(1) is; then the graded pieces are torsion free too.
        PresMod M1 = Subquotient{M.ring, M.ngens, second_member(M, 1), M.relations, M.degree_vector()}.presentation();
        CHECK(T.torsion_free() == torsion(M1).torsion_free());
        if (T.torsion_free()) {
            CHECK(dual_embedding(M).is_injective());
            for (int i = 1; i <= M.ring.n(); ++i) {
                CHECK(torsion(second_quotient(M, i).presentation()).torsion_free());
                CHECK(torsion(quotient_by(M, second_member(M, i))).torsion_free());
            }
        }
        // (M^∨)^(i) and (M/M_i)^∨ have equal Hilbert series.
        auto D = dual(M);
        for (int i = 1; i < M.ring.n(); ++i) {
            Subquotient Di{M.ring, D.pres.ngens, second_member(D.pres, i), D.pres.relations, D.pres.degree_vector()};
            auto rhs = dual(quotient_by(M, first_member(M, i))).space.hilbert_series();
            CHECK(Di.hilbert_series() == rhs);
        }
    }
    CHECK(n_torsion >= 3);
}
