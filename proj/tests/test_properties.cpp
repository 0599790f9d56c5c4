#include "doctest.h"

#include "suite.hpp"

using namespace primring;

TEST_CASE("balancedness criteria agree on the graded suite") {
    for (const auto& [name, M] : suite::graded_modules()) {
        INFO(name);
        auto c = balance_criteria(M);
        CHECK(c.agree());
        CHECK(is_balanced(M).balanced == c.filtrations_equal);
        // M_i ⊆ M^(n-i) always.
        for (int i = 0; i <= M.ring.n(); ++i)
            CHECK(contained(M.ring, M.ngens, first_member(M, i),
                            concat(second_member(M, M.ring.n() - i), M.relations)));
    }
}

TEST_CASE("Gamma_i and Gamma^(i) have shifted Hilbert series") {
    int nontrivial = 0;
    for (const auto& [name, M] : suite::graded_modules()) {
        INFO(name);
        auto cm = comparison_maps(M);
        int w = M.ring.t_weight();
        for (size_t i = 0; i < cm.gamma_lower.size(); ++i) {
            auto lo = cm.gamma_lower[i].hilbert_series();
            auto up = cm.gamma_upper[i].hilbert_series();
            INFO("i = " << i << "  lower " << lo << "  upper " << up);
            CHECK(lo == up.shifted(static_cast<int>(i) * w));
            if (i > 0 && w != 0 && !lo.is_zero()) ++nontrivial;
        }
    }
    CHECK(nontrivial >= 1);
}

namespace {

// Hypotheses and conclusion of the uniqueness statement for balanced modules:
// a chain with nonzero t-annihilated quotients must be the first canonical one.
struct ChainCheck {
    bool hypotheses = true;
    bool equals_first = true;
};

ChainCheck check_chain(const PresMod& M, const std::vector<std::vector<Vec>>& N) {
    const TruncRing& R = M.ring;
    ChainCheck c;
    for (size_t i = 0; i + 1 < N.size(); ++i) {
        auto below = concat(N[i + 1], M.relations);
        if (!contained(R, M.ngens, N[i + 1], concat(N[i], M.relations))) c.hypotheses = false;
        if (contained(R, M.ngens, N[i], below)) c.hypotheses = false;
        if (!contained(R, M.ngens, scale(R.t(), N[i]), below)) c.hypotheses = false;
    }
    for (size_t i = 0; i < N.size(); ++i)
        if (!same_span(R, M.ngens, concat(N[i], M.relations), concat(first_member(M, static_cast<int>(i)), M.relations)))
            c.equals_first = false;
    return c;
}

Vec random_combination(const TruncRing& R, const std::vector<Vec>& gens, std::mt19937& rng, int rank) {
    Vec v = zero_vec(R.ring(), rank);
    for (const auto& g : gens) v = v + suite::random_monomial(R, rng, static_cast<int>(rng() % 2)) * g;
    return R.reduce(v);
}

}  // namespace

TEST_CASE("balanced modules: t-annihilated chains are the first canonical filtration") {
    std::mt19937 rng(41);
    int tested = 0;
    for (const auto& [name, M] : suite::graded_modules()) {
        if (!is_balanced(M).balanced) continue;
        INFO(name);
        const int n = M.ring.n();
        // Shuffled generators of the canonical chain: random combinations of
        // M_i's generators plus elements of M_{i+1}, with M_i's generators kept
        // up to order.
        for (int rep = 0; rep < 2; ++rep) {
            std::vector<std::vector<Vec>> N;
            for (int i = 0; i <= n; ++i) {
                auto gens = first_member(M, i);
                std::shuffle(gens.begin(), gens.end(), rng);
                auto next = first_member(M, i + 1);
                if (!next.empty()) gens.push_back(random_combination(M.ring, next, rng, M.ngens));
                N.push_back(gens);
            }
            auto c = check_chain(M, N);
            if (!c.hypotheses) continue;  // zero quotients (e.g. modules killed by t)
            CHECK(c.equals_first);
            ++tested;
        }
    }
    CHECK(tested >= 10);

    // Without balancedness the second filtration is such a chain yet differs.
    auto J = suite::ideal(TruncRing({"X", "Y"}, 2, {1, 1}, 2), {"X^2", "Y^2+t", "X*Y"});
    std::vector<std::vector<Vec>> N = {second_member(J, 2), second_member(J, 1), {}};
    auto c = check_chain(J, N);
    CHECK(c.hypotheses);
    CHECK_FALSE(c.equals_first);
}

TEST_CASE("quasi-free type survives scrambled presentations") {
    std::mt19937 rng(99);
    for (int n = 2; n <= 3; ++n) {
        TruncRing R({"x", "y"}, n);
        for (int rep = 0; rep < 4; ++rep) {
            std::vector<int> m(static_cast<size_t>(n));
            int total = 0;
            for (auto& v : m) {
                v = static_cast<int>(rng() % 2);
                total += v;
            }
            if (total == 0) m.back() = 1;
            PresMod M = suite::quasi_free(R, m, {0, 1, 0, 2});
            PresMod S = suite::scramble(M, rng, 8);
            REQUIRE(S.is_graded());
            CHECK(quasi_free_type(S).type == m);
            CHECK(generic_type(S) == m);
        }
    }
    for (const auto& [name, M] : suite::graded_modules()) {
        INFO(name);
        auto q = quasi_free_type(M);
        PresMod S = suite::scramble(M, rng, 5);
        REQUIRE(S.is_graded());
        CHECK(quasi_free_type(S).type == q.type);
        CHECK(generic_type(S) == generic_type(M));
    }
}

TEST_CASE("quotients of free modules by quasi-free submodules") {
    // E = F / N is quasi-free iff every functional on N extends to F.
    TruncRing R({"x", "y"}, 3);
    struct Case {
        std::vector<Vec> cols;
        int rank;
    };
    auto P = [&](const char* s) { return R.parse(s); };
    std::vector<Case> cases = {
        {{{P("t")}}, 1},
        {{{P("t^2")}}, 1},
        {{{P("x")}}, 1},
        {{{P("1"), P("x")}}, 2},
        {{{P("t"), P("x")}}, 2},
        {{{P("t"), P("t*x")}}, 2},
        {{{P("t"), P("0")}, {P("0"), P("t^2")}}, 2},
        {{{P("x*t"), P("y*t")}}, 2},
        {{{P("x+t"), P("y")}}, 2},
    };
    int yes = 0, no = 0;
    for (const auto& c : cases) {
        PresMod F = PresMod::free(R, c.rank);
        Subquotient Nsq{R, c.rank, c.cols, {}, std::vector<int>(static_cast<size_t>(c.rank), 0)};
        PresMod N = Nsq.presentation();
        INFO(N.to_string());
        if (!N.is_graded() || !quasi_free_type(N).type) continue;
        PresMod E = F;
        E.relations = c.cols;
        E.normalize();
        bool qf = quasi_free_type(E).type.has_value();
        auto H = hom_module(N, PresMod::free(R, 1));
        std::vector<Vec> restrictions;
        for (int l = 0; l < c.rank; ++l) {
            Vec v;
            for (const auto& col : c.cols) v.push_back(col[l]);
            restrictions.push_back(v);
        }
        bool onto = contained(R, H.space.rank, H.space.gens, concat(restrictions, H.space.rels));
        CHECK(qf == onto);
        (qf ? yes : no) += 1;
    }
    CHECK(yes >= 3);
    CHECK(no >= 2);
}
