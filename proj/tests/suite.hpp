#pragma once

// Shared test modules and presentation scramblers.

#include "primring/fpmod.hpp"

#include <random>
#include <string>
#include <vector>

namespace suite {

using namespace primring;

inline PresMod ideal(const TruncRing& R, const std::vector<std::string>& gens) {
    std::vector<Poly> g;
    for (const auto& s : gens) g.push_back(R.parse(s));
    return PresMod::ideal(R, g);
}

/// ⊕ R[i]^{m_i}, generators of R[i] in the listed degrees (cycled).
inline PresMod quasi_free(const TruncRing& R, const std::vector<int>& m, std::vector<int> degs = {0}) {
    PresMod out = PresMod::free(R, 0);
    size_t k = 0;
    for (int i = 1; i <= R.n(); ++i)
        for (int c = 0; c < m[static_cast<size_t>(i - 1)]; ++c)
            out = PresMod::direct_sum(out, PresMod::R_i(R, i, degs[k++ % degs.size()]));
    return out;
}

/// The maximal ideal (x, y) of R as an R[n]-module killed by t.
inline PresMod max_ideal_over_R(const TruncRing& R) {
    PresMod m = PresMod::ideal(R, {R.var(0), R.var(1)});
    m.relations.push_back({R.t(), R.zero()});
    m.relations.push_back({R.zero(), R.t()});
    m.normalize();
    return m;
}

struct Named {
    std::string name;
    PresMod M;
};

/// Graded modules over Q[x,y][n] (plus Q[x]) used by the property tests.
inline std::vector<Named> graded_modules() {
    std::vector<Named> out;
    TruncRing R2({"x", "y"}, 2), R3({"x", "y"}, 3), Rx({"x"}, 2);
    TruncRing W({"X", "Y"}, 2, {1, 1}, 2);
    out.push_back({"R[2]^2", PresMod::free(R2, 2)});
    out.push_back({"R[3](-1)+R[3]", PresMod::free(R3, 2, {1, 0})});
    out.push_back({"R[2]+R", quasi_free(R2, {1, 1})});
    out.push_back({"R[3]+R[2]+R", quasi_free(R3, {1, 1, 1}, {0, 1, 2})});
    out.push_back({"R^2 (n=3)", quasi_free(R3, {2, 0, 0})});
    out.push_back({"(X^2,Y^2,XY)", ideal(W, {"X^2", "Y^2", "X*Y"})});
    out.push_back({"(X^2,Y^2+t,XY)", ideal(W, {"X^2", "Y^2+t", "X*Y"})});
    TruncRing W3({"X", "Y"}, 3, {1, 1}, 2);
    out.push_back({"(X^2,Y^2+t,XY) n=3", ideal(W3, {"X^2", "Y^2+t", "X*Y"})});
    out.push_back({"R[3]/(x t)", PresMod::cyclic(R3, {R3.parse("x*t")})});
    out.push_back({"R[2]/(xt) over Q[x]", PresMod::cyclic(Rx, {Rx.parse("x*t")})});
    out.push_back({"R[2]/(x) over Q[x]", PresMod::cyclic(Rx, {Rx.parse("x")})});
    out.push_back({"R[3]/(x t^2)", PresMod::cyclic(R3, {R3.parse("x*t^2")})});
    out.push_back({"m over R", max_ideal_over_R(R2)});
    out.push_back({"(x,y) in R[2]", ideal(R2, {"x", "y"})});
    out.push_back({"(x,y) in R[3]", ideal(R3, {"x", "y"})});
    out.push_back({"(x+t,y) in R[2]", ideal(R2, {"x+t", "y"})});
    out.push_back({"(x,t) in R[3]", ideal(R3, {"x", "t"})});
    out.push_back({"(x^2,t) in R[3]", ideal(R3, {"x^2", "t"})});
    out.push_back({"(t) in R[3]", ideal(R3, {"t"})});
    out.push_back({"(xt,y) in R[2]", ideal(R2, {"x*t", "y"})});
    out.push_back({"ext sigma=1 n=3 i=1", extension_R_by_Ri(R3, R3.one(), 1).P});
    out.push_back({"ext sigma=1 n=3 i=2", extension_R_by_Ri(R3, R3.one(), 2).P});
    out.push_back({"ext sigma=0 n=2", extension_R_by_Ri(R2, R2.zero(), 1).P});
    out.push_back({"ext sigma=x n=2", extension_R_by_Ri(R2, R2.parse("x"), 1).P});
    out.push_back({"R[2]^2/(x e1 - t e2)", [&] {
                       PresMod M = PresMod::free(R2, 2, {0, 0});
                       M.relations.push_back({R2.parse("x"), R2.parse("-t")});
                       M.normalize();
                       return M;
                   }()});
    return out;
}

/// Random homogeneous monomial (possibly involving t) of weighted degree d,
/// times a small nonzero coefficient; zero if none exists.
inline Poly random_monomial(const TruncRing& R, std::mt19937& rng, int d) {
    std::vector<int> vars;
    for (int v = 0; v < R.ring()->nvars(); ++v) vars.push_back(v);
    auto mons = monomials_of_degree(vars, R.ring()->weights(), d);
    std::erase_if(mons, [&](const Monomial& m) { return m[R.t_var()] >= R.n(); });
    if (d < 0 || mons.empty()) return R.zero();
    std::uniform_int_distribution<size_t> pick(0, mons.size() - 1);
    std::uniform_int_distribution<int> c(1, 3);
    return Poly::monomial(R.ring(), mons[pick(rng)], Rational(c(rng) * (rng() % 2 ? 1 : -1)));
}

/// Same module, presentation scrambled by invertible graded generator and
/// relation changes plus a redundant generator.
inline PresMod scramble(const PresMod& M, std::mt19937& rng, int steps = 6) {
    const TruncRing& R = M.ring;
    PresMod P = M;
    auto deg = *P.degrees;
    std::uniform_int_distribution<int> coin(0, 3);
    for (int s = 0; s < steps; ++s) {
        int g = P.ngens;
        if (g == 0) break;
        std::uniform_int_distribution<int> pick(0, g - 1);
        int j = pick(rng), k = pick(rng);
        switch (coin(rng)) {
        case 0: {  // coordinates: v_j += c v_k, with deg c = deg e_k - deg e_j
            if (j == k) break;
            Poly c = random_monomial(R, rng, deg[k] - deg[j]);
            for (auto& r : P.relations) r[j] = R.reduce(r[j] + c * r[k]);
            break;
        }
        case 1: {  // swap two generators
            std::swap(deg[j], deg[k]);
            for (auto& r : P.relations) std::swap(r[j], r[k]);
            break;
        }
        case 2: {  // relation changes: r_a += c r_b, plus a redundant copy
            if (P.relations.size() < 2) break;
            std::uniform_int_distribution<size_t> pr(0, P.relations.size() - 1);
            size_t a = pr(rng), b = pr(rng);
            if (a == b) break;
            auto da = vec_degree(P.relations[a], deg), db = vec_degree(P.relations[b], deg);
            if (!da || !db) break;
            Poly c = random_monomial(R, rng, *da - *db);
            P.relations[a] = R.reduce(P.relations[a] + c * P.relations[b]);
            P.relations.push_back(R.reduce(random_monomial(R, rng, 0) * P.relations[b]));
            break;
        }
        default: {  // extra generator e_new = c e_k
            int d = deg[k] + static_cast<int>(rng() % 2);
            Poly c = random_monomial(R, rng, d - deg[k]);
            for (auto& r : P.relations) r.push_back(R.zero());
            Vec rel = zero_vec(R.ring(), g + 1);
            rel[g] = R.one();
            rel[k] = -c;
            P.relations.push_back(rel);
            P.ngens = g + 1;
            deg.push_back(d);
        }
        }
    }
    P.degrees = deg;
    P.embedding.reset();
    P.normalize();
    return P;
}

}  // namespace suite
