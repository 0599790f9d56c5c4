#include "doctest.h"

#include "primring/groebner.hpp"
#include "primring/hilbert_series.hpp"
#include "primring/linalg.hpp"

#include <random>

using namespace primring;

namespace {

Poly P(const RingPtr& r, const char* s) { return Poly::parse(r, s); }

std::vector<std::string> strs(const GroebnerBasis& gb) {
    std::vector<std::string> out;
    for (const auto& g : gb.generators()) out.push_back(g[0].to_string());
    return out;
}

bool ideal_contains(const RingPtr& r, const std::vector<Poly>& a, const std::vector<Poly>& b) {
    auto gb = ideal_basis(r, a);
    for (const auto& p : b)
        if (!normal_form(p, gb).is_zero()) return false;
    return true;
}

Poly random_poly(const RingPtr& r, std::mt19937& rng, int terms, int maxdeg) {
    std::uniform_int_distribution<int> c(-3, 3), e(0, maxdeg);
    std::vector<Term> ts;
    for (int i = 0; i < terms; ++i) {
        Monomial m;
        for (int v = 0; v < r->nvars(); ++v) m[v] = static_cast<int16_t>(e(rng));
        ts.push_back({m, Rational(c(rng))});
    }
    return Poly::from_terms(r, ts);
}

}  // namespace

TEST_CASE("groebner basis examples") {
    auto lex = make_ring({"x", "y"}, MonomialOrder::lex());
    auto gb = ideal_basis(lex, {P(lex, "x^2-1"), P(lex, "x*y-1")});
    CHECK(strs(gb) == std::vector<std::string>{"x-y", "y^2-1"});
    CHECK(normal_form(P(lex, "x^2"), gb).to_string() == "1");
    CHECK(gb.satisfies_buchberger_criterion());

    auto r = make_ring({"x", "y"});
    CHECK(strs(ideal_basis(r, {P(r, "x")})) == std::vector<std::string>{"x"});
    CHECK(ideal_basis(r, {Poly(r)}).size() == 0);
    CHECK(normal_form(P(r, "x+y"), ideal_basis(r, {})).to_string() == "x+y");
}

TEST_CASE("syzygies") {
    auto r = make_ring({"x", "y"});
    auto s = syzygy_basis(r, 1, {{P(r, "x")}, {P(r, "y")}});
    REQUIRE(s.size() == 1);
    // (y, -x) up to sign
    CHECK(((s[0][0] == P(r, "y") && s[0][1] == P(r, "-x")) || (s[0][0] == P(r, "-y") && s[0][1] == P(r, "x"))));
    CHECK(syzygy_basis(r, 1, {{P(r, "x")}}).empty());
    auto s2 = syzygy_basis(r, 1, {{P(r, "x^2")}, {P(r, "x*y")}});
    REQUIRE(s2.size() == 1);
    CHECK(is_zero(P(r, "x^2") * Vec{s2[0][0]} + P(r, "x*y") * Vec{s2[0][1]}));
    CHECK(s2[0][0].degree() == 1);
}

TEST_CASE("truncated ring: t^n adjoined") {
    auto r = make_ring({"x", "t"});
    Truncation tr{1, 2};
    auto gb = ideal_basis(r, {P(r, "x*t")}, tr);
    CHECK(normal_form(P(r, "t^2+x*t*x"), gb).is_zero());
    CHECK(!normal_form(P(r, "t"), gb).is_zero());
    // annihilator of t in R[2]/(xt) is (x, t)
    auto k = kernel_mod(r, 1, {{P(r, "t")}}, {{P(r, "x*t")}}, tr);
    std::vector<Poly> ann;
    for (auto& v : k) ann.push_back(v[0]);
    CHECK(ideal_contains(r, ann, {P(r, "x"), P(r, "t")}));
    CHECK(ideal_contains(r, {P(r, "x"), P(r, "t")}, ann));
}

TEST_CASE("substitute t = 0") {
    auto r = make_ring({"x", "y", "t"});
    CHECK(substitute_zero(P(r, "x+y*t"), 2).to_string() == "x");
    CHECK(substitute_zero(P(r, "t^2"), 2).is_zero());
}

TEST_CASE("lifter") {
    auto r = make_ring({"X", "Y", "t"}, {}, {1, 1, 2});
    Truncation tr{2, 2};
    std::vector<Vec> g{{P(r, "X^2")}, {P(r, "Y^2+t")}, {P(r, "X*Y")}};
    Lifter L(r, 1, g, {}, tr);
    auto c = L.lift({P(r, "t*X")});
    REQUIRE(c.has_value());
    Poly s(r);
    for (int i = 0; i < 3; ++i) s += (*c)[static_cast<size_t>(i)] * g[static_cast<size_t>(i)][0];
    CHECK(normal_form(s - P(r, "t*X"), ideal_basis(r, {}, tr)).is_zero());
    CHECK(!L.lift({P(r, "t")}).has_value());
}

TEST_CASE("normal form idempotent and membership symmetric on random ideals") {
    std::mt19937 rng(3);
    auto r = make_ring({"x", "y", "z"});
    for (int it = 0; it < 15; ++it) {
        std::vector<Poly> a{random_poly(r, rng, 3, 2), random_poly(r, rng, 3, 2)};
        auto gb = ideal_basis(r, a);
        CHECK(gb.satisfies_buchberger_criterion());
        Poly f = random_poly(r, rng, 5, 3);
        Poly nf = normal_form(f, gb);
        CHECK(normal_form(nf, gb) == nf);
        // equal ideals: a and a shuffled with combinations
        std::vector<Poly> b{a[1], a[0] + a[1] * random_poly(r, rng, 2, 1)};
        bool ab = ideal_contains(r, a, b), ba = ideal_contains(r, b, a);
        CHECK(ab == ba);
        CHECK(ideal_contains(r, a, a));
    }
}

TEST_CASE("module groebner basis") {
    auto r = make_ring({"x", "y"});
    std::vector<Vec> g{{P(r, "x"), P(r, "y")}, {P(r, "y"), P(r, "x")}};
    GbOptions o;
    auto gb = groebner_basis(r, 2, g, o);
    CHECK(gb.satisfies_buchberger_criterion());
    CHECK(gb.contains({P(r, "x^2-y^2"), Poly(r)}));
    CHECK(!gb.contains({P(r, "x"), Poly(r)}));
}

TEST_CASE("hilbert series examples") {
    auto r = make_ring({"x", "y"});
    auto h0 = hilbert_series(ideal_basis(r, {}), {0});
    CHECK(h0 == HilbertSeries({{0, 1}}, {1, 1}));
    auto h1 = hilbert_series(ideal_basis(r, {P(r, "x")}), {0});
    CHECK(h1 == HilbertSeries({{0, 1}}, {1}));
    auto h2 = hilbert_series(ideal_basis(r, {P(r, "x^2"), P(r, "x*y"), P(r, "y^2")}), {0});
    CHECK(h2 == HilbertSeries({{0, 1}, {1, 2}}, {}));
    CHECK(h2.coefficient(1) == 2);
    CHECK(h2.coefficient(2) == 0);
}

TEST_CASE("hilbert series agrees with dense counts in degrees 0..8") {
    std::mt19937 rng(5);
    auto r = make_ring({"x", "y", "z"});
    std::vector<std::vector<Poly>> ideals{
        {P(r, "x^2-y*z"), P(r, "x*y")},
        {P(r, "x^3"), P(r, "y^2*z-x*z^2"), P(r, "x*y*z")},
        {P(r, "x*y-z^2")},
        {P(r, "x^2"), P(r, "y^2"), P(r, "z^2"), P(r, "x*y*z")},
    };
    for (const auto& gens : ideals) {
        auto gb = ideal_basis(r, gens);
        auto hs = hilbert_series(gb, {0});
        std::vector<Vec> rels;
        for (auto& g : gens) rels.push_back({g});
        for (int d = 0; d <= 8; ++d) CHECK(hs.coefficient(d) == hilbert_function_dense(r, 1, rels, {0}, -1, 0, d));
    }
    // module over Q[x,y,t]/(t^2), t weight 1 and weight 0 and weight -1
    for (int wt : {1, 0, -1}) {
        auto s = make_ring({"x", "y", "t"}, {}, {1, 1, wt});
        Truncation tr{2, 2};
        std::vector<Vec> rels{{P(s, "x*t"), P(s, "y")}, {P(s, "y^2"), Poly(s)}};
        // component degrees chosen to make relations homogeneous: e0 deg 0, e1 deg wt
        std::vector<int> cd{0, wt};
        GbOptions o;
        o.trunc = tr;
        auto gb = groebner_basis(s, 2, rels, o);
        auto hs = hilbert_series(gb, cd, 2, 2);
        for (int d = -2; d <= 8; ++d) CHECK(hs.coefficient(d) == hilbert_function_dense(s, 2, rels, cd, 2, 2, d));
    }
}

TEST_CASE("generic rank and kernel over the fraction field") {
    auto r = make_ring({"x", "y"});
    PolyMatrix m{{P(r, "x"), P(r, "y"), P(r, "x+y")}, {P(r, "x^2"), P(r, "x*y"), P(r, "x^2+x*y")}};
    CHECK(generic_rank(m) == 1);
    auto k = generic_kernel(m, r, 3);
    CHECK(k.size() == 2);
    PolyMatrix id{{P(r, "x"), Poly(r)}, {Poly(r), P(r, "y")}};
    CHECK(generic_rank(id) == 2);
    CHECK(divide_exact(P(r, "x^2-y^2"), P(r, "x-y")).value() == P(r, "x+y"));
    CHECK(!divide_exact(P(r, "x^2+y^2"), P(r, "x-y")).has_value());
}
