#include "doctest.h"

#include "primring/regseq.hpp"

#include <algorithm>
#include <random>

using namespace primring;

namespace {

std::vector<TruncElem> seq(const TruncRing& R, std::vector<std::string> xs) {
    std::vector<TruncElem> out;
    for (const auto& s : xs) out.emplace_back(R, R.parse(s));
    return out;
}

}  // namespace

TEST_CASE("regular sequence examples") {
    TruncRing R({"x", "y"}, 2);
    CHECK(is_regular_sequence(seq(R, {"x", "y"})).verdict);
    auto bad = is_regular_sequence(seq(R, {"x", "x"}));
    CHECK_FALSE(bad.verdict);
    CHECK(bad.failure_index == 2);
    REQUIRE(bad.witness);
    CHECK(*bad.witness == R.one());
    auto r = is_regular_sequence(seq(R, {"x+t", "y+x*t"}));
    CHECK(r.verdict);
    CHECK(r.reductions[0] == R.parse("x"));
    CHECK(r.reductions[1] == R.parse("y"));
    // A zero divisor of R[n] is never the start of a regular sequence.
    auto z = is_regular_sequence(seq(R, {"t*x", "y"}));
    CHECK_FALSE(z.verdict);
    CHECK(z.failure_index == 1);
}

TEST_CASE("shadow membership") {
    TruncRing R({"x", "y"}, 2);
    CHECK(shadow_membership(R.parse("x"), seq(R, {"x"})));
    CHECK_FALSE(shadow_membership(R.one(), seq(R, {"x", "y"})));
    CHECK(shadow_membership(R.parse("x^2"), seq(R, {"x+t", "y"})));
    CHECK_THROWS_AS(shadow_membership(R.one(), seq(R, {"x", "x"})), std::invalid_argument);
    CHECK_THROWS_AS(shadow_membership(R.t(), seq(R, {"x"})), std::invalid_argument);
}

TEST_CASE("ideals of regular sequences are balanced") {
    TruncRing R({"x", "y"}, 2);
    CHECK(is_balanced(balanced_ideal(seq(R, {"x", "y"}))).balanced);
    CHECK(is_balanced(balanced_ideal(seq(R, {"x+t"}))).balanced);
    TruncRing Rl = R.with_locality(Locality::Origin);
    for (auto a : {"0", "1", "x", "y^2", "1+x"})
        for (auto b : {"0", "1", "x*y", "2-y"}) {
            auto s = seq(Rl, {std::string("x+(") + a + ")*t", std::string("y+(") + b + ")*t"});
            CHECK(is_balanced(balanced_ideal(s)).balanced);
        }
    CHECK_THROWS_AS(balanced_ideal(seq(R, {"x", "x"})), std::invalid_argument);
    // (X^2, Y^2, XY): not a regular sequence, yet balanced.
    TruncRing W({"X", "Y"}, 2, {1, 1}, 2);
    auto s = seq(W, {"X^2", "Y^2", "X*Y"});
    CHECK_FALSE(is_regular_sequence(s).verdict);
    std::vector<Poly> g;
    for (const auto& e : s) g.push_back(e.to_poly());
    CHECK(is_balanced(PresMod::ideal(W, g)).balanced);
}

TEST_CASE("verdicts are stable under permutation of homogeneous sequences") {
    TruncRing R({"x", "y", "z"}, 3);
    std::vector<std::vector<std::string>> cases = {
        {"x", "y", "z"}, {"x*y", "x*z"}, {"x^2", "y^2", "z^2"}, {"x*y", "z", "x+t"},
        {"x-y", "x*y", "z^2+t^2"}, {"x*z", "y*z", "x*y"}, {"x", "t*y"}, {"y^2-x*z", "z"},
    };
    std::mt19937 rng(8);
    for (auto c : cases) {
        bool v = is_regular_sequence(seq(R, c)).verdict;
        for (int rep = 0; rep < 3; ++rep) {
            std::shuffle(c.begin(), c.end(), rng);
            CHECK(is_regular_sequence(seq(R, c)).verdict == v);
        }
    }
}
