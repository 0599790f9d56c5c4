#include "doctest.h"

#include "primring/trunc_ring.hpp"

#include <random>

using namespace primring;

namespace {

Poly rand_base(const TruncRing& R, std::mt19937& rng, int maxdeg) {
    std::uniform_int_distribution<int> c(-3, 3), e(0, maxdeg);
    std::vector<Term> ts;
    for (int k = 0; k < 3; ++k) {
        Monomial m;
        for (int v = 0; v < R.d(); ++v) m[v] = static_cast<int16_t>(e(rng));
        if (m.total_degree() > maxdeg) continue;
        ts.push_back({m, Rational(c(rng))});
    }
    return Poly::from_terms(R.ring(), ts);
}

AutMap rand_aut(const TruncRing& R, std::mt19937& rng) {
    std::vector<Poly> im;
    for (int k = 0; k < R.d(); ++k) {
        Poly p = R.var(k), tp = R.t();
        for (int j = 1; j < R.n(); ++j, tp *= R.t()) p += rand_base(R, rng, 2) * tp;
        im.push_back(p);
    }
    std::uniform_int_distribution<int> unit(1, 4);
    Poly u1 = Poly::constant(R.ring(), unit(rng)) + rand_base(R, rng, 1).filtered([](const Monomial& m) { return !m.is_one(); });
    Poly ti = u1 * R.t(), tp = R.t() * R.t();
    for (int j = 2; j < R.n(); ++j, tp *= R.t()) ti += rand_base(R, rng, 2) * tp;
    return AutMap(R, im, ti);
}

}  // namespace

TEST_CASE("zero divisors in R[n]") {
    TruncRing R({"x"}, 2);
    CHECK(TruncElem(R, R.t()).is_zero_divisor());
    CHECK_FALSE(TruncElem(R, R.parse("1+t")).is_zero_divisor());
    CHECK_FALSE(TruncElem(R, R.parse("x")).is_zero_divisor());
    CHECK(TruncElem(R, R.zero()).is_zero_divisor());
    CHECK(TruncElem(R, R.parse("x+t")).in_S());
    CHECK_FALSE(TruncElem(R, R.parse("x+t")).is_local_unit());
    CHECK(R.parse("t^2+x").to_string() == "x");
}

TEST_CASE("zero divisor xor S_n, and jet inverses of local units") {
    TruncRing R({"x", "y"}, 3);
    std::mt19937 rng(5);
    for (int it = 0; it < 40; ++it) {
        Poly p = rand_base(R, rng, 2) + rand_base(R, rng, 2) * R.t() + rand_base(R, rng, 1) * R.t() * R.t();
        TruncElem u(R, p);
        if (u.is_zero()) continue;
        CHECK(u.is_zero_divisor() != u.in_S());
        if (u.is_local_unit()) {
            int N = 5;
            TruncElem v = u.jet_inverse(N);
            CHECK(truncate_jet((u * v).to_poly(), N) == R.one());
        } else {
            CHECK_THROWS(u.jet_inverse(4));
        }
    }
}

TEST_CASE("automorphism validation") {
    TruncRing R({"x", "y"}, 2);
    CHECK_THROWS(AutMap(R, {R.parse("x+1"), R.var(1)}, R.t()));
    CHECK_THROWS(AutMap(R, {R.var(0), R.var(1)}, R.parse("x*t")));
    CHECK_THROWS(AutMap(R, {R.var(0), R.var(1)}, R.parse("1+t")));
    CHECK_NOTHROW(AutMap(R, {R.parse("x+y*t"), R.var(1)}, R.parse("(2+x)*t")));
}

TEST_CASE("composition examples") {
    TruncRing R({"x", "y"}, 2);
    AutMap id = AutMap::identity(R);
    CHECK(compose(id, id) == id);
    std::mt19937 rng(3);
    AutMap psi = rand_aut(R, rng);
    CHECK(compose(id, psi) == psi);
    CHECK(compose(psi, id) == psi);

    auto one = R.one(), zero = R.zero();
    AutMap ij = AutMap::from_derivation(R, {one, zero}, one);
    AutMap jk = AutMap::from_derivation(R, {zero, one}, one);
    CHECK(verify_cocycle(ij, jk, AutMap::from_derivation(R, {one, one}, one)));
    CHECK_FALSE(verify_cocycle(ij, jk, AutMap::from_derivation(R, {one, zero}, one)));
    CHECK(verify_cocycle(id, id, id));
}

TEST_CASE("n = 2 law D = D1 + alpha1 D2 as a polynomial identity") {
    TruncRing R({"x", "y"}, 2);
    std::mt19937 rng(17);
    for (int it = 0; it < 25; ++it) {
        AutMap phi = rand_aut(R, rng), psi = rand_aut(R, rng);
        AutMap c = compose(phi, psi);
        auto D1 = phi.derivation(), D2 = psi.derivation(), D = c.derivation();
        for (int k = 0; k < 2; ++k) CHECK(D[k] == D1[k] + phi.multiplier() * D2[k]);
        CHECK(c.multiplier() == phi.multiplier() * psi.multiplier());
    }
}

TEST_CASE("composition is associative for n <= 3") {
    for (int n = 1; n <= 3; ++n) {
        TruncRing R({"x", "y"}, n);
        std::mt19937 rng(100 + n);
        for (int it = 0; it < 10; ++it) {
            AutMap a = rand_aut(R, rng), b = rand_aut(R, rng), c = rand_aut(R, rng);
            CHECK(compose(compose(a, b), c) == compose(a, compose(b, c)));
        }
    }
}

TEST_CASE("jet inverse of an automorphism") {
    TruncRing R({"x", "y"}, 3);
    std::mt19937 rng(23);
    int N = 5;
    for (int it = 0; it < 6; ++it) {
        AutMap a = rand_aut(R, rng);
        AutMap inv = a.jet_inverse(N);
        AutMap c = compose(a, inv);
        for (int k = 0; k < 2; ++k) CHECK(truncate_jet(c.var_images()[k], N) == R.var(k));
        CHECK(truncate_jet(c.t_image(), N) == R.t());
    }
}
