#pragma once

#include "primring/fpmod.hpp"

#include <string>
#include <vector>

namespace primring {

/// Polynomial in the degree variable d with rational coefficients.
class HilbPoly {
public:
    HilbPoly() = default;
    /// coeffs[k] multiplies d^k.
    explicit HilbPoly(std::vector<Rational> coeffs);
    /// C(d + a, k).
    static HilbPoly binomial(int a, int k);

    const std::vector<Rational>& coeffs() const { return c_; }
    /// -1 for zero.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    Rational coeff(int k) const;
    Rational operator()(long long d) const;
    bool is_zero() const { return c_.empty(); }

    friend HilbPoly operator+(const HilbPoly& a, const HilbPoly& b);
    friend HilbPoly operator-(const HilbPoly& a, const HilbPoly& b);
    friend HilbPoly operator*(const Rational& s, const HilbPoly& p);
    friend bool operator==(const HilbPoly&, const HilbPoly&) = default;

    /// E.g. "1/2*d^2+3/2*d+1".
    std::string to_string() const;

private:
    void trim();
    std::vector<Rational> c_;
};

/// Graded model over Q[x0..xm][t]/(t^n), deg x_i = 1, deg t = w.
TruncRing projective_model(int m, int n, int w);

/// Polynomial part of a series whose denominator has unit weights.
HilbPoly hilbert_polynomial(const HilbertSeries& hs);
/// Largest numerator exponent: the polynomial is exact from there on.
int regularity_bound(const HilbertSeries& hs);

/// Hilbert polynomial of a graded presented module (over R[n], or R with
/// n = 1). Checked against dense dimension counts at three degrees past the
/// regularity bound.
HilbPoly hilbert_polynomial(const PresMod& E);
HilbPoly hilbert_polynomial(const Subquotient& S);

struct ReducedHilbert {
    HilbPoly value;
    HilbPoly via_first, via_second, via_refined, via_user;
    bool user_supplied = false;
};

/// Σ P(F_i / F_{i+1}) over the first canonical filtration, recomputed over the
/// second one and over their common refinement; throws std::logic_error if
/// they differ.
ReducedHilbert reduced_hilbert_polynomial(const PresMod& E);
/// Also over `user`, whose quotients must be killed by t (std::invalid_argument
/// otherwise).
ReducedHilbert reduced_hilbert_polynomial(const PresMod& E, const FiltrationChain& user);

/// Sum of the Hilbert polynomials of the quotients of a chain.
HilbPoly filtration_polynomial(const FiltrationChain& F);

struct RankDegree {
    Rational rank;    // m! times the coefficient of d^m
    Rational degree;  // (m-1)! times the coefficient of d^{m-1} in P - rank C(d+m, m)
    HilbPoly poly;
};
RankDegree rank_degree_reduced(const PresMod& E);

}  // namespace primring
