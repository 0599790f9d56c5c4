#pragma once

#include "primring/fpmod.hpp"

#include <string>
#include <vector>

namespace primring {

/// O_2 = Q[x, y, t]/(t^2) read at the origin; all weights 1.
TruncRing local_double_ring(int jet_order = 6);

/// Class c_x (x t) + c_y (y t) in m I / m^2 I.
struct TauClass {
    Rational cx, cy;
    friend bool operator==(const TauClass&, const TauClass&) = default;
};

/// Coordinates on the basis (d/dx ⊗ t, d/dy ⊗ t).
struct LambdaCoord {
    Rational dx, dy;
    friend bool operator==(const LambdaCoord&, const LambdaCoord&) = default;
};

/// The ideal (x + a t, y + b t), a and b polynomials in x, y.
class PointIdeal {
public:
    /// Checks that a, b do not involve t and that the ideal contains
    /// (x^2, xy, y^2, xt, yt).
    PointIdeal(TruncRing ring, Poly a, Poly b);
    static PointIdeal parse(const TruncRing& ring, std::string_view a, std::string_view b);

    const TruncRing& ring() const { return ring_; }
    const Poly& a() const { return a_; }
    const Poly& b() const { return b_; }
    std::vector<Poly> generators() const;

private:
    TruncRing ring_;
    Poly a_, b_;
};

/// Class of an element of m I modulo m^2 I, by normal form.
TauClass tau_class(const TruncRing& R, const Poly& w);

/// (b(0), -a(0)), cross-checked by reducing -y a t + x b t.
TauClass tau(const PointIdeal& J);

/// Equality by ideal membership at the origin, by τ, and by constant terms;
/// throws std::logic_error if the three disagree.
bool ideals_equal(const PointIdeal& J1, const PointIdeal& J2);

/// (-a(0), -b(0)).
LambdaCoord lambda_coord(const PointIdeal& J);
/// Inverse: constant a, b.
PointIdeal ideal_from_lambda(const TruncRing& R, const LambdaCoord& l);

/// x' = α(x+u) + β(y+v), y' = γ(x+u) + δ(y+v), with u, v in I.
struct Chart {
    Poly alpha, beta, gamma, delta, u, v;
    static Chart identity(const TruncRing& R);
    static Chart swap(const TruncRing& R);
};

/// λ in the chart (x', y'), in the basis (d/dx ⊗ t, d/dy ⊗ t).
struct ChartChange {
    LambdaCoord direct;   // recomputed from the ideal's generators in the new chart
    LambdaCoord formula;  // λ - Δ^{-1} ⊗ (-y u + x v)
};
ChartChange change_chart(const PointIdeal& J, const Chart& chart);

/// λ(J1) - λ(J2), asserted equal in every supplied chart.
LambdaCoord affine_difference(const PointIdeal& J1, const PointIdeal& J2, const std::vector<Chart>& charts);

struct CheckReport {
    bool ok = true;
    std::vector<std::string> failures;
    std::vector<std::string> notes;
    void fail(std::string s) {
        ok = false;
        failures.push_back(std::move(s));
    }
};

/// Matrices of the resolution of m by columns: phi0 is 1x2, phi1 2x3, phi2 3x3.
struct ResolutionMatrices {
    std::vector<Vec> phi0, phi1, phi2;
    static ResolutionMatrices standard(const TruncRing& R);
};
CheckReport verify_maximal_ideal_resolution(const TruncRing& R, int degree_bound);
CheckReport verify_maximal_ideal_resolution(const TruncRing& R, int degree_bound, const ResolutionMatrices& m);

/// Ψ1 : 2(m I) -> 3(m I) and Ψ2 : 3(m I) -> 3(m I) by columns.
struct ExtComplex {
    std::vector<Vec> psi1, psi2;
    static ExtComplex standard(const TruncRing& R);
};
CheckReport ext_complex_check(const TruncRing& R, int degree_bound);
CheckReport ext_complex_check(const TruncRing& R, int degree_bound, const ExtComplex& c);
/// Expected dimension of the degree-d piece of ((m/m^2) ⊗ I) ⊕ O_1, with
/// elements graded by their degree inside (m I)^3.
long long ext_expected_dimension(int d);

/// τ̄ = t (x p1 + y p2) split into (p1, p2).
std::pair<Poly, Poly> split_tau(const TruncRing& R, const Poly& tau_bar);

/// Extension 0 -> m ⊗ I -> M -> m -> 0 of class (τ̄, ρ), m the maximal ideal
/// of O_1 = O_2/(t). Generators e1 = x t, e2 = y t, then f1, f2 over x, y.
Extension extension_module(const TruncRing& R, const Poly& tau_bar, const Poly& rho);

/// ρ(0) != 0, cross-checked with is_balanced on the module.
bool is_balanced_extension(const TruncRing& R, const Poly& tau_bar, const Poly& rho);

/// The ideal (x + A, y + B) with -y A + x B = τ̄.
PointIdeal recover_ideal(const TruncRing& R, const Poly& tau_bar);

/// For ρ = -1: M -> O_2, e_k -> x t, y t, f1 -> x + A, f2 -> y + B.
ModMap ideal_embedding(const Extension& ext, const PointIdeal& J);

/// dim_Q of R^rank / (span(rels) + m^k R^rank), m = (x, y, t).
long long local_length(const TruncRing& R, int rank, const std::vector<Vec>& rels, int k);

}  // namespace primring
