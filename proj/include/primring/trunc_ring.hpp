#pragma once

#include "primring/groebner.hpp"

#include <string>
#include <vector>

namespace primring {

/// How containment and zero tests are read: over the polynomial model, or in
/// the local ring at the origin (x = t = 0).
enum class Locality { Global, Origin };

/// R[n] = Q[x_1..x_d][t]/(t^n). Elements live in Q[x_1..x_d, t] with t the
/// last variable; t^n is adjoined to every generating set.
class TruncRing {
public:
    TruncRing() = default;
    TruncRing(std::vector<std::string> base_names, int n, std::vector<int> base_weights = {}, int t_weight = 1,
              MonomialOrder order = {}, Locality locality = Locality::Global, std::string t_name = "t");

    const RingPtr& ring() const { return ring_; }
    int d() const { return ring_->nvars() - 1; }
    int n() const { return n_; }
    int t_var() const { return ring_->nvars() - 1; }
    int t_weight() const { return ring_->weights().back(); }
    std::vector<int> base_weights() const;
    std::vector<std::string> base_names() const;
    Truncation trunc() const { return {t_var(), n_}; }
    Locality locality() const { return locality_; }
    int jet_order() const { return jet_order_; }

    /// Same variables and grading with another multiplicity (n = 1 gives R).
    TruncRing with_n(int n) const;
    TruncRing with_locality(Locality loc) const;
    TruncRing with_jet_order(int N) const;

    Poly zero() const { return Poly(ring_); }
    Poly one() const { return Poly::constant(ring_, 1); }
    Poly t() const { return Poly::variable(ring_, t_var()); }
    Poly var(int i) const { return Poly::variable(ring_, i); }
    /// Parses and drops terms with t^k, k >= n.
    Poly parse(std::string_view text) const;
    Poly reduce(const Poly& p) const;
    Vec reduce(const Vec& v) const;

    /// Generators of the maximal ideal at the origin: x_1..x_d, t.
    std::vector<Poly> maximal_ideal() const;

    friend bool operator==(const TruncRing& a, const TruncRing& b) {
        return a.n_ == b.n_ && *a.ring_ == *b.ring_ && a.locality_ == b.locality_;
    }

private:
    RingPtr ring_;
    int n_ = 1;
    Locality locality_ = Locality::Global;
    int jet_order_ = 6;
};

/// Drops monomials of total degree >= N (x and t counted with degree 1).
Poly truncate_jet(const Poly& p, int N);

/// u = u_0 + u_1 t + ... + u_{n-1} t^{n-1} with u_i in R.
class TruncElem {
public:
    TruncElem() = default;
    TruncElem(TruncRing ring, const Poly& p);
    static TruncElem from_coeffs(TruncRing ring, std::vector<Poly> coeffs);

    const TruncRing& ring() const { return ring_; }
    /// Coefficient u_i as a t-free polynomial.
    const Poly& coeff(int i) const { return coeffs_[static_cast<size_t>(i)]; }
    const std::vector<Poly>& coeffs() const { return coeffs_; }
    Poly to_poly() const;
    bool is_zero() const;

    friend TruncElem operator+(const TruncElem& a, const TruncElem& b);
    friend TruncElem operator-(const TruncElem& a, const TruncElem& b);
    friend TruncElem operator*(const TruncElem& a, const TruncElem& b);
    friend bool operator==(const TruncElem& a, const TruncElem& b) { return a.to_poly() == b.to_poly(); }

    /// u_0 = 0 (zero itself counts as a zero divisor).
    bool is_zero_divisor() const;
    /// Membership in S_n = {u : u_0 != 0}.
    bool in_S() const { return !coeff(0).is_zero(); }
    /// Invertible in the local ring at the origin: u(0) != 0.
    bool is_local_unit() const { return !coeff(0).constant_term().is_zero(); }
    /// Inverse modulo m^N, m = (x, t); requires is_local_unit().
    TruncElem jet_inverse(int N) const;

    std::string to_string() const { return to_poly().to_string(); }

private:
    TruncRing ring_;
    std::vector<Poly> coeffs_;
};

/// Truncated automorphism: x_k -> x_k + f_{k,1} t + ..., t -> u_1 t + ...
class AutMap {
public:
    AutMap() = default;
    /// Validates: images reduce to the identity mod t, t-image has zero
    /// t^0 part and u_1(0) != 0.
    AutMap(TruncRing ring, std::vector<Poly> var_images, Poly t_image);

    static AutMap identity(const TruncRing& ring);
    /// n = 2 data: x_k -> x_k + D_k t, t -> alpha t.
    static AutMap from_derivation(const TruncRing& ring, const std::vector<Poly>& D, const Poly& alpha);

    const TruncRing& ring() const { return ring_; }
    const std::vector<Poly>& var_images() const { return images_; }
    const Poly& t_image() const { return t_image_; }

    /// Pullback of a function, truncated at t^n.
    Poly apply(const Poly& f) const;
    /// D_k = coefficient of t in the image of x_k.
    std::vector<Poly> derivation() const;
    /// u_1 = coefficient of t in the image of t.
    Poly multiplier() const;

    /// Inverse modulo m^N.
    AutMap jet_inverse(int N) const;

    friend bool operator==(const AutMap& a, const AutMap& b) {
        return a.images_ == b.images_ && a.t_image_ == b.t_image_;
    }

private:
    TruncRing ring_;
    std::vector<Poly> images_;
    Poly t_image_;
};

/// (phi o psi)^*(f) = phi^*(psi^*(f)), truncated at t^n.
AutMap compose(const AutMap& phi, const AutMap& psi);

/// compose(phi_ij, phi_jk) == phi_ik.
bool verify_cocycle(const AutMap& phi_ij, const AutMap& phi_jk, const AutMap& phi_ik);

}  // namespace primring
