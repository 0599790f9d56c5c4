#include "primring/trunc_ring.hpp"

#include <stdexcept>

namespace primring {

TruncRing::TruncRing(std::vector<std::string> base_names, int n, std::vector<int> base_weights, int t_weight,
                     MonomialOrder order, Locality locality, std::string t_name)
    : n_(n), locality_(locality) {
    if (n < 1) throw std::invalid_argument("multiplicity n must be at least 1");
    if (base_weights.empty()) base_weights.assign(base_names.size(), 1);
    if (base_weights.size() != base_names.size())
        throw std::invalid_argument("one weight per base variable required");
    base_names.push_back(std::move(t_name));
    base_weights.push_back(t_weight);
    ring_ = make_ring(std::move(base_names), order, std::move(base_weights));
}

std::vector<int> TruncRing::base_weights() const {
    auto w = ring_->weights();
    w.pop_back();
    return w;
}

std::vector<std::string> TruncRing::base_names() const {
    auto n = ring_->names();
    n.pop_back();
    return n;
}

TruncRing TruncRing::with_n(int n) const {
    if (n < 1) throw std::invalid_argument("multiplicity n must be at least 1");
    TruncRing r = *this;
    r.n_ = n;
    return r;
}

TruncRing TruncRing::with_locality(Locality loc) const {
    TruncRing r = *this;
    r.locality_ = loc;
    return r;
}

TruncRing TruncRing::with_jet_order(int N) const {
    if (N < 1) throw std::invalid_argument("jet order must be positive");
    TruncRing r = *this;
    r.jet_order_ = N;
    return r;
}

Poly TruncRing::reduce(const Poly& p) const {
    int tv = t_var();
    int n = n_;
    return p.filtered([tv, n](const Monomial& m) { return m[tv] < n; });
}

Vec TruncRing::reduce(const Vec& v) const {
    Vec r;
    r.reserve(v.size());
    for (const auto& p : v) r.push_back(reduce(p));
    return r;
}

Poly TruncRing::parse(std::string_view text) const { return reduce(Poly::parse(ring_, text)); }

std::vector<Poly> TruncRing::maximal_ideal() const {
    std::vector<Poly> m;
    for (int i = 0; i < ring_->nvars(); ++i) m.push_back(var(i));
    return m;
}

Poly truncate_jet(const Poly& p, int N) {
    return p.filtered([N](const Monomial& m) { return m.total_degree() < N; });
}

// ---------------------------------------------------------------------------

TruncElem::TruncElem(TruncRing ring, const Poly& p) : ring_(std::move(ring)) {
    int tv = ring_.t_var();
    for (int i = 0; i < ring_.n(); ++i) coeffs_.push_back(p.coefficient_of(tv, i));
}

TruncElem TruncElem::from_coeffs(TruncRing ring, std::vector<Poly> coeffs) {
    if (static_cast<int>(coeffs.size()) != ring.n()) throw std::invalid_argument("need exactly n coefficients");
    for (const auto& c : coeffs)
        if (c.degree_in(ring.t_var()) > 0) throw std::invalid_argument("coefficients must not involve t");
    TruncElem e;
    e.ring_ = std::move(ring);
    e.coeffs_ = std::move(coeffs);
    for (auto& c : e.coeffs_)
        if (!c.ring()) c = Poly(e.ring_.ring());
    return e;
}

Poly TruncElem::to_poly() const {
    Poly p(ring_.ring());
    Poly tp = ring_.one();
    for (const auto& c : coeffs_) {
        p += c * tp;
        tp *= ring_.t();
    }
    return p;
}

bool TruncElem::is_zero() const {
    for (const auto& c : coeffs_)
        if (!c.is_zero()) return false;
    return true;
}

TruncElem operator+(const TruncElem& a, const TruncElem& b) {
    return TruncElem(a.ring_, a.to_poly() + b.to_poly());
}

TruncElem operator-(const TruncElem& a, const TruncElem& b) {
    return TruncElem(a.ring_, a.to_poly() - b.to_poly());
}

TruncElem operator*(const TruncElem& a, const TruncElem& b) {
    return TruncElem(a.ring_, a.ring_.reduce(a.to_poly() * b.to_poly()));
}

bool TruncElem::is_zero_divisor() const { return coeff(0).is_zero(); }

TruncElem TruncElem::jet_inverse(int N) const {
    Rational c = coeff(0).constant_term();
    if (c.is_zero()) throw std::domain_error("not a unit at the origin");
    // u = c (1 - v), v in m; u^{-1} = c^{-1} sum v^k.
    Poly u = to_poly();
    Poly v = ring_.one() - u.scaled(c.inverse());
    Poly sum = ring_.one(), pw = ring_.one();
    for (int k = 1; k < N; ++k) {
        pw = truncate_jet(ring_.reduce(pw * v), N);
        if (pw.is_zero()) break;
        sum += pw;
    }
    return TruncElem(ring_, truncate_jet(sum.scaled(c.inverse()), N));
}

// ---------------------------------------------------------------------------

AutMap::AutMap(TruncRing ring, std::vector<Poly> var_images, Poly t_image)
    : ring_(std::move(ring)), images_(std::move(var_images)), t_image_(std::move(t_image)) {
    if (static_cast<int>(images_.size()) != ring_.d()) throw std::invalid_argument("one image per base variable");
    int tv = ring_.t_var();
    for (auto& im : images_) im = ring_.reduce(im);
    t_image_ = ring_.reduce(t_image_);
    for (int k = 0; k < ring_.d(); ++k)
        if (!(images_[static_cast<size_t>(k)].coefficient_of(tv, 0) == ring_.var(k)))
            throw std::invalid_argument("automorphism must reduce to the identity modulo t");
    if (!t_image_.coefficient_of(tv, 0).is_zero()) throw std::invalid_argument("image of t must be divisible by t");
    if (ring_.n() > 1 && t_image_.coefficient_of(tv, 1).constant_term().is_zero())
        throw std::invalid_argument("coefficient of t in the image of t must be a unit at the origin");
}

AutMap AutMap::identity(const TruncRing& ring) {
    std::vector<Poly> im;
    for (int k = 0; k < ring.d(); ++k) im.push_back(ring.var(k));
    return AutMap(ring, im, ring.t());
}

AutMap AutMap::from_derivation(const TruncRing& ring, const std::vector<Poly>& D, const Poly& alpha) {
    std::vector<Poly> im;
    for (int k = 0; k < ring.d(); ++k) im.push_back(ring.var(k) + D[static_cast<size_t>(k)] * ring.t());
    return AutMap(ring, im, alpha * ring.t());
}

Poly AutMap::apply(const Poly& f) const {
    std::vector<Poly> all = images_;
    all.push_back(t_image_);
    // Truncate as powers are formed: every image of t is divisible by t.
    Poly r = f.substitute(all);
    return ring_.reduce(r);
}

std::vector<Poly> AutMap::derivation() const {
    std::vector<Poly> D;
    for (const auto& im : images_) D.push_back(im.coefficient_of(ring_.t_var(), 1));
    return D;
}

Poly AutMap::multiplier() const { return t_image_.coefficient_of(ring_.t_var(), 1); }

AutMap compose(const AutMap& phi, const AutMap& psi) {
    if (!(phi.ring() == psi.ring())) throw std::invalid_argument("automorphisms over different rings");
    std::vector<Poly> im;
    for (const auto& p : psi.var_images()) im.push_back(phi.apply(p));
    return AutMap(phi.ring(), im, phi.apply(psi.t_image()));
}

bool verify_cocycle(const AutMap& phi_ij, const AutMap& phi_jk, const AutMap& phi_ik) {
    return compose(phi_ij, phi_jk) == phi_ik;
}

AutMap AutMap::jet_inverse(int N) const {
    const TruncRing& R = ring_;
    if (R.n() == 1) return identity(R);
    Rational c = multiplier().constant_term();
    if (c.is_zero()) throw std::domain_error("not invertible at the origin");
    auto jet = [&](const Poly& p) { return truncate_jet(R.reduce(p), N); };
    // Inverse of the linear part: x_k -> x_k - (f_k(0)/c) t, t -> t/c.
    std::vector<Poly> lin;
    for (const auto& D : derivation()) lin.push_back(R.t().scaled(-(D.constant_term() / c)));
    for (int k = 0; k < R.d(); ++k) lin[static_cast<size_t>(k)] += R.var(k);
    lin.push_back(R.t().scaled(c.inverse()));
    auto correct = [&](const Poly& e) { return jet(e.substitute(lin)); };
    // psi <- psi - (phi o psi - id) o L^{-1}; each pass gains one order in m.
    AutMap inv = identity(R);
    for (int it = 0; it <= N + 1; ++it) {
        AutMap comp = compose(*this, inv);
        bool done = true;
        std::vector<Poly> im = inv.images_;
        for (int k = 0; k < R.d(); ++k) {
            Poly e = jet(comp.images_[static_cast<size_t>(k)] - R.var(k));
            if (!e.is_zero()) done = false;
            im[static_cast<size_t>(k)] = jet(im[static_cast<size_t>(k)] - correct(e));
        }
        Poly et = jet(comp.t_image_ - R.t());
        if (!et.is_zero()) done = false;
        if (done) return inv;
        inv = AutMap(R, im, jet(inv.t_image_ - correct(et)));
    }
    throw std::logic_error("jet inverse did not converge");
}

}  // namespace primring
