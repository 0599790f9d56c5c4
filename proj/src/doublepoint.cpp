#include "primring/doublepoint.hpp"

#include "primring/linalg.hpp"

#include <map>
#include <stdexcept>

namespace primring {

namespace {

constexpr int X = 0, Y = 1;

void check_double(const TruncRing& R) {
    if (R.d() != 2 || R.n() != 2) throw std::invalid_argument("expected Q[x, y, t]/(t^2)");
}

bool t_free(const TruncRing& R, const Poly& p) { return p.degree_in(R.t_var()) == 0; }

Poly X_(const TruncRing& R) { return R.var(X); }
Poly Y_(const TruncRing& R) { return R.var(Y); }

// Monomials of weighted degree d with t-exponent below n.
void enumerate(const TruncRing& R, int var, int left, Monomial& m, std::vector<Monomial>& out) {
    const auto& w = R.ring()->weights();
    int nv = R.ring()->nvars();
    if (var == nv) {
        if (left == 0) out.push_back(m);
        return;
    }
    int wt = w[static_cast<size_t>(var)];
    int cap = var == R.t_var() ? R.n() - 1 : (wt > 0 ? left / wt : 0);
    for (int e = 0; e <= cap && e * wt <= left; ++e) {
        m[var] = static_cast<int16_t>(e);
        enumerate(R, var + 1, left - e * wt, m, out);
    }
    m[var] = 0;
}

std::vector<Monomial> monomials_of_degree(const TruncRing& R, int d) {
    std::vector<Monomial> out;
    if (d < 0) return out;
    Monomial m;
    enumerate(R, 0, d, m, out);
    return out;
}

// Rank of a list of module elements over Q.
int dense_rank(const std::vector<Vec>& elems) {
    std::map<std::pair<int, std::array<int16_t, kMaxVars>>, int> index;
    Echelon ech;
    for (const auto& v : elems) {
        SparseRow row;
        for (size_t c = 0; c < v.size(); ++c)
            for (const auto& term : v[c].terms()) {
                auto key = std::make_pair(static_cast<int>(c), term.mono.exp);
                auto it = index.try_emplace(key, static_cast<int>(index.size())).first;
                row[it->second] = term.coeff;
            }
        ech.insert(std::move(row));
    }
    return ech.rank();
}

// Q-basis of the degree-d part of a free module with component degrees.
std::vector<Vec> free_basis(const TruncRing& R, const std::vector<int>& degs, int d) {
    std::vector<Vec> out;
    int rank = static_cast<int>(degs.size());
    for (int j = 0; j < rank; ++j)
        for (const auto& m : monomials_of_degree(R, d - degs[static_cast<size_t>(j)])) {
            Vec v = zero_vec(R.ring(), rank);
            v[static_cast<size_t>(j)] = Poly::monomial(R.ring(), m);
            out.push_back(v);
        }
    return out;
}

// Q-basis of the degree-d part of (m I)^k.
std::vector<Vec> mI_basis(const TruncRing& R, int k, int d) {
    std::vector<Vec> out;
    for (int j = 0; j < k; ++j)
        for (const auto& m : monomials_of_degree(R, d)) {
            if (m[R.t_var()] != 1 || m[X] + m[Y] == 0) continue;
            Vec v = zero_vec(R.ring(), k);
            v[static_cast<size_t>(j)] = Poly::monomial(R.ring(), m);
            out.push_back(v);
        }
    return out;
}

Vec apply_columns(const TruncRing& R, const std::vector<Vec>& cols, const Vec& v) {
    Vec out = zero_vec(R.ring(), static_cast<int>(cols.front().size()));
    for (size_t j = 0; j < cols.size(); ++j) out = out + v[j] * cols[j];
    return R.reduce(out);
}

std::vector<Vec> apply_all(const TruncRing& R, const std::vector<Vec>& cols, const std::vector<Vec>& vs) {
    std::vector<Vec> out;
    for (const auto& v : vs) out.push_back(apply_columns(R, cols, v));
    return out;
}

std::vector<int> column_degrees(const std::vector<Vec>& cols, const std::vector<int>& target, bool& ok) {
    std::vector<int> out;
    for (const auto& c : cols) {
        auto d = vec_degree(c, target);
        if (!d) {
            ok = false;
            out.push_back(0);
        } else {
            out.push_back(*d);
        }
    }
    return out;
}

Rational at_origin(const Poly& p) { return p.constant_term(); }

}  // namespace

TruncRing local_double_ring(int jet_order) {
    return TruncRing({"x", "y"}, 2, {1, 1}, 1, MonomialOrder::grevlex(), Locality::Origin).with_jet_order(jet_order);
}

// --- point ideals -------------------------------------------------------------

PointIdeal::PointIdeal(TruncRing ring, Poly a, Poly b) : ring_(std::move(ring)), a_(std::move(a)), b_(std::move(b)) {
    check_double(ring_);
    if (!t_free(ring_, a_) || !t_free(ring_, b_)) throw std::invalid_argument("a and b must not involve t");
    const Poly x = X_(ring_), y = Y_(ring_), t = ring_.t();
    std::vector<Vec> m2 = {{x * x}, {x * y}, {y * y}, {x * t}, {y * t}};
    std::vector<Vec> J;
    for (const auto& g : generators()) J.push_back({g});
    if (!contained(ring_, 1, m2, J)) throw std::logic_error("point ideal does not contain the square of the maximal ideal");
}

PointIdeal PointIdeal::parse(const TruncRing& ring, std::string_view a, std::string_view b) {
    return PointIdeal(ring, Poly::parse(ring.ring(), a), Poly::parse(ring.ring(), b));
}

std::vector<Poly> PointIdeal::generators() const {
    return {ring_.reduce(X_(ring_) + a_ * ring_.t()), ring_.reduce(Y_(ring_) + b_ * ring_.t())};
}

TauClass tau_class(const TruncRing& R, const Poly& w) {
    check_double(R);
    Poly v = R.reduce(w);
    const int tv = R.t_var();
    if (!v.coefficient_of(tv, 0).is_zero() || !v.coefficient_of(tv, 1).constant_term().is_zero())
        throw std::invalid_argument("element is not in m I: " + v.to_string());
    const Poly x = X_(R), y = Y_(R), t = R.t();
    auto gb = ideal_basis(R.ring(), {x * x * t, x * y * t, y * y * t}, R.trunc());
    Poly r = normal_form(v, gb);
    Monomial mx, my;
    mx[X] = 1;
    mx[tv] = 1;
    my[Y] = 1;
    my[tv] = 1;
    TauClass out{r.coefficient(mx), r.coefficient(my)};
    Poly rest = r - Poly::monomial(R.ring(), mx, out.cx) - Poly::monomial(R.ring(), my, out.cy);
    if (!rest.is_zero()) throw std::logic_error("normal form left " + rest.to_string());
    return out;
}

TauClass tau(const PointIdeal& J) {
    const TruncRing& R = J.ring();
    TauClass closed{at_origin(J.b()), -at_origin(J.a())};
    Poly w = (-Y_(R) * J.a() + X_(R) * J.b()) * R.t();
    if (!(tau_class(R, w) == closed)) throw std::logic_error("τ computations disagree");
    return closed;
}

bool ideals_equal(const PointIdeal& J1, const PointIdeal& J2) {
    const TruncRing& R = J1.ring();
    std::vector<Vec> A, B;
    for (const auto& g : J1.generators()) A.push_back({g});
    for (const auto& g : J2.generators()) B.push_back({g});
    bool by_ideal = same_span(R, 1, A, B);
    bool by_tau = tau(J1) == tau(J2);
    bool by_constants = at_origin(J1.a()) == at_origin(J2.a()) && at_origin(J1.b()) == at_origin(J2.b());
    if (by_ideal != by_tau || by_tau != by_constants) throw std::logic_error("equality tests on point ideals disagree");
    return by_ideal;
}

LambdaCoord lambda_coord(const PointIdeal& J) {
    // Δ^{-1} ⊗ dx -> -d/dy, Δ^{-1} ⊗ dy -> d/dx.
    TauClass c = tau(J);
    return {c.cy, -c.cx};
}

PointIdeal ideal_from_lambda(const TruncRing& R, const LambdaCoord& l) {
    return PointIdeal(R, Poly::constant(R.ring(), -l.dx), Poly::constant(R.ring(), -l.dy));
}

// --- charts -------------------------------------------------------------------

Chart Chart::identity(const TruncRing& R) { return {R.one(), R.zero(), R.zero(), R.one(), R.zero(), R.zero()}; }
Chart Chart::swap(const TruncRing& R) { return {R.zero(), R.one(), R.one(), R.zero(), R.zero(), R.zero()}; }

ChartChange change_chart(const PointIdeal& J, const Chart& c) {
    const TruncRing& R = J.ring();
    const int tv = R.t_var();
    if (!c.u.coefficient_of(tv, 0).is_zero() || !c.v.coefficient_of(tv, 0).is_zero())
        throw std::invalid_argument("chart shifts must lie in I = (t)");
    Rational delta0 = at_origin(c.alpha * c.delta - c.beta * c.gamma);
    if (delta0.is_zero()) throw std::invalid_argument("chart is not invertible at the point");
    const Poly x = X_(R), y = Y_(R), t = R.t();

    Poly A = J.a() * t, B = J.b() * t;
    Poly xp = R.reduce(c.alpha * (x + c.u) + c.beta * (y + c.v));
    Poly yp = R.reduce(c.gamma * (x + c.u) + c.delta * (y + c.v));
    Poly Ap = R.reduce(c.alpha * (A - c.u) + c.beta * (B - c.v));
    Poly Bp = R.reduce(c.gamma * (A - c.u) + c.delta * (B - c.v));
    if (verify_enabled()) {
        std::vector<Vec> old_g, new_g = {{xp + Ap}, {yp + Bp}};
        for (const auto& g : J.generators()) old_g.push_back({g});
        if (!same_span(R, 1, old_g, new_g)) throw std::logic_error("chart generators changed the ideal");
    }
    Poly xp0 = substitute_zero(xp, tv), yp0 = substitute_zero(yp, tv);
    TauClass tp = tau_class(R, -yp0 * Ap + xp0 * Bp);
    ChartChange out;
    Rational inv = delta0.inverse();
    out.direct = {tp.cy * inv, -tp.cx * inv};

    LambdaCoord l = lambda_coord(J);
    TauClass w = tau_class(R, -y * c.u + x * c.v);
    out.formula = {l.dx - w.cy, l.dy + w.cx};
    return out;
}

LambdaCoord affine_difference(const PointIdeal& J1, const PointIdeal& J2, const std::vector<Chart>& charts) {
    LambdaCoord l1 = lambda_coord(J1), l2 = lambda_coord(J2);
    LambdaCoord diff{l1.dx - l2.dx, l1.dy - l2.dy};
    for (const auto& c : charts) {
        auto a = change_chart(J1, c), b = change_chart(J2, c);
        if (!(a.direct == a.formula) || !(b.direct == b.formula)) throw std::logic_error("chart change paths disagree");
        LambdaCoord d{a.direct.dx - b.direct.dx, a.direct.dy - b.direct.dy};
        if (!(d == diff)) throw std::logic_error("difference depends on the chart");
    }
    return diff;
}

// --- resolution of m and the Ext complex ---------------------------------------

ResolutionMatrices ResolutionMatrices::standard(const TruncRing& R) {
    const Poly x = X_(R), y = Y_(R), t = R.t(), z = R.zero();
    ResolutionMatrices m;
    m.phi0 = {{x}, {y}};
    m.phi1 = {{y, -x}, {t, z}, {z, t}};
    m.phi2 = {{t, -y, x}, {z, t, z}, {z, z, t}};
    return m;
}

CheckReport verify_maximal_ideal_resolution(const TruncRing& R, int degree_bound) {
    return verify_maximal_ideal_resolution(R, degree_bound, ResolutionMatrices::standard(R));
}

CheckReport verify_maximal_ideal_resolution(const TruncRing& R, int D, const ResolutionMatrices& m) {
    check_double(R);
    CheckReport rep;
    const RingPtr& r = R.ring();
    TruncRing G = R.with_locality(Locality::Global);

    bool homogeneous = true;
    std::vector<int> d0 = column_degrees(m.phi0, {0}, homogeneous);
    std::vector<int> d1 = column_degrees(m.phi1, d0, homogeneous);
    std::vector<int> d2 = column_degrees(m.phi2, d1, homogeneous);
    if (!homogeneous) rep.fail("matrices are not homogeneous");

    // Composites vanish.
    // phi0 lands in O_1 = O_2/(t).
    auto phi0_of = [&](const std::vector<Vec>& vs) {
        auto out = apply_all(R, m.phi0, vs);
        for (auto& v : out) v = substitute_zero(v, R.t_var());
        return out;
    };
    for (const auto& c : m.phi1)
        if (!is_zero(phi0_of({c}).front())) rep.fail("phi0 phi1 != 0 on " + to_string(c));
    for (const auto& c : m.phi2)
        if (!is_zero(apply_columns(R, m.phi1, c))) rep.fail("phi1 phi2 != 0 on " + to_string(c));

    // Kernels by syzygies.
    auto k0 = kernel_mod(r, 1, m.phi0, {{R.t()}}, R.trunc());
    auto k1 = syzygy_basis(r, 2, m.phi1, R.trunc());
    if (!same_span(G, 2, k0, m.phi1)) rep.fail("ker phi0 != im phi1");
    if (!same_span(G, 3, k1, m.phi2)) rep.fail("ker phi1 != im phi2");
    // K = {(e y + γ, -e x + δ) : γ, δ in I}.
    const Poly x = X_(R), y = Y_(R), t = R.t(), z = R.zero();
    if (!same_span(G, 2, k0, {{y, -x}, {t, z}, {z, t}})) rep.fail("ker phi0 differs from K");

    // Degree by degree over Q.
    if (homogeneous) {
        for (int d = 0; d <= D; ++d) {
            auto b0 = free_basis(R, d0, d), b1 = free_basis(R, d1, d), b2 = free_basis(R, d2, d);
            int ker0 = static_cast<int>(b0.size()) - dense_rank(phi0_of(b0));
            int ker1 = static_cast<int>(b1.size()) - dense_rank(apply_all(R, m.phi1, b1));
            int im1 = dense_rank(apply_all(R, m.phi1, b1)), im2 = dense_rank(apply_all(R, m.phi2, b2));
            if (ker0 != im1) rep.fail("degree " + std::to_string(d) + ": dim ker phi0 = " + std::to_string(ker0) +
                                      ", dim im phi1 = " + std::to_string(im1));
            if (ker1 != im2) rep.fail("degree " + std::to_string(d) + ": dim ker phi1 = " + std::to_string(ker1) +
                                      ", dim im phi2 = " + std::to_string(im2));
            rep.notes.push_back("degree " + std::to_string(d) + ": " + std::to_string(ker0) + " " + std::to_string(ker1));
        }
    }
    return rep;
}

ExtComplex ExtComplex::standard(const TruncRing& R) {
    const Poly x = X_(R), y = Y_(R), z = R.zero();
    ExtComplex c;
    c.psi1 = {{y, z, z}, {-x, z, z}};
    c.psi2 = {{z, z, z}, {y, z, z}, {-x, z, z}};
    return c;
}

long long ext_expected_dimension(int d) {
    // Elements of (m I)^3 carry degree 1 + deg(t) = 2 at the bottom.
    long long out = 0;
    if (d == 2) out += 2;
    if (d >= 2) out += d - 2 + 1;
    return out;
}

CheckReport ext_complex_check(const TruncRing& R, int degree_bound) {
    return ext_complex_check(R, degree_bound, ExtComplex::standard(R));
}

CheckReport ext_complex_check(const TruncRing& R, int D, const ExtComplex& c) {
    check_double(R);
    CheckReport rep;
    const RingPtr& r = R.ring();
    TruncRing G = R.with_locality(Locality::Global);
    const Poly x = X_(R), y = Y_(R), t = R.t(), z = R.zero();

    // Generators of (m I)^k.
    auto gens = [&](int k) {
        std::vector<Vec> out;
        for (int j = 0; j < k; ++j)
            for (const auto& p : {x * t, y * t}) {
                Vec v = zero_vec(r, k);
                v[static_cast<size_t>(j)] = p;
                out.push_back(v);
            }
        return out;
    };
    auto g2 = gens(2), g3 = gens(3);
    auto im1 = apply_all(R, c.psi1, g2);
    for (const auto& v : im1)
        if (!is_zero(apply_columns(R, c.psi2, v))) rep.fail("psi2 psi1 != 0 on " + to_string(v));

    // ker psi2 inside (m I)^3.
    auto coeffs = kernel_mod(r, 3, apply_all(R, c.psi2, g3), {}, R.trunc());
    std::vector<Vec> ker;
    for (const auto& cf : coeffs) {
        Vec v = zero_vec(r, 3);
        for (size_t i = 0; i < g3.size(); ++i) v = v + cf[i] * g3[i];
        v = R.reduce(v);
        if (!is_zero(v)) ker.push_back(v);
    }
    std::vector<Vec> ker_expected = {{x * t, z, z}, {y * t, z, z}, {z, x * t, y * t}};
    std::vector<Vec> im_expected = {{x * x * t, z, z}, {x * y * t, z, z}, {y * y * t, z, z}};
    if (!same_span(G, 3, ker, ker_expected)) rep.fail("ker psi2 != (m I) + W");
    if (!same_span(G, 3, im1, im_expected)) rep.fail("im psi1 != m^2 I");

    for (int d = 0; d <= D; ++d) {
        auto src2 = mI_basis(R, 3, d), src1 = mI_basis(R, 2, d - 1);
        long long kd = static_cast<long long>(src2.size()) - dense_rank(apply_all(R, c.psi2, src2));
        long long id = dense_rank(apply_all(R, c.psi1, src1));
        long long want = ext_expected_dimension(d);
        if (kd - id != want)
            rep.fail("degree " + std::to_string(d) + ": dim Ext = " + std::to_string(kd - id) + ", expected " +
                     std::to_string(want));
        rep.notes.push_back("degree " + std::to_string(d) + ": " + std::to_string(kd - id));
    }
    return rep;
}

// --- extensions -----------------------------------------------------------------

std::pair<Poly, Poly> split_tau(const TruncRing& R, const Poly& tau_bar) {
    check_double(R);
    Poly v = R.reduce(tau_bar);
    const int tv = R.t_var();
    Poly q = v.coefficient_of(tv, 1);
    if (!v.coefficient_of(tv, 0).is_zero() || !q.constant_term().is_zero())
        throw std::invalid_argument("τ̄ must lie in m I: " + v.to_string());
    Poly xs = q.filtered([](const Monomial& m) { return m[X] > 0; });
    Poly ys = q - xs;
    auto p1 = divide_exact(xs, X_(R)), p2 = divide_exact(ys, Y_(R));
    if (!p1 || !p2) throw std::logic_error("split of τ̄ failed");
    return {*p1, *p2};
}

Extension extension_module(const TruncRing& R, const Poly& tau_bar, const Poly& rho) {
    check_double(R);
    if (!t_free(R, rho)) throw std::invalid_argument("ρ must not involve t");
    const Poly x = X_(R), y = Y_(R), t = R.t(), z = R.zero();
    const int tv = R.t_var();
    split_tau(R, tau_bar);

    PresMod N;  // m ⊗ I on x t, y t
    N.ring = R;
    N.ngens = 2;
    N.relations = {{t, z}, {z, t}, {y, -x}};
    N.degrees = std::vector<int>{1 + R.t_weight(), 1 + R.t_weight()};
    N.embedding = std::vector<Vec>{{x * t}, {y * t}};
    N.normalize();

    PresMod M;  // maximal ideal of O_1 on x, y
    M.ring = R;
    M.ngens = 2;
    M.relations = {{y, -x}, {t, z}, {z, t}};
    M.degrees = std::vector<int>{1, 1};
    M.normalize();

    // Θ(e y + γ, -e x + δ) = e_0 τ̄ + ρ (x γ + y δ).
    auto theta = [&](const Vec& k) {
        Poly a0 = substitute_zero(k[0], tv);
        auto e0 = divide_exact(a0, y);
        if (!e0 || !(R.reduce(k[1] + *e0 * x).coefficient_of(tv, 0).is_zero()))
            throw std::logic_error("relation outside K: " + to_string(k));
        Poly gamma = R.reduce(k[0] - *e0 * y), delta = R.reduce(k[1] + *e0 * x);
        Poly w = R.reduce(*e0 * tau_bar + rho * (x * gamma + y * delta));
        auto [p1, p2] = split_tau(R, w);
        return Vec{p1, p2};
    };
    std::vector<Vec> f1;
    for (const auto& rel : M.relations) f1.push_back(theta(rel));
    return build_extension(N, M, f1);
}

bool is_balanced_extension(const TruncRing& R, const Poly& tau_bar, const Poly& rho) {
    bool formula = !rho.constant_term().is_zero();
    Extension e = extension_module(R, tau_bar, rho);
    bool computed = is_balanced(e.P).balanced;
    if (formula != computed) throw std::logic_error("balancedness of the extension disagrees with ρ(0)");
    return formula;
}

PointIdeal recover_ideal(const TruncRing& R, const Poly& tau_bar) {
    auto [p1, p2] = split_tau(R, tau_bar);
    // -y A + x B = t (x p1 + y p2) with A = -p2 t, B = p1 t.
    PointIdeal J(R, -p2, p1);
    TauClass want = tau_class(R, tau_bar);
    if (!(tau(J) == want)) throw std::logic_error("recovered ideal has the wrong τ");
    return J;
}

ModMap ideal_embedding(const Extension& ext, const PointIdeal& J) {
    const TruncRing& R = J.ring();
    const Poly x = X_(R), y = Y_(R), t = R.t();
    auto g = J.generators();
    std::vector<Vec> images = {{x * t}, {y * t}, {g[0]}, {g[1]}};
    return ModMap(ext.P, PresMod::free(R, 1, {0}), images);
}

long long local_length(const TruncRing& R, int rank, const std::vector<Vec>& rels, int k) {
    std::vector<Vec> gens = rels;
    auto monos = monomials_of_degree(R.with_locality(Locality::Global), k);
    // Weighted degree k only equals total degree k when all weights are 1.
    for (int w : R.ring()->weights())
        if (w != 1) throw std::invalid_argument("local_length expects unit weights");
    for (int j = 0; j < rank; ++j)
        for (const auto& m : monos) {
            Vec v = zero_vec(R.ring(), rank);
            v[static_cast<size_t>(j)] = Poly::monomial(R.ring(), m);
            gens.push_back(v);
        }
    auto gb = groebner_basis(R.ring(), rank, gens, {{}, R.trunc()});
    auto leads = gb.leads();
    long long count = 0;
    for (int d = 0; d < k; ++d)
        for (const auto& m : monomials_of_degree(R, d))
            for (int j = 0; j < rank; ++j) {
                bool standard = true;
                for (const auto& l : leads)
                    if (l.comp == j && l.mono.divides(m)) {
                        standard = false;
                        break;
                    }
                if (standard) ++count;
            }
    return count;
}

}  // namespace primring
