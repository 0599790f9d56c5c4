#include "primring/hilbert.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace primring {

HilbPoly::HilbPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

void HilbPoly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

HilbPoly HilbPoly::binomial(int a, int k) {
    // Π_{i<k} (d + a - i) / k!
    std::vector<Rational> p{Rational(1)};
    Rational fact(1);
    for (int i = 0; i < k; ++i) {
        std::vector<Rational> q(p.size() + 1, Rational(0));
        Rational shift(a - i);
        for (size_t j = 0; j < p.size(); ++j) {
            q[j + 1] += p[j];
            q[j] += p[j] * shift;
        }
        p = std::move(q);
        fact *= Rational(i + 1);
    }
    for (auto& c : p) c /= fact;
    return HilbPoly(p);
}

Rational HilbPoly::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(c_.size())) return Rational(0);
    return c_[static_cast<size_t>(k)];
}

Rational HilbPoly::operator()(long long d) const {
    Rational out(0), x(static_cast<long>(d));
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) out = out * x + *it;
    return out;
}

HilbPoly operator+(const HilbPoly& a, const HilbPoly& b) {
    std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()), Rational(0));
    for (size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
    return HilbPoly(c);
}

HilbPoly operator-(const HilbPoly& a, const HilbPoly& b) { return a + Rational(-1) * b; }

HilbPoly operator*(const Rational& s, const HilbPoly& p) {
    std::vector<Rational> c = p.c_;
    for (auto& x : c) x *= s;
    return HilbPoly(c);
}

std::string HilbPoly::to_string() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        Rational c = c_[static_cast<size_t>(k)];
        if (c.is_zero()) continue;
        bool neg = c < Rational(0);
        if (neg) c = -c;
        if (neg) os << "-";
        else if (!first) os << "+";
        if (k == 0) os << c.to_string();
        else {
            if (!(c == Rational(1))) os << c.to_string() << "*";
            os << "d";
            if (k > 1) os << "^" << k;
        }
        first = false;
    }
    return os.str();
}

// ---------------------------------------------------------------------------

TruncRing projective_model(int m, int n, int w) {
    std::vector<std::string> names;
    for (int i = 0; i <= m; ++i) names.push_back("x" + std::to_string(i));
    return TruncRing(names, n, std::vector<int>(static_cast<size_t>(m + 1), 1), w);
}

HilbPoly hilbert_polynomial(const HilbertSeries& hs) {
    for (int w : hs.denominator())
        if (w != 1) throw std::invalid_argument("Hilbert polynomial needs unit weights on the base");
    int k = static_cast<int>(hs.denominator().size());
    HilbPoly out;
    if (k == 0) return out;
    // z^j / (1-z)^k contributes C(d - j + k - 1, k - 1).
    for (const auto& [j, c] : hs.numerator())
        out = out + Rational(static_cast<long>(c)) * HilbPoly::binomial(k - 1 - j, k - 1);
    return out;
}

int regularity_bound(const HilbertSeries& hs) {
    int r = 0;
    for (const auto& [j, c] : hs.numerator()) r = std::max(r, j);
    return r;
}

namespace {

void check_samples(const HilbPoly& P, const HilbertSeries& hs, const std::function<long long(int)>& dense) {
    int r = regularity_bound(hs);
    for (int d = r + 1; d <= r + 3; ++d) {
        long long got = dense(d);
        if (!(P(d) == Rational(static_cast<long>(got))) || hs.coefficient(d) != got)
            throw std::logic_error("Hilbert polynomial disagrees with dense count in degree " + std::to_string(d));
    }
}

}  // namespace

HilbPoly hilbert_polynomial(const PresMod& E) {
    if (!E.is_graded()) throw std::invalid_argument("Hilbert polynomial needs a graded module");
    const TruncRing& R = E.ring;
    auto degs = *E.degrees;
    auto gb = groebner_basis(R.ring(), E.ngens, E.relations, {{}, R.trunc()});
    HilbertSeries hs = hilbert_series(gb, degs, R.t_var(), R.n());
    HilbPoly P = hilbert_polynomial(hs);
    check_samples(P, hs, [&](int d) {
        return hilbert_function_dense(R.ring(), E.ngens, E.relations, degs, R.t_var(), R.n(), d);
    });
    return P;
}

HilbPoly hilbert_polynomial(const Subquotient& S) {
    HilbertSeries hs = S.hilbert_series();
    HilbPoly P = hilbert_polynomial(hs);
    const TruncRing& R = S.ring;
    check_samples(P, hs, [&](int d) {
        return hilbert_function_dense(R.ring(), S.rank, S.rels, S.degrees, R.t_var(), R.n(), d) -
               hilbert_function_dense(R.ring(), S.rank, concat(S.gens, S.rels), S.degrees, R.t_var(), R.n(), d);
    });
    return P;
}

HilbPoly filtration_polynomial(const FiltrationChain& F) {
    HilbPoly out;
    for (size_t k = 0; k + 1 < F.size(); ++k) {
        Subquotient q = F.quotient(k);
        out = out + (verify_enabled() ? hilbert_polynomial(q) : hilbert_polynomial(q.hilbert_series()));
    }
    return out;
}

namespace {

void check_t_quotients(const FiltrationChain& F) {
    const PresMod& M = F.ambient;
    if (!F.is_valid()) throw std::invalid_argument("not a filtration of the module");
    for (size_t k = 0; k + 1 < F.size(); ++k) {
        auto tm = scale(M.ring.t(), F.members[k]);
        for (auto& v : tm) v = M.ring.reduce(v);
        if (!contained_global(M.ring, M.ngens, tm, concat(F.members[k + 1], M.relations)))
            throw std::invalid_argument("filtration quotient " + std::to_string(k) + " is not killed by t");
    }
}

ReducedHilbert reduced_impl(const PresMod& E, const FiltrationChain* user) {
    if (!E.is_graded()) throw std::invalid_argument("reduced Hilbert polynomial needs a graded module");
    ReducedHilbert out;
    auto first = first_canonical_filtration(E), second = second_canonical_filtration(E);
    out.via_first = filtration_polynomial(first);
    out.via_second = filtration_polynomial(second);
    auto ref = refine_filtrations(first, second);
    out.via_refined = filtration_polynomial(ref.D);
    if (!(out.via_refined == filtration_polynomial(ref.F))) throw std::logic_error("refinements give different P_red");
    out.value = out.via_first;
    if (user) {
        check_t_quotients(*user);
        out.via_user = filtration_polynomial(*user);
        out.user_supplied = true;
        if (!(out.via_user == out.value)) throw std::logic_error("user filtration gives a different P_red");
    }
    if (!(out.via_second == out.value) || !(out.via_refined == out.value))
        throw std::logic_error("P_red depends on the filtration");
    if (E.ngens > 0 && !(hilbert_polynomial(E) == out.value))
        throw std::logic_error("P_red differs from the Hilbert polynomial of the associated graded");
    return out;
}

}  // namespace

ReducedHilbert reduced_hilbert_polynomial(const PresMod& E) { return reduced_impl(E, nullptr); }

ReducedHilbert reduced_hilbert_polynomial(const PresMod& E, const FiltrationChain& user) {
    return reduced_impl(E, &user);
}

RankDegree rank_degree_reduced(const PresMod& E) {
    RankDegree out;
    out.poly = reduced_hilbert_polynomial(E).value;
    int m = E.ring.d() - 1;
    if (m < 0) throw std::invalid_argument("need at least one base variable");
    Rational fm(1);
    for (int i = 2; i <= m; ++i) fm *= Rational(i);
    out.rank = out.poly.coeff(m) * fm;
    if (m >= 1) {
        HilbPoly rest = out.poly - out.rank * HilbPoly::binomial(m, m);
        out.degree = rest.coeff(m - 1) * (fm / Rational(m));
    } else {
        out.degree = Rational(0);
    }
    return out;
}

}  // namespace primring
