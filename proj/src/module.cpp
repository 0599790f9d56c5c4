#include "primring/module.hpp"

#include <sstream>
#include <stdexcept>

namespace primring {

std::optional<int> vec_degree(const Vec& v, const std::vector<int>& comp_degrees) {
    std::optional<int> deg;
    for (size_t k = 0; k < v.size(); ++k) {
        if (v[k].is_zero()) continue;
        if (!v[k].is_homogeneous()) return std::nullopt;
        int d = v[k].degree() + comp_degrees[k];
        if (deg && *deg != d) return std::nullopt;
        deg = d;
    }
    return deg;
}

bool vec_is_homogeneous(const Vec& v, const std::vector<int>& comp_degrees) {
    return is_zero(v) || vec_degree(v, comp_degrees).has_value();
}

PresMod PresMod::free(const TruncRing& R, int p, std::vector<int> degrees) {
    PresMod M;
    M.ring = R;
    M.ngens = p;
    if (degrees.empty()) degrees.assign(static_cast<size_t>(p), 0);
    M.degrees = std::move(degrees);
    return M;
}

PresMod PresMod::R_i(const TruncRing& R, int i, int degree) {
    if (i < 1 || i > R.n()) throw std::invalid_argument("R[i] needs 1 <= i <= n");
    return cyclic(R, {R.t().pow(i)}, degree);
}

PresMod PresMod::cyclic(const TruncRing& R, const std::vector<Poly>& ideal, int degree) {
    PresMod M;
    M.ring = R;
    M.ngens = 1;
    for (const auto& g : ideal) M.relations.push_back({g});
    M.degrees = std::vector<int>{degree};
    M.normalize();
    return M;
}

PresMod PresMod::ideal(const TruncRing& R, const std::vector<Poly>& gens) {
    PresMod M;
    M.ring = R;
    M.ngens = static_cast<int>(gens.size());
    std::vector<Vec> g;
    for (const auto& p : gens) g.push_back({R.reduce(p)});
    M.relations = syzygy_basis(R.ring(), 1, g, R.trunc());
    M.embedding = g;
    std::vector<int> deg;
    for (const auto& p : g) {
        if (p[0].is_zero() || !p[0].is_homogeneous()) {
            deg.clear();
            break;
        }
        deg.push_back(p[0].degree());
    }
    if (!deg.empty()) M.degrees = deg;
    M.normalize();
    return M;
}

PresMod PresMod::direct_sum(const PresMod& a, const PresMod& b) {
    if (!(a.ring == b.ring)) throw std::invalid_argument("direct sum over different rings");
    PresMod M;
    M.ring = a.ring;
    M.ngens = a.ngens + b.ngens;
    const RingPtr& r = a.ring.ring();
    for (const auto& rel : a.relations) {
        Vec v = rel;
        v.resize(static_cast<size_t>(M.ngens), Poly(r));
        M.relations.push_back(v);
    }
    for (const auto& rel : b.relations) {
        Vec v(static_cast<size_t>(a.ngens), Poly(r));
        v.insert(v.end(), rel.begin(), rel.end());
        M.relations.push_back(v);
    }
    if (a.degrees && b.degrees) {
        auto d = *a.degrees;
        d.insert(d.end(), b.degrees->begin(), b.degrees->end());
        M.degrees = d;
    }
    M.normalize();
    return M;
}

std::vector<int> PresMod::degree_vector() const {
    return degrees ? *degrees : std::vector<int>(static_cast<size_t>(ngens), 0);
}

void PresMod::normalize() {
    std::vector<Vec> rels;
    for (auto& r : relations) {
        if (static_cast<int>(r.size()) != ngens) throw std::invalid_argument("relation length differs from generator count");
        Vec v = ring.reduce(r);
        if (!is_zero(v)) rels.push_back(std::move(v));
    }
    relations = std::move(rels);
    if (degrees) {
        if (static_cast<int>(degrees->size()) != ngens) throw std::invalid_argument("one degree per generator required");
        for (const auto& r : relations)
            if (!vec_is_homogeneous(r, *degrees)) {
                degrees.reset();
                break;
            }
    }
}

std::string PresMod::to_string() const {
    std::ostringstream os;
    os << "R[" << ring.n() << "]^" << ngens << " / <";
    for (size_t i = 0; i < relations.size(); ++i) os << (i ? ", " : "") << primring::to_string(relations[i]);
    os << ">";
    return os.str();
}

// ---------------------------------------------------------------------------

std::vector<Vec> scale(const Poly& c, const std::vector<Vec>& A) {
    std::vector<Vec> r;
    r.reserve(A.size());
    for (const auto& a : A) r.push_back(c * a);
    return r;
}

std::vector<Vec> concat(std::vector<Vec> a, const std::vector<Vec>& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

bool contained_global(const TruncRing& R, int rank, const std::vector<Vec>& B, const std::vector<Vec>& A) {
    if (B.empty()) return true;
    GroebnerBasis gb = groebner_basis(R.ring(), rank, A, {{}, R.trunc()});
    for (const auto& b : B)
        if (!gb.contains(b)) return false;
    return true;
}

bool contained(const TruncRing& R, int rank, const std::vector<Vec>& B, const std::vector<Vec>& A) {
    if (B.empty()) return true;
    GroebnerBasis gb = groebner_basis(R.ring(), rank, A, {{}, R.trunc()});
    std::vector<Vec> outside;
    for (const auto& b : B)
        if (!gb.contains(b)) outside.push_back(b);
    if (outside.empty()) return true;
    if (R.locality() == Locality::Global) return false;
    // Nakayama: (A + B')/A vanishes locally iff B' lies in A + m B'.
    std::vector<Vec> gens = A;
    for (const auto& m : R.maximal_ideal())
        for (const auto& b : outside) gens.push_back(m * b);
    GroebnerBasis big = groebner_basis(R.ring(), rank, gens, {{}, R.trunc()});
    for (const auto& b : outside)
        if (!big.contains(b)) return false;
    return true;
}

bool same_span(const TruncRing& R, int rank, const std::vector<Vec>& A, const std::vector<Vec>& B) {
    return contained(R, rank, A, B) && contained(R, rank, B, A);
}

std::vector<Vec> intersect(const TruncRing& R, int rank, const std::vector<Vec>& A, const std::vector<Vec>& B) {
    auto ker = kernel_mod(R.ring(), rank, A, B, R.trunc());
    std::vector<Vec> out;
    for (const auto& c : ker) {
        Vec v = zero_vec(R.ring(), rank);
        for (size_t i = 0; i < A.size(); ++i) v = v + c[i] * A[i];
        v = R.reduce(v);
        if (!is_zero(v)) out.push_back(v);
    }
    return out;
}

// ---------------------------------------------------------------------------

bool Subquotient::is_zero() const { return contained(ring, rank, gens, rels); }

HilbertSeries Subquotient::hilbert_series() const {
    if (static_cast<int>(degrees.size()) != rank) throw std::invalid_argument("Hilbert series needs a graded ambient");
    auto gb_b = groebner_basis(ring.ring(), rank, rels, {{}, ring.trunc()});
    auto gb_a = groebner_basis(ring.ring(), rank, concat(gens, rels), {{}, ring.trunc()});
    return primring::hilbert_series(gb_b, degrees, ring.t_var(), ring.n()) -
           primring::hilbert_series(gb_a, degrees, ring.t_var(), ring.n());
}

std::vector<int> Subquotient::gen_degrees() const {
    std::vector<int> out;
    for (const auto& g : gens) {
        auto d = vec_degree(g, degrees);
        out.push_back(d ? *d : 0);
    }
    return out;
}

PresMod Subquotient::presentation() const {
    PresMod P;
    P.ring = ring;
    P.ngens = static_cast<int>(gens.size());
    P.relations = kernel_mod(ring.ring(), rank, gens, rels, ring.trunc());
    if (static_cast<int>(degrees.size()) == rank) {
        bool ok = true;
        for (const auto& g : gens)
            if (!vec_is_homogeneous(g, degrees)) ok = false;
        if (ok) P.degrees = gen_degrees();
    }
    P.normalize();
    return P;
}

std::vector<Vec> Subquotient::coordinates(const std::vector<Vec>& vs) const {
    Lifter lifter(ring.ring(), rank, gens, rels, ring.trunc());
    std::vector<Vec> out;
    for (const auto& v : vs) {
        auto c = lifter.lift(v);
        if (!c) throw std::logic_error("element outside the subquotient");
        out.push_back(ring.reduce(*c));
    }
    return out;
}

// ---------------------------------------------------------------------------

ModMap::ModMap(PresMod source, PresMod target, std::vector<Vec> images)
    : source_(std::move(source)), target_(std::move(target)), images_(std::move(images)) {
    if (static_cast<int>(images_.size()) != source_.ngens) throw std::invalid_argument("one image per source generator");
    for (auto& im : images_) {
        if (static_cast<int>(im.size()) != target_.ngens) throw std::invalid_argument("image length differs from target generators");
        im = target_.ring.reduce(im);
    }
    std::vector<Vec> mapped;
    for (const auto& r : source_.relations) mapped.push_back(apply(r));
    if (!contained_global(target_.ring, target_.ngens, mapped, target_.relations))
        throw std::invalid_argument("map does not respect the source relations");
}

Vec ModMap::apply(const Vec& c) const {
    Vec v = zero_vec(target_.ring.ring(), target_.ngens);
    for (size_t k = 0; k < c.size(); ++k)
        if (!c[k].is_zero()) v = v + c[k] * images_[k];
    return target_.ring.reduce(v);
}

Subquotient ModMap::kernel() const {
    Subquotient s;
    s.ring = source_.ring;
    s.rank = source_.ngens;
    s.gens = kernel_mod(target_.ring.ring(), target_.ngens, images_, target_.relations, target_.ring.trunc());
    s.rels = source_.relations;
    if (source_.degrees) s.degrees = *source_.degrees;
    return s;
}

Subquotient ModMap::cokernel() const {
    Subquotient s;
    s.ring = target_.ring;
    s.rank = target_.ngens;
    for (int j = 0; j < target_.ngens; ++j) s.gens.push_back(unit_vec(target_.ring.ring(), target_.ngens, j));
    s.rels = concat(images_, target_.relations);
    if (target_.degrees) s.degrees = *target_.degrees;
    return s;
}

Subquotient ModMap::image() const {
    Subquotient s;
    s.ring = target_.ring;
    s.rank = target_.ngens;
    s.gens = images_;
    s.rels = target_.relations;
    if (target_.degrees) s.degrees = *target_.degrees;
    return s;
}

ModMap compose(const ModMap& g, const ModMap& f) {
    std::vector<Vec> im;
    for (const auto& v : f.images()) im.push_back(g.apply(v));
    return ModMap(f.source(), g.target(), im);
}

}  // namespace primring
