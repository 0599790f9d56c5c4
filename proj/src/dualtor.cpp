#include "primring/dualtor.hpp"

#include "primring/linalg.hpp"

#include <stdexcept>

namespace primring {

HomModule dual(const PresMod& M) {
    std::vector<int> deg = {0};
    return hom_module(M, PresMod::free(M.ring, 1, deg));
}

NaturalMap natural_map(const PresMod& M) {
    NaturalMap out;
    out.dual = dual(M);
    out.bidual = dual(out.dual.pres);
    // ev_j : φ_l -> φ_l(e_j), a point of the bidual's ambient.
    const auto& phis = out.dual.space.gens;
    std::vector<Vec> evs;
    for (int j = 0; j < M.ngens; ++j) {
        Vec v;
        for (const auto& phi : phis) v.push_back(phi[static_cast<size_t>(j)]);
        evs.push_back(v);
    }
    auto coords = out.bidual.space.coordinates(evs);
    out.map = ModMap(M, out.bidual.pres, coords);
    return out;
}

ModMap dual_embedding(const PresMod& M) {
    HomModule D = dual(M);
    const auto& phis = D.space.gens;
    PresMod F = PresMod::free(M.ring, static_cast<int>(phis.size()));
    std::vector<Vec> images;
    for (int j = 0; j < M.ngens; ++j) {
        Vec v;
        for (const auto& phi : phis) v.push_back(phi[static_cast<size_t>(j)]);
        images.push_back(v);
    }
    return ModMap(M, F, images);
}

std::vector<Vec> torsion_by_saturation(const PresMod& M) {
    const TruncRing& R = M.ring;
    const int n = R.n(), g = M.ngens, tv = R.t_var();
    const RingPtr& r = R.ring();
    // Coordinates over the base ring: index k*g + j stands for t^k e_j.
    auto expand = [&](const Vec& v) {
        Vec out(static_cast<size_t>(n * g), Poly(r));
        for (int j = 0; j < g; ++j)
            for (int k = 0; k < n; ++k) out[static_cast<size_t>(k * g + j)] = v[static_cast<size_t>(j)].coefficient_of(tv, k);
        return out;
    };
    PolyMatrix rows;
    for (const auto& rel : M.relations) {
        Poly tk = R.one();
        for (int k = 0; k < n; ++k, tk *= R.t()) {
            Vec e = expand(R.reduce(tk * rel));
            if (!is_zero(e)) rows.push_back(e);
        }
    }
    std::vector<Vec> base;
    if (rows.empty()) return {};
    auto W = generic_kernel(rows, r, n * g);
    if (W.empty()) {
        for (int c = 0; c < n * g; ++c) base.push_back(unit_vec(r, n * g, c));
    } else {
        std::vector<Vec> cols;
        for (int c = 0; c < n * g; ++c) {
            Vec col;
            for (const auto& w : W) col.push_back(w[static_cast<size_t>(c)]);
            cols.push_back(col);
        }
        base = kernel_mod(r, static_cast<int>(W.size()), cols, {}, R.with_n(1).trunc());
    }
    std::vector<Vec> out;
    for (const auto& b : base) {
        Vec v = zero_vec(r, g);
        for (int j = 0; j < g; ++j)
            for (int k = 0; k < n; ++k) v[static_cast<size_t>(j)] += b[static_cast<size_t>(k * g + j)] * R.t().pow(k);
        out.push_back(R.reduce(v));
    }
    return out;
}

TorsionReport torsion(const PresMod& M) {
    const TruncRing& R = M.ring;
    const RingPtr& r = R.ring();
    TorsionReport rep;
    ModMap phi = dual_embedding(M);
    Subquotient K = phi.kernel();
    auto gb = groebner_basis(r, M.ngens, M.relations, {{}, R.trunc()});
    for (const auto& k : K.gens)
        if (!gb.contains(k)) rep.generators.push_back(k);

    // Annihilator oracle.
    for (const auto& k : rep.generators) {
        auto ann = kernel_mod(r, M.ngens, {k}, M.relations, R.trunc());
        std::optional<Poly> s;
        for (const auto& a : ann)
            if (!substitute_zero(a[0], R.t_var()).is_zero()) {
                s = a[0];
                break;
            }
        if (!s) throw std::logic_error("torsion generator without a non-zero-divisor annihilator");
        Vec check = R.reduce((*s) * k);
        if (!gb.contains(check)) throw std::logic_error("annihilator witness fails");
        rep.witnesses.push_back({k, *s});
    }
    // Saturation oracle: same submodule.
    auto sat = torsion_by_saturation(M);
    if (!same_span(R.with_locality(Locality::Global), M.ngens, concat(rep.generators, M.relations),
                   concat(sat, M.relations)))
        throw std::logic_error("torsion computations disagree");
    return rep;
}

PresMod torsion_free_quotient(const PresMod& M, const TorsionReport& T) {
    PresMod Q = M;
    Q.relations = concat(M.relations, T.generators);
    Q.embedding.reset();
    Q.normalize();
    return Q;
}

}  // namespace primring
