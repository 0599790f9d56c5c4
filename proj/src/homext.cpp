#include "primring/fpmod.hpp"

#include <stdexcept>

namespace primring {

namespace {

// Vector of length blocks*width with `v` placed in block b.
Vec place(const RingPtr& r, int blocks, int width, int b, const Vec& v) {
    Vec out = zero_vec(r, blocks * width);
    for (int k = 0; k < width; ++k) out[static_cast<size_t>(b * width + k)] = v[static_cast<size_t>(k)];
    return out;
}

// Rel_N repeated in each of `blocks` blocks.
std::vector<Vec> block_relations(const PresMod& N, int blocks) {
    std::vector<Vec> out;
    for (int b = 0; b < blocks; ++b)
        for (const auto& rel : N.relations) out.push_back(place(N.ring.ring(), blocks, N.ngens, b, rel));
    return out;
}

std::vector<Vec> units(const RingPtr& r, int rank) {
    std::vector<Vec> out;
    for (int j = 0; j < rank; ++j) out.push_back(unit_vec(r, rank, j));
    return out;
}

}  // namespace

// --- extensions -------------------------------------------------------------

Extension build_extension(const PresMod& N, const PresMod& M, const std::vector<Vec>& f1) {
    if (!(N.ring == M.ring)) throw std::invalid_argument("modules over different rings");
    if (f1.size() != M.relations.size()) throw std::invalid_argument("f1 needs one image per relation of M");
    const TruncRing& R = M.ring;
    const RingPtr& r = R.ring();
    // f1 must kill the second syzygies: sum s_k f1[k] in Rel_N.
    auto syz = syzygy_basis(r, M.ngens, M.relations, R.trunc());
    std::vector<Vec> composed;
    for (const auto& s : syz) {
        Vec v = zero_vec(r, N.ngens);
        for (size_t k = 0; k < s.size(); ++k) v = v + s[k] * f1[k];
        composed.push_back(R.reduce(v));
    }
    if (!contained_global(R, N.ngens, composed, N.relations))
        throw std::invalid_argument("f1 does not vanish on the second syzygies");

    PresMod P;
    P.ring = R;
    P.ngens = N.ngens + M.ngens;
    for (const auto& rel : N.relations) {
        Vec v = rel;
        v.resize(static_cast<size_t>(P.ngens), Poly(r));
        P.relations.push_back(v);
    }
    for (size_t k = 0; k < f1.size(); ++k) {
        Vec v = f1[k];
        v.insert(v.end(), M.relations[k].begin(), M.relations[k].end());
        P.relations.push_back(v);
    }
    if (N.degrees && M.degrees) {
        auto d = *N.degrees;
        d.insert(d.end(), M.degrees->begin(), M.degrees->end());
        P.degrees = d;
    }
    P.normalize();

    std::vector<Vec> inc, proj;
    for (int j = 0; j < N.ngens; ++j) {
        inc.push_back(unit_vec(r, P.ngens, j));
        proj.push_back(zero_vec(r, M.ngens));
    }
    for (int j = 0; j < M.ngens; ++j) proj.push_back(unit_vec(r, M.ngens, j));
    return {P, ModMap(N, P, inc), ModMap(P, M, proj)};
}

Extension extension_R_by_Ri(const TruncRing& R, const Poly& sigma, int i) {
    if (i < 1 || i >= R.n()) throw std::invalid_argument("need 1 <= i < n");
    Poly s = R.reduce(sigma);
    int wt = R.t_weight();
    int deg_a = wt;
    if (!s.is_zero()) {
        if (!s.is_homogeneous()) deg_a = 0;
        else deg_a = wt - s.degree();
    }
    PresMod N = PresMod::R_i(R, i, deg_a);
    PresMod M = PresMod::cyclic(R, {R.t()}, 0);
    return build_extension(N, M, {Vec{s}});
}

bool extension_is_R_i1(const Poly& sigma) { return !sigma.constant_term().is_zero(); }

bool is_exact(const Extension& e) {
    if (!e.from_N.is_injective()) return false;
    if (!e.to_M.is_surjective()) return false;
    const PresMod& P = e.P;
    auto ker = e.to_M.kernel();
    return contained(P.ring, P.ngens, ker.gens, concat(e.from_N.images(), P.relations));
}

// --- refinements --------------------------------------------------------------

Refinement refine_filtrations(const FiltrationChain& D, const FiltrationChain& F) {
    const PresMod& M = D.ambient;
    if (!M.is_graded() || !F.ambient.is_graded()) throw std::invalid_argument("refinement needs a graded ambient");
    if (M.ngens != F.ambient.ngens) throw std::invalid_argument("chains in different modules");
    const TruncRing& R = M.ring;
    auto with_rel = [&](const std::vector<Vec>& a) { return concat(a, M.relations); };
    auto cap = [&](const std::vector<Vec>& a, const std::vector<Vec>& b) {
        return intersect(R, M.ngens, with_rel(a), with_rel(b));
    };
    auto build = [&](const FiltrationChain& X, const FiltrationChain& Y) {
        FiltrationChain out{M, {}};
        for (size_t i = 0; i + 1 < X.size(); ++i)
            for (size_t j = 0; j + 1 < Y.size(); ++j) {
                auto member = concat(X.members[i + 1], cap(X.members[i], Y.members[j]));
                if (!out.members.empty() &&
                    same_span(R, M.ngens, with_rel(out.members.back()), with_rel(member)))
                    continue;
                out.members.push_back(member);
            }
        out.members.push_back({});
        // The closing zero may repeat the last member.
        if (out.members.size() > 1 &&
            contained_global(R, M.ngens, out.members[out.members.size() - 2], M.relations))
            out.members.pop_back();
        return out;
    };
    Refinement ref{build(D, F), build(F, D), false};

    auto pieces = [](const FiltrationChain& c) {
        std::vector<HilbertSeries> hs;
        for (size_t k = 0; k + 1 < c.size(); ++k) {
            auto h = c.quotient(k).hilbert_series();
            if (!h.is_zero()) hs.push_back(h);
        }
        return hs;
    };
    auto a = pieces(ref.D), b = pieces(ref.F);
    ref.similar = a.size() == b.size();
    std::vector<bool> used(b.size(), false);
    for (size_t i = 0; i < a.size() && ref.similar; ++i) {
        bool found = false;
        for (size_t j = 0; j < b.size(); ++j)
            if (!used[j] && a[i] == b[j]) {
                used[j] = found = true;
                break;
            }
        ref.similar = found;
    }
    return ref;
}

// --- Hom and Ext --------------------------------------------------------------

ModMap HomModule::matrix_map(const Vec& entries) const {
    const int h = target.ngens;
    std::vector<Vec> images;
    for (int j = 0; j < source.ngens; ++j)
        images.emplace_back(entries.begin() + j * h, entries.begin() + (j + 1) * h);
    return ModMap(source, target, images);
}

ModMap HomModule::to_map(const Vec& coords) const {
    Vec e = zero_vec(source.ring.ring(), space.rank);
    for (size_t l = 0; l < coords.size(); ++l) e = e + coords[l] * space.gens[l];
    return matrix_map(e);
}

HomModule hom_module(const PresMod& M, const PresMod& N) {
    if (!(N.ring == M.ring)) throw std::invalid_argument("modules over different rings");
    const TruncRing& R = M.ring;
    const RingPtr& r = R.ring();
    const int g = M.ngens, h = N.ngens, s = static_cast<int>(M.relations.size());
    HomModule out;
    out.source = M;
    out.target = N;
    Subquotient& sp = out.space;
    sp.ring = R;
    sp.rank = g * h;
    if (s == 0) {
        sp.gens = units(r, g * h);
    } else {
        // Basis matrix E_{jk} sends relation l to r_{l,j} e_k in block l.
        std::vector<Vec> images;
        for (int j = 0; j < g; ++j)
            for (int k = 0; k < h; ++k) {
                Vec v = zero_vec(r, s * h);
                for (int l = 0; l < s; ++l) v[static_cast<size_t>(l * h + k)] = M.relations[l][j];
                images.push_back(v);
            }
        sp.gens = kernel_mod(r, s * h, images, block_relations(N, s), R.trunc());
    }
    sp.rels = block_relations(N, g);
    if (M.degrees && N.degrees) {
        for (int j = 0; j < g; ++j)
            for (int k = 0; k < h; ++k) sp.degrees.push_back((*N.degrees)[k] - (*M.degrees)[j]);
    }
    out.pres = sp.presentation();
    return out;
}

ExtModule ext1_module(const PresMod& M, const PresMod& N) {
    if (!(N.ring == M.ring)) throw std::invalid_argument("modules over different rings");
    const TruncRing& R = M.ring;
    const RingPtr& r = R.ring();
    const int g = M.ngens, h = N.ngens, s = static_cast<int>(M.relations.size());
    ExtModule out;
    Subquotient& sp = out.space;
    sp.ring = R;
    sp.rank = s * h;
    if (s > 0) {
        auto syz = syzygy_basis(r, g, M.relations, R.trunc());
        const int b = static_cast<int>(syz.size());
        if (b == 0) {
            sp.gens = units(r, s * h);
        } else {
            std::vector<Vec> images;
            for (int k = 0; k < s; ++k)
                for (int c = 0; c < h; ++c) {
                    Vec v = zero_vec(r, b * h);
                    for (int l = 0; l < b; ++l) v[static_cast<size_t>(l * h + c)] = syz[l][k];
                    images.push_back(v);
                }
            sp.gens = kernel_mod(r, b * h, images, block_relations(N, b), R.trunc());
        }
        // Boundaries: psi_k = p_{k,j} e_c for each basis map e_j -> e_c.
        for (int j = 0; j < g; ++j)
            for (int c = 0; c < h; ++c) {
                Vec v = zero_vec(r, s * h);
                for (int k = 0; k < s; ++k) v[static_cast<size_t>(k * h + c)] = M.relations[k][j];
                sp.rels.push_back(R.reduce(v));
            }
        sp.rels = concat(sp.rels, block_relations(N, s));
        if (M.degrees && N.degrees) {
            bool ok = true;
            std::vector<int> rel_deg;
            for (const auto& rel : M.relations) {
                auto d = vec_degree(rel, *M.degrees);
                if (!d) ok = false;
                rel_deg.push_back(d ? *d : 0);
            }
            if (ok)
                for (int k = 0; k < s; ++k)
                    for (int c = 0; c < h; ++c) sp.degrees.push_back((*N.degrees)[c] - rel_deg[k]);
        }
    }
    out.pres = sp.presentation();
    return out;
}

bool surjective_iff_restriction(const ModMap& phi) {
    if (!phi.source().relations.empty()) throw std::invalid_argument("source must be free");
    const PresMod& E = phi.target();
    const TruncRing& R = E.ring;
    const RingPtr& r = R.ring();
    const int h = E.ngens;
    // Reduction mod t: coker of R^s -> E/tE, computed over the base ring.
    TruncRing R1 = R.with_n(1);
    std::vector<Vec> rels;
    for (const auto& v : concat(phi.images(), E.relations)) {
        Vec w = substitute_zero(v, R.t_var());
        if (!is_zero(w)) rels.push_back(w);
    }
    bool restricted = contained(R1, h, units(r, h), rels);
    bool direct = phi.is_surjective();
    if (restricted != direct) throw std::logic_error("surjectivity criteria disagree");
    return direct;
}

}  // namespace primring
