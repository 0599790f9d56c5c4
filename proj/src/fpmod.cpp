#include "primring/fpmod.hpp"

#include "primring/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace primring {

namespace {

Subquotient subquotient(const PresMod& M, std::vector<Vec> gens, const std::vector<Vec>& below) {
    Subquotient s;
    s.ring = M.ring;
    s.rank = M.ngens;
    s.gens = std::move(gens);
    s.rels = concat(below, M.relations);
    if (M.degrees) s.degrees = *M.degrees;
    return s;
}

std::vector<Vec> t_power_gens(const PresMod& M, int i) {
    std::vector<Vec> out;
    Poly ti = M.ring.t().pow(i);
    for (int j = 0; j < M.ngens; ++j) out.push_back(M.ring.reduce(ti * unit_vec(M.ring.ring(), M.ngens, j)));
    return out;
}

std::vector<Vec> nonzero(std::vector<Vec> v) {
    std::erase_if(v, [](const Vec& x) { return is_zero(x); });
    return v;
}

// Rough size of an element, used to pick readable witnesses.
std::pair<int, size_t> vec_size(const Vec& v) {
    int deg = 0;
    size_t terms = 0;
    for (const auto& p : v) {
        for (const auto& t : p.terms()) deg = std::max(deg, t.mono.total_degree());
        terms += p.size();
    }
    return {deg, terms};
}

std::string combination_text(const Vec& coeffs, const std::vector<Vec>& gens) {
    std::string out;
    for (size_t j = 0; j < coeffs.size(); ++j) {
        const Poly& c = coeffs[j];
        if (c.is_zero()) continue;
        std::string g = "(" + to_string(gens[j]) + ")";
        if (gens[j].size() == 1) g = "(" + gens[j][0].to_string() + ")";
        std::string s = c.to_string();
        bool neg = false;
        if (c.size() == 1 && s[0] == '-') {
            neg = true;
            s = s.substr(1);
        }
        std::string term;
        if (s == "1") term = g;
        else if (c.size() == 1) term = s + "*" + g;
        else term = "(" + s + ")*" + g;
        if (out.empty()) out = neg ? "-" + term : term;
        else out += (neg ? " - " : " + ") + term;
    }
    return out.empty() ? "0" : out;
}

}  // namespace

// --- filtrations ----------------------------------------------------------

Subquotient FiltrationChain::quotient(size_t k) const {
    return subquotient(ambient, members[k], members[k + 1]);
}

bool FiltrationChain::is_valid() const {
    const PresMod& M = ambient;
    if (members.size() < 2) return false;
    std::vector<Vec> all;
    for (int j = 0; j < M.ngens; ++j) all.push_back(unit_vec(M.ring.ring(), M.ngens, j));
    if (!contained_global(M.ring, M.ngens, all, concat(members.front(), M.relations))) return false;
    if (!contained_global(M.ring, M.ngens, members.back(), M.relations)) return false;
    for (size_t k = 0; k + 1 < members.size(); ++k)
        if (!contained_global(M.ring, M.ngens, members[k + 1], concat(members[k], M.relations))) return false;
    return true;
}

std::vector<Vec> first_member(const PresMod& M, int i) {
    if (i >= M.ring.n()) return {};
    return t_power_gens(M, i);
}

std::vector<Vec> second_member(const PresMod& M, int i) {
    if (i <= 0) return {};
    if (i >= M.ring.n()) return t_power_gens(M, 0);
    return nonzero(kernel_mod(M.ring.ring(), M.ngens, t_power_gens(M, i), M.relations, M.ring.trunc()));
}

FiltrationChain first_canonical_filtration(const PresMod& M) {
    FiltrationChain c{M, {}};
    for (int i = 0; i <= M.ring.n(); ++i) c.members.push_back(first_member(M, i));
    return c;
}

FiltrationChain second_canonical_filtration(const PresMod& M) {
    FiltrationChain c{M, {}};
    for (int i = M.ring.n(); i >= 0; --i) c.members.push_back(second_member(M, i));
    return c;
}

Subquotient first_quotient(const PresMod& M, int i) {
    return subquotient(M, t_power_gens(M, i), first_member(M, i + 1));
}

Subquotient second_quotient(const PresMod& M, int i) {
    return subquotient(M, second_member(M, i), second_member(M, i - 1));
}

// --- comparison maps and balancedness -------------------------------------

ComparisonMaps comparison_maps(const PresMod& M) {
    const int n = M.ring.n();
    const Poly t = M.ring.t();
    ComparisonMaps out;

    std::vector<Subquotient> up(static_cast<size_t>(n + 1));
    std::vector<PresMod> up_pres(static_cast<size_t>(n + 1));
    for (int i = 1; i <= n; ++i) {
        up[i] = second_quotient(M, i);
        up_pres[i] = up[i].presentation();
    }
    for (int i = 1; i < n; ++i) {
        auto coords = up[i].coordinates(scale(t, up[i + 1].gens));
        ModMap lam(up_pres[i + 1], up_pres[i], coords);
        if (!lam.is_injective()) throw std::logic_error("lambda map is not injective");
        out.gamma_upper.push_back(lam.cokernel());
        out.lambda.push_back(std::move(lam));
    }

    std::vector<PresMod> low_pres;
    for (int i = 0; i < n; ++i) low_pres.push_back(first_quotient(M, i).presentation());
    for (int i = 0; i + 1 < n; ++i) {
        std::vector<Vec> ids;
        for (int j = 0; j < M.ngens; ++j) ids.push_back(unit_vec(M.ring.ring(), M.ngens, j));
        ModMap mu(low_pres[i], low_pres[i + 1], ids);
        if (!mu.is_surjective()) throw std::logic_error("mu map is not surjective");
        out.gamma_lower.push_back(mu.kernel());
        out.mu.push_back(std::move(mu));
    }
    return out;
}

bool BalanceCriteria::agree() const {
    return lambda_surjective == gamma_lower_zero && gamma_lower_zero == gamma_upper_zero &&
           gamma_upper_zero == mu_injective && mu_injective == filtrations_equal;
}

BalanceCriteria balance_criteria(const PresMod& M) {
    const int n = M.ring.n();
    const TruncRing& R = M.ring;
    const Poly t = R.t();
    BalanceCriteria c;

    ComparisonMaps cm = comparison_maps(M);
    for (const auto& lam : cm.lambda)
        if (!lam.is_surjective()) c.lambda_surjective = false;
    for (const auto& mu : cm.mu)
        if (!mu.is_injective()) c.mu_injective = false;

    // Γ_i = (M_i ∩ t^{-1} M_{i+2}) / M_{i+1}, directly in the free cover.
    for (int i = 0; i + 1 < n; ++i) {
        auto K = kernel_mod(R.ring(), M.ngens, t_power_gens(M, i + 1), concat(first_member(M, i + 2), M.relations),
                            R.trunc());
        std::vector<Vec> elems;
        for (const auto& k : K) elems.push_back(R.reduce(t.pow(i) * k));
        elems = nonzero(elems);
        if (!contained(R, M.ngens, elems, concat(first_member(M, i + 1), M.relations))) c.gamma_lower_zero = false;
    }
    // Γ^(i-1) = M^(i) / (t M^(i+1) + M^(i-1)).
    for (int i = 1; i < n; ++i) {
        auto below = concat(scale(t, second_member(M, i + 1)), second_member(M, i - 1));
        if (!contained(R, M.ngens, second_member(M, i), concat(below, M.relations))) c.gamma_upper_zero = false;
    }
    for (int i = 1; i < n; ++i)
        if (!same_span(R, M.ngens, concat(first_member(M, i), M.relations),
                       concat(second_member(M, n - i), M.relations)))
            c.filtrations_equal = false;
    return c;
}

BalancedResult is_balanced(const PresMod& M) {
    const int n = M.ring.n();
    const TruncRing& R = M.ring;
    ComparisonMaps cm = comparison_maps(M);
    bool by_lambda = true;
    for (const auto& lam : cm.lambda)
        if (!lam.is_surjective()) by_lambda = false;

    BalancedResult res;
    bool by_filtrations = true;
    for (int i = 1; i < n && by_filtrations; ++i) {
        auto A = concat(first_member(M, i), M.relations);
        auto K = second_member(M, n - i);
        if (contained(R, M.ngens, K, A)) continue;
        by_filtrations = false;
        std::optional<Vec> best;
        for (const auto& k : K) {
            if (contained(R, M.ngens, {k}, A)) continue;
            if (!best || vec_size(k) < vec_size(*best)) best = k;
        }
        if (!best) throw std::logic_error("no witness among the generators of M^(n-i)");
        BalancedWitness w;
        w.i = i;
        w.element = *best;
        if (M.embedding) {
            const auto& emb = *M.embedding;
            Vec e = zero_vec(R.ring(), static_cast<int>(emb.front().size()));
            for (size_t j = 0; j < emb.size(); ++j) e = e + w.element[j] * emb[j];
            e = R.reduce(e);
            w.embedded = e;
            w.certificate = (e.size() == 1 ? e[0].to_string() : to_string(e)) + " = " +
                            combination_text(w.element, emb);
        } else {
            w.certificate = to_string(w.element) + " in M^(" + std::to_string(n - i) + ") but not in M_" +
                            std::to_string(i);
        }
        res.witness = w;
    }
    if (by_lambda != by_filtrations) throw std::logic_error("balancedness criteria disagree");
    res.balanced = by_lambda;
    res.certificate = res.balanced ? "all Gamma zero" : res.witness->certificate;
    return res;
}

// --- quasi-free type ---------------------------------------------------------

MinimalPresentation minimize_graded(int ngens, std::vector<Vec> relations, std::vector<int> degrees) {
    std::erase_if(relations, [](const Vec& v) { return is_zero(v); });
    std::vector<bool> removed(static_cast<size_t>(ngens), false);
    for (;;) {
        int ri = -1, col = -1;
        for (size_t r = 0; r < relations.size() && ri < 0; ++r)
            for (int j = 0; j < ngens; ++j)
                if (!relations[r][j].is_zero() && relations[r][j].is_constant()) {
                    ri = static_cast<int>(r);
                    col = j;
                    break;
                }
        if (ri < 0) break;
        Vec piv = relations[static_cast<size_t>(ri)];
        Rational c = piv[col].constant_term();
        relations.erase(relations.begin() + ri);
        for (auto& s : relations) {
            if (s[col].is_zero()) continue;
            Poly f = s[col].scaled(c.inverse());
            s = s - f * piv;
        }
        removed[static_cast<size_t>(col)] = true;
        std::erase_if(relations, [](const Vec& v) { return is_zero(v); });
    }
    MinimalPresentation out;
    for (int j = 0; j < ngens; ++j)
        if (!removed[static_cast<size_t>(j)]) {
            out.kept.push_back(j);
            out.degrees.push_back(degrees[static_cast<size_t>(j)]);
        }
    for (const auto& r : relations) {
        Vec v;
        for (int j : out.kept) v.push_back(r[j]);
        out.relations.push_back(v);
    }
    return out;
}

QuasiFreeType quasi_free_type(const PresMod& M) {
    if (!M.is_graded()) throw std::invalid_argument("quasi_free_type needs a graded module");
    const int n = M.ring.n();
    const int tv = M.ring.t_var();
    QuasiFreeType out;
    for (int i = 0; i < n; ++i) {
        Subquotient G = first_quotient(M, i);
        PresMod P = G.presentation();
        std::vector<Vec> rels;
        for (const auto& r : P.relations) rels.push_back(substitute_zero(r, tv));
        auto mp = minimize_graded(P.ngens, rels, G.gen_degrees());
        if (!mp.is_free()) {
            out.first_non_free = i;
            return out;
        }
        std::map<int, long long> num;
        for (int d : mp.degrees) num[d] += 1;
        if (!(HilbertSeries(num, M.ring.base_weights()) == G.hilbert_series()))
            throw std::logic_error("free quotient with unexpected Hilbert series");
        out.ranks.push_back(static_cast<int>(mp.kept.size()));
    }
    std::vector<int> type;
    for (int i = 1; i <= n; ++i) {
        int m = out.ranks[static_cast<size_t>(i - 1)] - (i < n ? out.ranks[static_cast<size_t>(i)] : 0);
        if (m < 0) return out;
        type.push_back(m);
    }
    out.type = type;
    return out;
}

std::vector<int> generic_type(const PresMod& M) {
    const int n = M.ring.n();
    const int tv = M.ring.t_var();
    std::vector<int> g;
    for (int i = 0; i < n; ++i) {
        PresMod P = first_quotient(M, i).presentation();
        PolyMatrix A;
        for (const auto& r : P.relations) A.push_back(substitute_zero(r, tv));
        g.push_back(P.ngens - (A.empty() ? 0 : generic_rank(A)));
    }
    std::vector<int> type;
    for (int i = 1; i <= n; ++i)
        type.push_back(g[static_cast<size_t>(i - 1)] - (i < n ? g[static_cast<size_t>(i)] : 0));
    return type;
}

}  // namespace primring
