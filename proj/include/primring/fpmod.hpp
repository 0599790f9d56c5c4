#pragma once

#include "primring/module.hpp"

#include <optional>
#include <string>
#include <vector>

namespace primring {

/// Descending chain of submodules of `ambient`, each member given by
/// generators in the ambient's free cover (relations implied).
struct FiltrationChain {
    PresMod ambient;
    std::vector<std::vector<Vec>> members;

    size_t size() const { return members.size(); }
    /// members[k] / members[k+1].
    Subquotient quotient(size_t k) const;
    /// Each member contains the next; first is everything, last is zero.
    bool is_valid() const;
};

/// Generators of t^i M.
std::vector<Vec> first_member(const PresMod& M, int i);
/// Generators of M^(i) = {m : t^i m = 0}.
std::vector<Vec> second_member(const PresMod& M, int i);

/// M = M_0 ⊇ M_1 ⊇ ... ⊇ M_n = 0.
FiltrationChain first_canonical_filtration(const PresMod& M);
/// M = M^(n) ⊇ M^(n-1) ⊇ ... ⊇ M^(0) = 0.
FiltrationChain second_canonical_filtration(const PresMod& M);

/// G_i(M) = M_i / M_{i+1}, 0 <= i < n.
Subquotient first_quotient(const PresMod& M, int i);
/// G^(i)(M) = M^(i) / M^(i-1), 1 <= i <= n.
Subquotient second_quotient(const PresMod& M, int i);

struct ComparisonMaps {
    /// lambda[i-1] = λ_i : G^(i+1) -> G^(i), 1 <= i <= n-1.
    std::vector<ModMap> lambda;
    /// mu[i] = μ_i : G_i -> G_{i+1}, 0 <= i <= n-2.
    std::vector<ModMap> mu;
    /// gamma_upper[i] = Γ^(i) = coker λ_{i+1}.
    std::vector<Subquotient> gamma_upper;
    /// gamma_lower[i] = Γ_i = ker μ_i.
    std::vector<Subquotient> gamma_lower;
};

/// Maps induced by t. Asserts λ_i injective and μ_i surjective.
ComparisonMaps comparison_maps(const PresMod& M);

/// The balancedness criteria, each computed on its own path.
struct BalanceCriteria {
    bool lambda_surjective = true;   // all λ_i onto (cokernels as presented maps)
    bool gamma_lower_zero = true;    // M_i ∩ t^{-1} M_{i+2} ⊆ M_{i+1} in the cover
    bool gamma_upper_zero = true;    // M^(i) ⊆ t M^(i+1) + M^(i-1) in the cover
    bool mu_injective = true;        // all μ_i with zero kernel
    bool filtrations_equal = true;   // M_i = M^(n-i)
    bool agree() const;
};
BalanceCriteria balance_criteria(const PresMod& M);

struct BalancedWitness {
    /// Element of M^(n-i) outside M_i, in the generator coordinates of M.
    int i = 0;
    Vec element;
    /// Its image under the module's embedding, when one is recorded.
    std::optional<Vec> embedded;
    /// "image = sum coeff*(generator)" for embedded modules.
    std::string certificate;
};

struct BalancedResult {
    bool balanced = false;
    std::optional<BalancedWitness> witness;
    std::string certificate;
};

/// Surjectivity of λ(M), cross-checked against M_i = M^(n-i); throws
/// std::logic_error if they disagree.
BalancedResult is_balanced(const PresMod& M);

/// Minimal graded presentation over the base ring by pruning relations with
/// a constant entry.
struct MinimalPresentation {
    std::vector<int> kept;        // surviving generator indices
    std::vector<int> degrees;     // their degrees
    std::vector<Vec> relations;   // over the survivors, all entries in m
    bool is_free() const { return relations.empty(); }
};
MinimalPresentation minimize_graded(int ngens, std::vector<Vec> relations, std::vector<int> degrees);

struct QuasiFreeType {
    /// m_1..m_n when every G_i is free with non-increasing ranks.
    std::optional<std::vector<int>> type;
    /// Ranks g_0..g_{n-1} of the free G_i that were examined.
    std::vector<int> ranks;
    /// First i with G_i not free, or -1.
    int first_non_free = -1;
};

/// Requires a graded module.
QuasiFreeType quasi_free_type(const PresMod& M);
/// Type of M tensored with K[n], K the fraction field of the base ring.
std::vector<int> generic_type(const PresMod& M);

// --- constructions ------------------------------------------------------

struct Extension {
    PresMod P;
    ModMap from_N;  // N -> P
    ModMap to_M;    // P -> M
};

/// P = (N ⊕ F_0) / (Rel_N + η(F_1)), η = f_1 ⊕ φ_1, where F_1 -> F_0 is the
/// relation matrix of M and f1[k] is the image in N of the k-th relation.
Extension build_extension(const PresMod& N, const PresMod& M, const std::vector<Vec>& f1);

/// 0 -> R[i] -> P -> R -> 0 built from σ (R = R[n]/(t), resolution by t, t^{n-1}).
Extension extension_R_by_Ri(const TruncRing& R, const Poly& sigma, int i);
/// The classification: P ≅ R[i+1] locally iff σ(0) != 0.
bool extension_is_R_i1(const Poly& sigma);

/// Checks N -> P injective, P -> M surjective and ker = im.
bool is_exact(const Extension& e);

/// Refinements D', F' of two chains in the same ambient, built from
/// D'_{i,j} = D_{i+1} + D_i ∩ F_j and F'_{j,i} = F_{j+1} + F_j ∩ D_i.
struct Refinement {
    FiltrationChain D, F;
    /// Hilbert series of the nonzero graded pieces coincide as multisets.
    bool similar = false;
};
Refinement refine_filtrations(const FiltrationChain& D, const FiltrationChain& F);

/// Hom(M, N) inside the free module R[n]^{g*h} of matrices (component
/// j*h + k: coefficient of N's generator k in the image of M's generator j).
struct HomModule {
    Subquotient space;
    PresMod pres;
    PresMod source, target;
    /// Homomorphism given by coordinates on pres's generators.
    ModMap to_map(const Vec& coords) const;
    /// Homomorphism given as a point of the ambient matrix space.
    ModMap matrix_map(const Vec& entries) const;
};
HomModule hom_module(const PresMod& M, const PresMod& N);

/// Ext^1(M, N) from F_2 -> F_1 -> F_0 -> M; returned as a subquotient of
/// Hom(F_1, N) = N^{#relations of M}.
struct ExtModule {
    Subquotient space;
    PresMod pres;
};
ExtModule ext1_module(const PresMod& M, const PresMod& N);

/// For φ from a free module: surjectivity of φ decided from its reduction
/// mod t, cross-checked against the cokernel over R[n].
bool surjective_iff_restriction(const ModMap& phi);

}  // namespace primring
