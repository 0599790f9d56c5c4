#pragma once

#include "primring/fpmod.hpp"

#include <vector>

namespace primring {

/// M^∨ = Hom(M, R[n]).
HomModule dual(const PresMod& M);

struct NaturalMap {
    HomModule dual, bidual;
    /// t_M : M -> M^∨∨ (target = bidual.pres).
    ModMap map;
};
NaturalMap natural_map(const PresMod& M);

/// M -> R[n]^k, m -> (φ_1(m), ..., φ_k(m)) over generators φ_l of M^∨.
/// Its kernel is ker(t_M); for torsion-free M it is an embedding.
ModMap dual_embedding(const PresMod& M);

struct TorsionReport {
    /// Generators of T(M) in M's generator coordinates (outside the relations).
    std::vector<Vec> generators;
    /// Per generator: s with s·g = 0 and s_0 != 0.
    struct Witness {
        Vec generator;
        Poly s;
    };
    std::vector<Witness> witnesses;
    bool torsion_free() const { return generators.empty(); }
};

/// T(M) = ker(t_M), cross-checked against annihilators (each generator is
/// killed by some s with s_0 != 0) and against the torsion of M viewed as a
/// module over the base ring. Throws std::logic_error on disagreement.
TorsionReport torsion(const PresMod& M);

/// Torsion of M as a module over the base ring: elements of R^{n g} lying in
/// the fraction-field span of the relations. Returned in M's coordinates.
std::vector<Vec> torsion_by_saturation(const PresMod& M);

/// M / T(M).
PresMod torsion_free_quotient(const PresMod& M, const TorsionReport& T);

}  // namespace primring
