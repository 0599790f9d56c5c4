#pragma once

#include "primring/hilbert_series.hpp"
#include "primring/trunc_ring.hpp"

#include <optional>
#include <string>
#include <vector>

namespace primring {

/// Degree of a homogeneous nonzero vector under component degrees; nothing
/// for zero or inhomogeneous input.
std::optional<int> vec_degree(const Vec& v, const std::vector<int>& comp_degrees);
bool vec_is_homogeneous(const Vec& v, const std::vector<int>& comp_degrees);

/// Finitely presented R[n]-module: R[n]^ngens modulo the span of `relations`.
struct PresMod {
    TruncRing ring;
    int ngens = 0;
    std::vector<Vec> relations;
    /// Generator degrees; present iff the module is graded.
    std::optional<std::vector<int>> degrees;
    /// Images of the generators in some R[n]^k (ideals keep their generators here).
    std::optional<std::vector<Vec>> embedding;

    static PresMod free(const TruncRing& R, int p, std::vector<int> degrees = {});
    /// R[i] = R[n]/(t^i).
    static PresMod R_i(const TruncRing& R, int i, int degree = 0);
    /// R[n]/I.
    static PresMod cyclic(const TruncRing& R, const std::vector<Poly>& ideal, int degree = 0);
    /// The ideal I itself, presented by its syzygies.
    static PresMod ideal(const TruncRing& R, const std::vector<Poly>& gens);
    static PresMod direct_sum(const PresMod& a, const PresMod& b);

    bool is_graded() const { return degrees.has_value(); }
    /// Generator degrees, zeros when ungraded.
    std::vector<int> degree_vector() const;
    /// Checks sizes, reduces entries mod t^n and drops the grading if a
    /// relation is inhomogeneous.
    void normalize();
    /// Same module, relations reduced and zero relations dropped.
    std::string to_string() const;
};

/// Submodule tests in R[n]^rank. Under Origin locality, B is contained in A
/// when it is after localizing at the origin, tested as B in A + m B.
bool contained(const TruncRing& R, int rank, const std::vector<Vec>& B, const std::vector<Vec>& A);
bool contained_global(const TruncRing& R, int rank, const std::vector<Vec>& B, const std::vector<Vec>& A);
bool same_span(const TruncRing& R, int rank, const std::vector<Vec>& A, const std::vector<Vec>& B);
std::vector<Vec> intersect(const TruncRing& R, int rank, const std::vector<Vec>& A, const std::vector<Vec>& B);
std::vector<Vec> scale(const Poly& c, const std::vector<Vec>& A);
std::vector<Vec> concat(std::vector<Vec> a, const std::vector<Vec>& b);

/// (A + B) / B inside R[n]^rank.
struct Subquotient {
    TruncRing ring;
    int rank = 0;
    std::vector<Vec> gens;
    std::vector<Vec> rels;
    /// Ambient component degrees; empty when ungraded.
    std::vector<int> degrees;

    bool is_zero() const;
    HilbertSeries hilbert_series() const;
    /// Presentation on `gens`; generator degrees taken from the ambient grading.
    PresMod presentation() const;
    /// Coordinates of each v on gens modulo rels; throws if v is outside.
    std::vector<Vec> coordinates(const std::vector<Vec>& vs) const;
    std::vector<int> gen_degrees() const;
};

/// Morphism of presented modules given on generators.
class ModMap {
public:
    ModMap() = default;
    /// Verifies that every source relation maps into the target relations.
    ModMap(PresMod source, PresMod target, std::vector<Vec> images);

    const PresMod& source() const { return source_; }
    const PresMod& target() const { return target_; }
    const std::vector<Vec>& images() const { return images_; }

    Vec apply(const Vec& c) const;
    /// Kernel inside the source's free cover.
    Subquotient kernel() const;
    Subquotient cokernel() const;
    Subquotient image() const;
    bool is_injective() const { return kernel().is_zero(); }
    bool is_surjective() const { return cokernel().is_zero(); }

private:
    PresMod source_, target_;
    std::vector<Vec> images_;
};

ModMap compose(const ModMap& g, const ModMap& f);

}  // namespace primring
