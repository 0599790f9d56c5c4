#pragma once

#include "primring/poly.hpp"

#include <optional>
#include <vector>

namespace primring {

/// Element of a free module A^r, one polynomial per component.
using Vec = std::vector<Poly>;

Vec zero_vec(const RingPtr& ring, int rank);
Vec unit_vec(const RingPtr& ring, int rank, int j);
bool is_zero(const Vec& v);
Vec operator+(const Vec& a, const Vec& b);
Vec operator-(const Vec& a, const Vec& b);
Vec operator*(const Poly& c, const Vec& v);
std::string to_string(const Vec& v);

/// Quotient by var^power in every component (power 0: none). This is how
/// R[n] = Q[x][t]/(t^n) computations run inside Q[x, t].
struct Truncation {
    int var = -1;
    int power = 0;
    bool active() const { return power > 0 && var >= 0; }
};

/// Term of a module element: monomial times basis vector e_comp.
struct MTerm {
    Monomial mono;
    int comp = 0;
    Rational coeff;
};

/// Module order: components are grouped in blocks (lower block index
/// dominates), then the ring's monomial order, then lower component index.
class ModuleOrder {
public:
    ModuleOrder() = default;
    ModuleOrder(RingPtr ring, std::vector<int> block) : ring_(std::move(ring)), block_(std::move(block)) {}

    int compare(const Monomial& a, int ca, const Monomial& b, int cb) const {
        int ba = block_[static_cast<size_t>(ca)], bb = block_[static_cast<size_t>(cb)];
        if (ba != bb) return ba < bb ? 1 : -1;
        int c = ring_->compare(a, b);
        if (c != 0) return c;
        if (ca != cb) return ca < cb ? 1 : -1;
        return 0;
    }
    int compare(const MTerm& a, const MTerm& b) const { return compare(a.mono, a.comp, b.mono, b.comp); }
    int block(int comp) const { return block_[static_cast<size_t>(comp)]; }
    const RingPtr& ring() const { return ring_; }

private:
    RingPtr ring_;
    std::vector<int> block_;
};

struct GbOptions {
    /// Block index per component; empty means a single block.
    std::vector<int> block;
    Truncation trunc;
};

/// Reduced Groebner basis of a submodule of A^rank (rank 1 for ideals).
class GroebnerBasis {
public:
    GroebnerBasis() = default;

    const RingPtr& ring() const { return ring_; }
    int rank() const { return rank_; }
    const ModuleOrder& order() const { return order_; }
    size_t size() const { return elems_.size(); }
    bool is_unit_ideal() const;

    /// Basis elements as vectors, lead terms first in the module order.
    std::vector<Vec> generators() const;
    const std::vector<std::vector<MTerm>>& raw() const { return elems_; }

    Vec normal_form(const Vec& f) const;
    bool contains(const Vec& f) const { return is_zero(normal_form(f)); }

    struct Lead {
        Monomial mono;
        int comp;
    };
    std::vector<Lead> leads() const;

    /// Every S-pair reduces to zero. Expensive; used by tests and --verify.
    bool satisfies_buchberger_criterion() const;

    std::vector<MTerm> reduce_terms(std::vector<MTerm> f) const;
    std::vector<MTerm> to_terms(const Vec& v) const;
    Vec to_vec(const std::vector<MTerm>& terms) const;

private:
    friend GroebnerBasis groebner_basis(const RingPtr&, int, const std::vector<Vec>&, const GbOptions&);

    RingPtr ring_;
    int rank_ = 0;
    ModuleOrder order_;
    std::vector<std::vector<MTerm>> elems_;
};

GroebnerBasis groebner_basis(const RingPtr& ring, int rank, const std::vector<Vec>& gens,
                             const GbOptions& opts = {});

/// Ideal convenience wrappers.
GroebnerBasis ideal_basis(const RingPtr& ring, const std::vector<Poly>& gens, Truncation trunc = {});
Poly normal_form(const Poly& f, const GroebnerBasis& gb);

/// Generators of {c in A^s : sum c_i images_i lies in span(mod)}, where the
/// images and mod live in A^rank and s = images.size(). Truncation applies to
/// both the target and the coefficient vectors.
std::vector<Vec> kernel_mod(const RingPtr& ring, int rank, const std::vector<Vec>& images,
                            const std::vector<Vec>& mod, Truncation trunc = {});

/// Relations among the generators.
std::vector<Vec> syzygy_basis(const RingPtr& ring, int rank, const std::vector<Vec>& gens,
                              Truncation trunc = {});

/// Expresses elements of span(images) + span(mod) as combinations of images.
class Lifter {
public:
    Lifter(const RingPtr& ring, int rank, std::vector<Vec> images, std::vector<Vec> mod, Truncation trunc = {});
    /// c with v - sum c_i images_i in span(mod), or nothing if v is outside.
    std::optional<Vec> lift(const Vec& v) const;
    bool contains(const Vec& v) const { return lift(v).has_value(); }

private:
    RingPtr ring_;
    int rank_;
    int nimages_;
    GroebnerBasis gb_;
};

/// Image under var -> 0.
Poly substitute_zero(const Poly& f, int var);
Vec substitute_zero(const Vec& v, int var);

/// Global switch for expensive internal cross-checks.
void set_verify(bool on);
bool verify_enabled();

}  // namespace primring
