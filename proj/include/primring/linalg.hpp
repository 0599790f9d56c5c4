#pragma once

#include "primring/poly.hpp"

#include <map>
#include <vector>

namespace primring {

/// Sparse row over Q: column -> nonzero value.
using SparseRow = std::map<int, Rational>;

/// Incremental row echelon form over Q. Rows are reduced against the stored
/// pivots as they arrive, so rank queries cost one pass.
class Echelon {
public:
    /// Returns true when the row was independent of the previous ones.
    bool insert(SparseRow row);
    /// Remainder of the row modulo the current span (empty iff it lies in it).
    SparseRow reduce(SparseRow row) const;
    int rank() const { return static_cast<int>(pivots_.size()); }

private:
    std::map<int, SparseRow> pivots_;  // pivot column -> row with pivot coeff 1
};

using QMatrix = std::vector<std::vector<Rational>>;

int rank(const QMatrix& m);
/// Basis of {v : m v = 0}.
std::vector<std::vector<Rational>> nullspace(const QMatrix& m, int ncols);

/// Matrix with polynomial entries, rows x cols.
using PolyMatrix = std::vector<std::vector<Poly>>;

/// Rank over the fraction field of the coefficient ring, by fraction-free
/// Gauss-Jordan elimination.
int generic_rank(const PolyMatrix& m);

/// Basis of the right kernel of m over the fraction field, scaled to have
/// polynomial entries.
std::vector<std::vector<Poly>> generic_kernel(const PolyMatrix& m, const RingPtr& ring, int ncols);

}  // namespace primring
