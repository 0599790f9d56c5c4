#include "primring/linalg.hpp"

#include <stdexcept>

namespace primring {

SparseRow Echelon::reduce(SparseRow row) const {
    SparseRow out;
    while (!row.empty()) {
        auto it = row.begin();
        auto piv = pivots_.find(it->first);
        if (piv == pivots_.end()) {
            out.insert(*it);
            row.erase(it);
            continue;
        }
        Rational c = it->second;
        for (const auto& [col, val] : piv->second) {
            Rational& slot = row[col];
            slot -= c * val;
            if (slot.is_zero()) row.erase(col);
        }
    }
    return out;
}

bool Echelon::insert(SparseRow row) {
    SparseRow r = reduce(std::move(row));
    if (r.empty()) return false;
    Rational inv = r.begin()->second.inverse();
    for (auto& [col, val] : r) val *= inv;
    int pc = r.begin()->first;
    pivots_.emplace(pc, std::move(r));
    return true;
}

int rank(const QMatrix& m) {
    Echelon e;
    for (const auto& row : m) {
        SparseRow s;
        for (size_t j = 0; j < row.size(); ++j)
            if (!row[j].is_zero()) s.emplace(static_cast<int>(j), row[j]);
        e.insert(std::move(s));
    }
    return e.rank();
}

std::vector<std::vector<Rational>> nullspace(const QMatrix& m, int ncols) {
    QMatrix a = m;
    std::vector<int> pivcol;
    size_t r = 0;
    for (int c = 0; c < ncols && r < a.size(); ++c) {
        size_t p = r;
        while (p < a.size() && a[p][static_cast<size_t>(c)].is_zero()) ++p;
        if (p == a.size()) continue;
        std::swap(a[p], a[r]);
        Rational inv = a[r][static_cast<size_t>(c)].inverse();
        for (auto& v : a[r]) v *= inv;
        for (size_t i = 0; i < a.size(); ++i) {
            if (i == r || a[i][static_cast<size_t>(c)].is_zero()) continue;
            Rational f = a[i][static_cast<size_t>(c)];
            for (size_t j = 0; j < static_cast<size_t>(ncols); ++j) a[i][j] -= f * a[r][j];
        }
        pivcol.push_back(c);
        ++r;
    }
    std::vector<std::vector<Rational>> basis;
    std::vector<bool> is_piv(static_cast<size_t>(ncols), false);
    for (int c : pivcol) is_piv[static_cast<size_t>(c)] = true;
    for (int f = 0; f < ncols; ++f) {
        if (is_piv[static_cast<size_t>(f)]) continue;
        std::vector<Rational> v(static_cast<size_t>(ncols), Rational(0));
        v[static_cast<size_t>(f)] = 1;
        for (size_t i = 0; i < pivcol.size(); ++i) v[static_cast<size_t>(pivcol[i])] = -a[i][static_cast<size_t>(f)];
        basis.push_back(std::move(v));
    }
    return basis;
}

namespace {

struct FfResult {
    PolyMatrix a;
    std::vector<int> pivcol;
    Poly det;
};

// Fraction-free Gauss-Jordan: every division by the previous pivot is exact.
FfResult fraction_free_gauss_jordan(PolyMatrix a, const RingPtr& ring, int ncols) {
    FfResult res;
    Poly prev = Poly::constant(ring, 1);
    size_t k = 0;
    for (int c = 0; c < ncols && k < a.size(); ++c) {
        size_t p = k;
        while (p < a.size() && a[p][static_cast<size_t>(c)].is_zero()) ++p;
        if (p == a.size()) continue;
        std::swap(a[p], a[k]);
        Poly piv = a[k][static_cast<size_t>(c)];
        for (size_t i = 0; i < a.size(); ++i) {
            if (i == k) continue;
            Poly f = a[i][static_cast<size_t>(c)];
            for (size_t j = 0; j < static_cast<size_t>(ncols); ++j) {
                Poly num = piv * a[i][j] - f * a[k][j];
                auto q = divide_exact(num, prev);
                if (!q) throw std::logic_error("fraction-free elimination: inexact division");
                a[i][j] = std::move(*q);
            }
        }
        prev = piv;
        res.pivcol.push_back(c);
        ++k;
    }
    res.a = std::move(a);
    res.det = prev;
    return res;
}

}  // namespace

int generic_rank(const PolyMatrix& m) {
    if (m.empty()) return 0;
    RingPtr ring;
    for (const auto& row : m)
        for (const auto& e : row)
            if (e.ring()) ring = e.ring();
    if (!ring) return 0;
    return static_cast<int>(fraction_free_gauss_jordan(m, ring, static_cast<int>(m[0].size())).pivcol.size());
}

std::vector<std::vector<Poly>> generic_kernel(const PolyMatrix& m, const RingPtr& ring, int ncols) {
    PolyMatrix a = m;
    for (auto& row : a)
        for (auto& e : row)
            if (!e.ring()) e = Poly(ring);
    FfResult ff = fraction_free_gauss_jordan(a, ring, ncols);
    std::vector<bool> is_piv(static_cast<size_t>(ncols), false);
    for (size_t i = 0; i < ff.pivcol.size(); ++i) {
        is_piv[static_cast<size_t>(ff.pivcol[i])] = true;
        if (!(ff.a[i][static_cast<size_t>(ff.pivcol[i])] == ff.det))
            throw std::logic_error("fraction-free elimination: unequal pivots");
    }
    std::vector<std::vector<Poly>> basis;
    for (int f = 0; f < ncols; ++f) {
        if (is_piv[static_cast<size_t>(f)]) continue;
        std::vector<Poly> v(static_cast<size_t>(ncols), Poly(ring));
        v[static_cast<size_t>(f)] = ff.det;
        for (size_t i = 0; i < ff.pivcol.size(); ++i)
            v[static_cast<size_t>(ff.pivcol[i])] = -ff.a[i][static_cast<size_t>(f)];
        basis.push_back(std::move(v));
    }
    for (const auto& v : basis)
        for (const auto& row : m) {
            Poly s(ring);
            for (size_t j = 0; j < v.size(); ++j) s += row[j] * v[j];
            if (!s.is_zero()) throw std::logic_error("generic_kernel: vector not in kernel");
        }
    return basis;
}

}  // namespace primring
