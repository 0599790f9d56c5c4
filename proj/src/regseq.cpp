#include "primring/regseq.hpp"

#include <stdexcept>

namespace primring {

namespace {

struct Ladder {
    bool regular = true;
    int index = 0;
    std::optional<Poly> witness;
};

std::vector<Vec> as_vecs(const std::vector<Poly>& ps) {
    std::vector<Vec> out;
    for (const auto& p : ps) out.push_back({p});
    return out;
}

Ladder ladder(const TruncRing& R, const std::vector<Poly>& xs) {
    Ladder out;
    for (size_t k = 0; k < xs.size(); ++k) {
        std::vector<Poly> prev(xs.begin(), xs.begin() + static_cast<long>(k));
        auto I = as_vecs(prev);
        auto Q = kernel_mod(R.ring(), 1, {Vec{xs[k]}}, I, R.trunc());
        if (contained(R, 1, Q, I)) continue;
        out.regular = false;
        out.index = static_cast<int>(k) + 1;
        auto gb = groebner_basis(R.ring(), 1, I, {{}, R.trunc()});
        for (const auto& q : Q) {
            Poly a = R.reduce(q[0]);
            if (contained(R, 1, {Vec{a}}, I)) continue;
            if (!out.witness || a.size() < out.witness->size() ||
                (a.size() == out.witness->size() && a.degree() < out.witness->degree()))
                out.witness = a;
        }
        if (!out.witness) throw std::logic_error("no ideal-quotient witness");
        if (!gb.contains({R.reduce(*out.witness * xs[k])})) throw std::logic_error("witness fails");
        return out;
    }
    return out;
}

}  // namespace

SequenceReport is_regular_sequence(const std::vector<TruncElem>& seq) {
    if (seq.empty()) throw std::invalid_argument("empty sequence");
    const TruncRing& R = seq.front().ring();
    SequenceReport rep;
    rep.elements = seq;
    std::vector<Poly> full;
    for (const auto& e : seq) {
        if (!(e.ring() == R)) throw std::invalid_argument("sequence elements over different rings");
        full.push_back(e.to_poly());
        rep.reductions.push_back(e.coeff(0));
    }
    Ladder base = ladder(R.with_n(1), rep.reductions);
    Ladder direct = ladder(R, full);
    rep.verdict_base = base.regular;
    rep.verdict_direct = direct.regular;
    if (base.regular != direct.regular) throw std::logic_error("regularity criteria disagree");
    rep.verdict = direct.regular;
    rep.failure_index = direct.index;
    rep.witness = direct.witness;
    return rep;
}

bool shadow_membership(const Poly& y, const std::vector<TruncElem>& seq) {
    auto rep = is_regular_sequence(seq);
    if (!rep.verdict) throw std::invalid_argument("sequence is not regular");
    const TruncRing& R = seq.front().ring();
    if (y.degree_in(R.t_var()) > 0) throw std::invalid_argument("y must not involve t");
    std::vector<Poly> full;
    for (const auto& e : seq) full.push_back(e.to_poly());
    Poly shadow = R.reduce(R.t().pow(R.n() - 1) * y);
    bool in_I = contained(R, 1, {Vec{shadow}}, as_vecs(full));
    bool in_I0 = contained(R.with_n(1), 1, {Vec{y}}, as_vecs(rep.reductions));
    if (in_I != in_I0) throw std::logic_error("shadow membership criteria disagree");
    return in_I;
}

PresMod balanced_ideal(const std::vector<TruncElem>& seq) {
    auto rep = is_regular_sequence(seq);
    if (!rep.verdict) throw std::invalid_argument("sequence is not regular");
    std::vector<Poly> gens;
    for (const auto& e : seq) gens.push_back(e.to_poly());
    PresMod I = PresMod::ideal(seq.front().ring(), gens);
    if (!is_balanced(I).balanced) throw std::logic_error("ideal of a regular sequence is not balanced");
    return I;
}

}  // namespace primring
