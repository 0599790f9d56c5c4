#include "primring/groebner.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>

namespace primring {

namespace {
std::atomic<bool> g_verify{false};
}

void set_verify(bool on) { g_verify = on; }
bool verify_enabled() { return g_verify; }

Vec zero_vec(const RingPtr& ring, int rank) { return Vec(static_cast<size_t>(rank), Poly(ring)); }

Vec unit_vec(const RingPtr& ring, int rank, int j) {
    Vec v = zero_vec(ring, rank);
    v[static_cast<size_t>(j)] = Poly::constant(ring, 1);
    return v;
}

bool is_zero(const Vec& v) {
    return std::all_of(v.begin(), v.end(), [](const Poly& p) { return p.is_zero(); });
}

Vec operator+(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("vector rank mismatch");
    Vec r = a;
    for (size_t i = 0; i < r.size(); ++i) r[i] += b[i];
    return r;
}

Vec operator-(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("vector rank mismatch");
    Vec r = a;
    for (size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
    return r;
}

Vec operator*(const Poly& c, const Vec& v) {
    Vec r = v;
    for (auto& p : r) p = c * p;
    return r;
}

std::string to_string(const Vec& v) {
    std::string s = "(";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) s += ", ";
        s += v[i].to_string();
    }
    return s + ")";
}

Poly substitute_zero(const Poly& f, int var) {
    return f.filtered([var](const Monomial& m) { return m[var] == 0; });
}

Vec substitute_zero(const Vec& v, int var) {
    Vec r;
    r.reserve(v.size());
    for (const auto& p : v) r.push_back(substitute_zero(p, var));
    return r;
}

// ---------------------------------------------------------------------------

namespace {

using Terms = std::vector<MTerm>;

int sugar_of(const Terms& f) {
    int d = 0;
    for (const auto& t : f) d = std::max(d, t.mono.total_degree());
    return d;
}

struct Engine {
    ModuleOrder ord;
    Truncation trunc;
    bool product_criterion = false;

    bool dropped(const Monomial& m) const { return trunc.active() && m[trunc.var] >= trunc.power; }

    // h[from..] - c * m * g
    Terms axpy(const Terms& h, size_t from, const Rational& c, const Monomial& m, const Terms& g) const {
        Terms out;
        out.reserve(h.size() - from + g.size());
        size_t i = from, j = 0;
        while (i < h.size() || j < g.size()) {
            if (j == g.size()) {
                out.push_back(h[i++]);
                continue;
            }
            Monomial gm = g[j].mono * m;
            if (dropped(gm)) {
                ++j;
                continue;
            }
            int cmp = i == h.size() ? -1 : ord.compare(h[i].mono, h[i].comp, gm, g[j].comp);
            if (cmp > 0) {
                out.push_back(h[i++]);
            } else if (cmp < 0) {
                out.push_back({gm, g[j].comp, -(c * g[j].coeff)});
                ++j;
            } else {
                Rational s = h[i].coeff - c * g[j].coeff;
                if (!s.is_zero()) out.push_back({gm, h[i].comp, std::move(s)});
                ++i;
                ++j;
            }
        }
        return out;
    }

    Terms times(const Terms& g, const Monomial& m) const {
        Terms out;
        out.reserve(g.size());
        for (const auto& t : g) {
            Monomial p = t.mono * m;
            if (!dropped(p)) out.push_back({p, t.comp, t.coeff});
        }
        return out;
    }

    static void make_monic(Terms& f) {
        if (f.empty() || f.front().coeff.is_one()) return;
        Rational inv = f.front().coeff.inverse();
        for (auto& t : f) t.coeff *= inv;
    }

    // Full reduction by the polynomials listed in `by` (all monic).
    Terms reduce(Terms h, const std::vector<Terms>& polys, const std::vector<int>& by) const {
        Terms result;
        size_t pos = 0;
        while (pos < h.size()) {
            const MTerm& lt = h[pos];
            if (dropped(lt.mono)) {
                h.erase(h.begin() + static_cast<std::ptrdiff_t>(pos));
                continue;
            }
            int found = -1;
            for (int k : by) {
                const MTerm& gl = polys[static_cast<size_t>(k)].front();
                if (gl.comp == lt.comp && gl.mono.divides(lt.mono)) {
                    found = k;
                    break;
                }
            }
            if (found < 0) {
                result.push_back(lt);
                ++pos;
                continue;
            }
            const Terms& g = polys[static_cast<size_t>(found)];
            Rational c = lt.coeff;
            Monomial q = lt.mono / g.front().mono;
            h = axpy(h, pos, c, q, g);
            pos = 0;
        }
        return result;
    }
};

struct Pair {
    int i;
    int j;  // -1: pending input stored in `input`
    Monomial lcm;
    int comp;
    int sugar;
    Terms input;
};

class Buchberger {
public:
    explicit Buchberger(Engine eng) : eng_(std::move(eng)) {}

    void add_input(Terms f) {
        if (f.empty()) return;
        Engine::make_monic(f);
        Pair p{-1, -1, f.front().mono, f.front().comp, sugar_of(f), std::move(f)};
        pairs_.push_back(std::move(p));
    }

    // Adds an element straight to the basis (used for the t^n generators,
    // which must not be reduced inside the truncated arithmetic).
    void seed(Terms f) {
        Engine::make_monic(f);
        int s = sugar_of(f);
        add(std::move(f), s);
    }

    void run() {
        while (!pairs_.empty()) {
            size_t best = 0;
            for (size_t k = 1; k < pairs_.size(); ++k) {
                const Pair& a = pairs_[k];
                const Pair& b = pairs_[best];
                if (a.sugar != b.sugar) {
                    if (a.sugar < b.sugar) best = k;
                    continue;
                }
                if (eng_.ord.compare(a.lcm, a.comp, b.lcm, b.comp) < 0) best = k;
            }
            Pair p = std::move(pairs_[best]);
            pairs_.erase(pairs_.begin() + static_cast<std::ptrdiff_t>(best));
            Terms s;
            if (p.j < 0) {
                s = std::move(p.input);
            } else {
                const Terms& gi = polys_[static_cast<size_t>(p.i)];
                const Terms& gj = polys_[static_cast<size_t>(p.j)];
                s = eng_.times(gi, p.lcm / gi.front().mono);
                s = eng_.axpy(s, 0, Rational(1), p.lcm / gj.front().mono, gj);
            }
            if (s.empty()) continue;
            Terms h = eng_.reduce(std::move(s), polys_, active_list());
            if (h.empty()) continue;
            Engine::make_monic(h);
            add(std::move(h), p.sugar);
        }
    }

    std::vector<Terms> reduced_basis() const {
        std::vector<int> act = active_list();
        std::vector<Terms> out;
        out.reserve(act.size());
        for (int k : act) {
            std::vector<int> others;
            for (int o : act)
                if (o != k) others.push_back(o);
            const Terms& src = polys_[static_cast<size_t>(k)];
            Terms g{src.front()};
            Terms tail = eng_.reduce(Terms(src.begin() + 1, src.end()), polys_, others);
            g.insert(g.end(), tail.begin(), tail.end());
            out.push_back(std::move(g));
        }
        std::sort(out.begin(), out.end(), [&](const Terms& a, const Terms& b) {
            return eng_.ord.compare(a.front(), b.front()) > 0;
        });
        return out;
    }

private:
    std::vector<int> active_list() const {
        std::vector<int> r;
        for (size_t k = 0; k < polys_.size(); ++k)
            if (active_[k]) r.push_back(static_cast<int>(k));
        return r;
    }

    const MTerm& lead(int k) const { return polys_[static_cast<size_t>(k)].front(); }

    void add(Terms h, int sugar) {
        int hi = static_cast<int>(polys_.size());
        polys_.push_back(std::move(h));
        sugars_.push_back(sugar);
        active_.push_back(false);
        const MTerm& lh = lead(hi);

        struct Cand {
            int g;
            Monomial lcm;
            bool coprime;
        };
        std::vector<Cand> cands;
        for (size_t g = 0; g < active_.size(); ++g) {
            if (!active_[g] || lead(static_cast<int>(g)).comp != lh.comp) continue;
            const Monomial& lg = lead(static_cast<int>(g)).mono;
            cands.push_back({static_cast<int>(g), lcm(lg, lh.mono), coprime(lg, lh.mono)});
        }
        std::vector<Cand> kept;
        for (size_t a = 0; a < cands.size(); ++a) {
            const Cand& p = cands[a];
            bool keep = eng_.product_criterion && p.coprime;
            if (!keep) {
                keep = true;
                for (size_t b = a + 1; b < cands.size() && keep; ++b)
                    if (cands[b].lcm.divides(p.lcm)) keep = false;
                for (size_t b = 0; b < kept.size() && keep; ++b)
                    if (kept[b].lcm.divides(p.lcm)) keep = false;
            }
            if (keep) kept.push_back(p);
        }

        // Chain criterion on existing pairs.
        std::erase_if(pairs_, [&](const Pair& p) {
            if (p.j < 0 || p.comp != lh.comp) return false;
            if (!lh.mono.divides(p.lcm)) return false;
            Monomial li = lcm(lead(p.i).mono, lh.mono);
            Monomial lj = lcm(lead(p.j).mono, lh.mono);
            return !(li == p.lcm) && !(lj == p.lcm);
        });

        for (const Cand& c : kept) {
            if (eng_.product_criterion && c.coprime) continue;
            const Terms& gg = polys_[static_cast<size_t>(c.g)];
            int s = std::max(sugars_[static_cast<size_t>(c.g)] + (c.lcm / gg.front().mono).total_degree(),
                             sugar + (c.lcm / lh.mono).total_degree());
            pairs_.push_back({c.g, hi, c.lcm, lh.comp, s, {}});
        }

        for (size_t g = 0; g < active_.size(); ++g) {
            if (!active_[g]) continue;
            const MTerm& lg = lead(static_cast<int>(g));
            if (lg.comp == lh.comp && lh.mono.divides(lg.mono)) active_[g] = false;
        }
        active_[static_cast<size_t>(hi)] = true;
    }

    Engine eng_;
    std::vector<Terms> polys_;
    std::vector<int> sugars_;
    std::vector<bool> active_;
    std::vector<Pair> pairs_;
};

}  // namespace

// ---------------------------------------------------------------------------

std::vector<MTerm> GroebnerBasis::to_terms(const Vec& v) const {
    if (static_cast<int>(v.size()) != rank_) throw std::invalid_argument("vector rank differs from basis rank");
    Terms out;
    for (size_t j = 0; j < v.size(); ++j) {
        if (!v[j].is_zero() && ring_ && !(*v[j].ring() == *ring_))
            throw std::invalid_argument("vector entry lives in a different ring");
        for (const auto& t : v[j].terms()) out.push_back({t.mono, static_cast<int>(j), t.coeff});
    }
    std::sort(out.begin(), out.end(), [&](const MTerm& a, const MTerm& b) { return order_.compare(a, b) > 0; });
    return out;
}

Vec GroebnerBasis::to_vec(const std::vector<MTerm>& terms) const {
    std::vector<std::vector<Term>> parts(static_cast<size_t>(rank_));
    for (const auto& t : terms) parts[static_cast<size_t>(t.comp)].push_back({t.mono, t.coeff});
    Vec v;
    v.reserve(parts.size());
    for (auto& p : parts) v.push_back(Poly::from_terms(ring_, std::move(p)));
    return v;
}

std::vector<MTerm> GroebnerBasis::reduce_terms(std::vector<MTerm> f) const {
    Engine eng{order_, {}, false};
    std::vector<int> all(elems_.size());
    for (size_t k = 0; k < all.size(); ++k) all[k] = static_cast<int>(k);
    return eng.reduce(std::move(f), elems_, all);
}

Vec GroebnerBasis::normal_form(const Vec& f) const { return to_vec(reduce_terms(to_terms(f))); }

std::vector<Vec> GroebnerBasis::generators() const {
    std::vector<Vec> out;
    for (const auto& e : elems_) out.push_back(to_vec(e));
    return out;
}

std::vector<GroebnerBasis::Lead> GroebnerBasis::leads() const {
    std::vector<Lead> out;
    for (const auto& e : elems_) out.push_back({e.front().mono, e.front().comp});
    return out;
}

bool GroebnerBasis::is_unit_ideal() const {
    for (const auto& e : elems_)
        if (e.front().mono.is_one() && rank_ == 1) return true;
    return false;
}

bool GroebnerBasis::satisfies_buchberger_criterion() const {
    Engine eng{order_, {}, false};
    for (size_t i = 0; i < elems_.size(); ++i)
        for (size_t j = i + 1; j < elems_.size(); ++j) {
            const MTerm& a = elems_[i].front();
            const MTerm& b = elems_[j].front();
            if (a.comp != b.comp) continue;
            Monomial l = lcm(a.mono, b.mono);
            Terms s = eng.times(elems_[i], l / a.mono);
            Rational ca = b.coeff, cb = a.coeff;
            for (auto& t : s) t.coeff *= ca;
            s = eng.axpy(s, 0, cb, l / b.mono, elems_[j]);
            if (!reduce_terms(std::move(s)).empty()) return false;
        }
    return true;
}

GroebnerBasis groebner_basis(const RingPtr& ring, int rank, const std::vector<Vec>& gens, const GbOptions& opts) {
    if (rank < 0) throw std::invalid_argument("negative rank");
    std::vector<int> block = opts.block.empty() ? std::vector<int>(static_cast<size_t>(rank), 0) : opts.block;
    if (static_cast<int>(block.size()) != rank) throw std::invalid_argument("block vector length differs from rank");

    GroebnerBasis gb;
    gb.ring_ = ring;
    gb.rank_ = rank;
    gb.order_ = ModuleOrder(ring, block);

    Engine eng{gb.order_, opts.trunc, rank == 1};
    Buchberger bb(eng);
    for (const Vec& g : gens) {
        Terms t = gb.to_terms(g);
        if (opts.trunc.active())
            std::erase_if(t, [&](const MTerm& m) { return m.mono[opts.trunc.var] >= opts.trunc.power; });
        bb.add_input(std::move(t));
    }
    if (opts.trunc.active()) {
        Monomial tn;
        tn[opts.trunc.var] = static_cast<int16_t>(opts.trunc.power);
        for (int j = 0; j < rank; ++j) bb.seed({MTerm{tn, j, Rational(1)}});
    }
    bb.run();
    gb.elems_ = bb.reduced_basis();

    if (verify_enabled()) {
        for (const Vec& g : gens)
            if (!gb.contains(g)) throw std::logic_error("groebner_basis: input generator not in computed span");
    }
    return gb;
}

GroebnerBasis ideal_basis(const RingPtr& ring, const std::vector<Poly>& gens, Truncation trunc) {
    std::vector<Vec> vs;
    for (const auto& g : gens) vs.push_back(Vec{g});
    GbOptions o;
    o.trunc = trunc;
    return groebner_basis(ring, 1, vs, o);
}

Poly normal_form(const Poly& f, const GroebnerBasis& gb) { return gb.normal_form(Vec{f})[0]; }

namespace {

GroebnerBasis augmented_basis(const RingPtr& ring, int rank, const std::vector<Vec>& images,
                              const std::vector<Vec>& mod, Truncation trunc) {
    int s = static_cast<int>(images.size());
    std::vector<Vec> gens;
    gens.reserve(images.size() + mod.size());
    for (int i = 0; i < s; ++i) {
        const Vec& im = images[static_cast<size_t>(i)];
        if (static_cast<int>(im.size()) != rank) throw std::invalid_argument("image rank mismatch");
        Vec g = im;
        g.resize(static_cast<size_t>(rank + s), Poly(ring));
        g[static_cast<size_t>(rank + i)] = Poly::constant(ring, 1);
        gens.push_back(std::move(g));
    }
    for (const Vec& m : mod) {
        if (static_cast<int>(m.size()) != rank) throw std::invalid_argument("relation rank mismatch");
        Vec g = m;
        g.resize(static_cast<size_t>(rank + s), Poly(ring));
        gens.push_back(std::move(g));
    }
    GbOptions o;
    o.block.assign(static_cast<size_t>(rank + s), 1);
    std::fill(o.block.begin(), o.block.begin() + rank, 0);
    o.trunc = trunc;
    return groebner_basis(ring, rank + s, gens, o);
}

}  // namespace

std::vector<Vec> kernel_mod(const RingPtr& ring, int rank, const std::vector<Vec>& images,
                            const std::vector<Vec>& mod, Truncation trunc) {
    int s = static_cast<int>(images.size());
    if (s == 0) return {};
    GroebnerBasis gb = augmented_basis(ring, rank, images, mod, trunc);
    std::vector<Vec> out;
    for (const auto& e : gb.raw()) {
        if (e.front().comp < rank) continue;
        Vec v = zero_vec(ring, s);
        std::vector<std::vector<Term>> parts(static_cast<size_t>(s));
        for (const auto& t : e) {
            if (trunc.active() && t.mono[trunc.var] >= trunc.power) continue;
            parts[static_cast<size_t>(t.comp - rank)].push_back({t.mono, t.coeff});
        }
        for (int i = 0; i < s; ++i) v[static_cast<size_t>(i)] = Poly::from_terms(ring, std::move(parts[static_cast<size_t>(i)]));
        if (!is_zero(v)) out.push_back(std::move(v));
    }
    if (verify_enabled()) {
        GbOptions o;
        o.trunc = trunc;
        GroebnerBasis modgb = groebner_basis(ring, rank, mod, o);
        for (const Vec& c : out) {
            Vec sum = zero_vec(ring, rank);
            for (int i = 0; i < s; ++i) sum = sum + c[static_cast<size_t>(i)] * images[static_cast<size_t>(i)];
            if (!modgb.contains(sum)) throw std::logic_error("kernel_mod: returned element is not in the kernel");
        }
    }
    return out;
}

std::vector<Vec> syzygy_basis(const RingPtr& ring, int rank, const std::vector<Vec>& gens, Truncation trunc) {
    return kernel_mod(ring, rank, gens, {}, trunc);
}

Lifter::Lifter(const RingPtr& ring, int rank, std::vector<Vec> images, std::vector<Vec> mod, Truncation trunc)
    : ring_(ring), rank_(rank), nimages_(static_cast<int>(images.size())),
      gb_(augmented_basis(ring, rank, images, mod, trunc)) {}

std::optional<Vec> Lifter::lift(const Vec& v) const {
    Vec ext = v;
    ext.resize(static_cast<size_t>(rank_ + nimages_), Poly(ring_));
    Vec r = gb_.normal_form(ext);
    for (int j = 0; j < rank_; ++j)
        if (!r[static_cast<size_t>(j)].is_zero()) return std::nullopt;
    Vec c;
    for (int i = 0; i < nimages_; ++i) c.push_back(-r[static_cast<size_t>(rank_ + i)]);
    return c;
}

}  // namespace primring
