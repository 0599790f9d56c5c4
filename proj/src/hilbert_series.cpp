#include "primring/hilbert_series.hpp"

#include "primring/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace primring {

namespace {

using Laurent = std::map<int, long long>;

void add_into(Laurent& a, const Laurent& b, long long sign = 1, int shift = 0) {
    for (const auto& [e, c] : b) {
        long long& s = a[e + shift];
        s += sign * c;
        if (s == 0) a.erase(e + shift);
    }
}

Laurent mul(const Laurent& a, const Laurent& b) {
    Laurent r;
    for (const auto& [ea, ca] : a)
        for (const auto& [eb, cb] : b) {
            long long& s = r[ea + eb];
            s += ca * cb;
        }
    std::erase_if(r, [](const auto& kv) { return kv.second == 0; });
    return r;
}

Laurent one_minus(int w) {
    Laurent r{{0, 1}};
    add_into(r, Laurent{{w, 1}}, -1);
    return r;
}

int weighted(const Monomial& m, const std::vector<int>& vars, const std::vector<int>& weights) {
    int d = 0;
    for (int v : vars) d += m[v] * weights[static_cast<size_t>(v)];
    return d;
}

std::vector<Monomial> minimize(std::vector<Monomial> g) {
    std::sort(g.begin(), g.end(), [](const Monomial& a, const Monomial& b) { return a.total_degree() < b.total_degree(); });
    std::vector<Monomial> out;
    for (const auto& m : g) {
        bool red = false;
        for (const auto& o : out)
            if (o.divides(m)) {
                red = true;
                break;
            }
        if (!red) out.push_back(m);
    }
    return out;
}

Laurent numerator_rec(std::vector<Monomial> gens, const std::vector<int>& vars, const std::vector<int>& weights) {
    gens = minimize(std::move(gens));
    if (gens.empty()) return Laurent{{0, 1}};
    for (const auto& g : gens)
        if (g.is_one()) return Laurent{};
    bool pairwise_coprime = true;
    for (size_t i = 0; i < gens.size() && pairwise_coprime; ++i)
        for (size_t j = i + 1; j < gens.size(); ++j)
            if (!coprime(gens[i], gens[j])) {
                pairwise_coprime = false;
                break;
            }
    if (pairwise_coprime) {
        Laurent r{{0, 1}};
        for (const auto& g : gens) r = mul(r, one_minus(weighted(g, vars, weights)));
        return r;
    }
    // Pivot on the variable present in most generators.
    int best = -1, count = 0;
    for (int v : vars) {
        int c = 0;
        for (const auto& g : gens)
            if (g[v] > 0) ++c;
        if (c > count) {
            count = c;
            best = v;
        }
    }
    std::vector<int> exps;
    for (const auto& g : gens) {
        if (g[best] == 0) continue;
        Monomial rest = g;
        rest[best] = 0;
        if (!rest.is_one()) exps.push_back(g[best]);
    }
    std::sort(exps.begin(), exps.end());
    int e = exps[exps.size() / 2];
    Monomial p;
    p[best] = static_cast<int16_t>(e);

    std::vector<Monomial> plus = gens;
    plus.push_back(p);
    std::vector<Monomial> colon;
    for (const auto& g : gens) colon.push_back(lcm(g, p) / p);
    Laurent r = numerator_rec(std::move(plus), vars, weights);
    add_into(r, numerator_rec(std::move(colon), vars, weights), 1, e * weights[static_cast<size_t>(best)]);
    return r;
}

}  // namespace

HilbertSeries::HilbertSeries(std::map<int, long long> numerator, std::vector<int> denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
    std::erase_if(num_, [](const auto& kv) { return kv.second == 0; });
    std::sort(den_.begin(), den_.end());
}

long long HilbertSeries::coefficient(int d) const {
    if (num_.empty()) return 0;
    int lo = num_.begin()->first;
    if (d < lo) return 0;
    int span = d - lo;
    // c[k] = number of monomials of degree k in the denominator variables.
    std::vector<long long> c(static_cast<size_t>(span) + 1, 0);
    c[0] = 1;
    for (int w : den_) {
        if (w <= 0) throw std::invalid_argument("Hilbert series needs positive denominator weights");
        for (int k = w; k <= span; ++k) c[static_cast<size_t>(k)] += c[static_cast<size_t>(k - w)];
    }
    long long total = 0;
    for (const auto& [e, coef] : num_)
        if (e <= d) total += coef * c[static_cast<size_t>(d - e)];
    return total;
}

HilbertSeries HilbertSeries::shifted(int s) const {
    std::map<int, long long> n;
    for (const auto& [e, c] : num_) n[e + s] = c;
    return HilbertSeries(std::move(n), den_);
}

HilbertSeries HilbertSeries::with_denominator(const std::vector<int>& den) const {
    // den must contain den_ as a multiset
    std::vector<int> extra;
    std::vector<int> mine = den_;
    for (int w : den) {
        auto it = std::find(mine.begin(), mine.end(), w);
        if (it != mine.end()) mine.erase(it);
        else extra.push_back(w);
    }
    if (!mine.empty()) throw std::logic_error("denominator is not a multiple");
    Laurent n = num_;
    for (int w : extra) n = mul(n, one_minus(w));
    return HilbertSeries(std::move(n), den);
}

namespace {
std::vector<int> common_den(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> r = a, rest = b;
    for (int w : a) {
        auto it = std::find(rest.begin(), rest.end(), w);
        if (it != rest.end()) rest.erase(it);
    }
    r.insert(r.end(), rest.begin(), rest.end());
    std::sort(r.begin(), r.end());
    return r;
}
}  // namespace

HilbertSeries operator+(const HilbertSeries& a, const HilbertSeries& b) {
    auto d = common_den(a.den_, b.den_);
    HilbertSeries x = a.with_denominator(d), y = b.with_denominator(d);
    add_into(x.num_, y.num_);
    return x;
}

HilbertSeries operator-(const HilbertSeries& a, const HilbertSeries& b) {
    auto d = common_den(a.den_, b.den_);
    HilbertSeries x = a.with_denominator(d), y = b.with_denominator(d);
    add_into(x.num_, y.num_, -1);
    return x;
}

bool operator==(const HilbertSeries& a, const HilbertSeries& b) { return (a - b).num_.empty(); }

std::string HilbertSeries::to_string() const {
    std::string n;
    if (num_.empty()) n = "0";
    for (auto it = num_.rbegin(); it != num_.rend(); ++it) {
        auto [e, c] = *it;
        if (!n.empty()) n += c < 0 ? "-" : "+";
        else if (c < 0) n += "-";
        long long a = c < 0 ? -c : c;
        std::string mono = e == 0 ? "" : (e == 1 ? "z" : "z^" + (e < 0 ? "(" + std::to_string(e) + ")" : std::to_string(e)));
        if (mono.empty()) n += std::to_string(a);
        else if (a == 1) n += mono;
        else n += std::to_string(a) + "*" + mono;
    }
    if (den_.empty()) return n;
    std::map<int, int> counts;
    for (int w : den_) ++counts[w];
    std::string d;
    for (const auto& [w, k] : counts) {
        if (!d.empty()) d += "*";
        d += "(1-" + std::string(w == 1 ? "z" : "z^" + std::to_string(w)) + ")";
        if (k > 1) d += "^" + std::to_string(k);
    }
    return "(" + n + ")/(" + d + ")";
}

std::map<int, long long> monomial_ideal_numerator(std::vector<Monomial> gens, const std::vector<int>& vars,
                                                   const std::vector<int>& weights) {
    for (int v : vars)
        if (weights[static_cast<size_t>(v)] <= 0)
            throw std::invalid_argument("Hilbert series needs positive weights on the base variables");
    return numerator_rec(std::move(gens), vars, weights);
}

HilbertSeries hilbert_series(const GroebnerBasis& gb, const std::vector<int>& comp_degrees, int t_var, int n) {
    const PolyRing& ring = *gb.ring();
    const auto& w = ring.weights();
    if (static_cast<int>(comp_degrees.size()) != gb.rank())
        throw std::invalid_argument("hilbert_series: one degree per component required");
    std::vector<int> vars;
    for (int v = 0; v < ring.nvars(); ++v)
        if (v != t_var) vars.push_back(v);
    for (int v : vars)
        if (w[static_cast<size_t>(v)] <= 0)
            throw std::invalid_argument("hilbert_series: module is not positively graded on the base variables");
    if (t_var >= 0 && n <= 0) throw std::invalid_argument("hilbert_series: t-truncation required");
    int kmax = t_var >= 0 ? n : 1;
    int wt = t_var >= 0 ? w[static_cast<size_t>(t_var)] : 0;
    auto leads = gb.leads();
    Laurent total;
    for (int j = 0; j < gb.rank(); ++j)
        for (int k = 0; k < kmax; ++k) {
            std::vector<Monomial> gens;
            for (const auto& l : leads) {
                if (l.comp != j) continue;
                if (t_var >= 0 && l.mono[t_var] > k) continue;
                Monomial m = l.mono;
                if (t_var >= 0) m[t_var] = 0;
                gens.push_back(m);
            }
            Laurent part = numerator_rec(std::move(gens), vars, w);
            add_into(total, part, 1, comp_degrees[static_cast<size_t>(j)] + k * wt);
        }
    std::vector<int> den;
    for (int v : vars) den.push_back(w[static_cast<size_t>(v)]);
    return HilbertSeries(std::move(total), std::move(den));
}

std::vector<Monomial> monomials_of_degree(const std::vector<int>& vars, const std::vector<int>& weights, int d) {
    std::vector<Monomial> out;
    if (d < 0) return out;
    Monomial cur;
    auto rec = [&](auto&& self, size_t idx, int left) -> void {
        if (idx == vars.size()) {
            if (left == 0) out.push_back(cur);
            return;
        }
        int v = vars[idx];
        int wv = weights[static_cast<size_t>(v)];
        for (int e = 0; e * wv <= left; ++e) {
            cur[v] = static_cast<int16_t>(e);
            self(self, idx + 1, left - e * wv);
        }
        cur[v] = 0;
    };
    rec(rec, 0, d);
    return out;
}

long long hilbert_function_dense(const RingPtr& ring, int rank, const std::vector<Vec>& rels,
                                 const std::vector<int>& comp_degrees, int t_var, int n, int d) {
    const auto& w = ring->weights();
    std::vector<int> vars;
    for (int v = 0; v < ring->nvars(); ++v)
        if (v != t_var) vars.push_back(v);
    int kmax = t_var >= 0 ? n : 1;
    int wt = t_var >= 0 ? w[static_cast<size_t>(t_var)] : 0;

    // Multipliers of weighted degree e: x-monomials times t^k, k < n.
    auto multipliers = [&](int e) {
        std::vector<Monomial> out;
        for (int k = 0; k < kmax; ++k)
            for (Monomial m : monomials_of_degree(vars, w, e - k * wt)) {
                if (t_var >= 0) m[t_var] = static_cast<int16_t>(k);
                out.push_back(m);
            }
        return out;
    };

    std::map<std::pair<int, std::array<int16_t, kMaxVars>>, int> index;
    long long basis = 0;
    for (int j = 0; j < rank; ++j)
        for (const Monomial& m : multipliers(d - comp_degrees[static_cast<size_t>(j)]))
            index[{j, m.exp}] = static_cast<int>(basis++);

    Echelon ech;
    for (const Vec& r : rels) {
        // degree of the relation from its lead entries
        int rd = 0;
        bool found = false;
        for (int j = 0; j < rank && !found; ++j)
            if (!r[static_cast<size_t>(j)].is_zero()) {
                rd = r[static_cast<size_t>(j)].degree() + comp_degrees[static_cast<size_t>(j)];
                found = true;
            }
        if (!found) continue;
        for (const Monomial& m : multipliers(d - rd)) {
            SparseRow row;
            for (int j = 0; j < rank; ++j)
                for (const auto& t : r[static_cast<size_t>(j)].terms()) {
                    Monomial p = t.mono * m;
                    if (t_var >= 0 && p[t_var] >= n) continue;
                    auto it = index.find({j, p.exp});
                    if (it == index.end())
                        throw std::invalid_argument("hilbert_function_dense: relation is not homogeneous");
                    Rational& s = row[it->second];
                    s += t.coeff;
                    if (s.is_zero()) row.erase(it->second);
                }
            ech.insert(std::move(row));
        }
    }
    return basis - ech.rank();
}

std::ostream& operator<<(std::ostream& os, const HilbertSeries& h) { return os << h.to_string(); }

}  // namespace primring
