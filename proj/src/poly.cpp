#include "primring/poly.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace primring {

bool Monomial::is_one() const {
    return std::all_of(exp.begin(), exp.end(), [](int16_t e) { return e == 0; });
}

bool Monomial::divides(const Monomial& other) const {
    for (size_t i = 0; i < exp.size(); ++i)
        if (exp[i] > other.exp[i]) return false;
    return true;
}

int Monomial::total_degree() const {
    int d = 0;
    for (auto e : exp) d += e;
    return d;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial r;
    for (size_t i = 0; i < r.exp.size(); ++i) r.exp[i] = static_cast<int16_t>(a.exp[i] + b.exp[i]);
    return r;
}

Monomial operator/(const Monomial& a, const Monomial& b) {
    Monomial r;
    for (size_t i = 0; i < r.exp.size(); ++i) r.exp[i] = static_cast<int16_t>(a.exp[i] - b.exp[i]);
    return r;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial r;
    for (size_t i = 0; i < r.exp.size(); ++i) r.exp[i] = std::max(a.exp[i], b.exp[i]);
    return r;
}

bool coprime(const Monomial& a, const Monomial& b) {
    for (size_t i = 0; i < a.exp.size(); ++i)
        if (a.exp[i] != 0 && b.exp[i] != 0) return false;
    return true;
}

// ---------------------------------------------------------------------------

PolyRing::PolyRing(std::vector<std::string> names, MonomialOrder order, std::vector<int> weights)
    : names_(std::move(names)), order_(order), weights_(std::move(weights)) {
    if (names_.size() > static_cast<size_t>(kMaxVars))
        throw std::invalid_argument("too many variables (max " + std::to_string(kMaxVars) + ")");
    for (size_t i = 0; i < names_.size(); ++i)
        for (size_t j = i + 1; j < names_.size(); ++j)
            if (names_[i] == names_[j]) throw std::invalid_argument("duplicate variable " + names_[i]);
    if (weights_.empty()) weights_.assign(names_.size(), 1);
    if (weights_.size() != names_.size())
        throw std::invalid_argument("weight vector length differs from variable count");
    // Non-positive grading weights would break well-ordering; the order then
    // falls back to weight 1 for those variables.
    order_weights_.resize(weights_.size());
    for (size_t i = 0; i < weights_.size(); ++i) order_weights_[i] = weights_[i] > 0 ? weights_[i] : 1;
    if (order_.kind == OrderKind::Elimination && (order_.block < 0 || order_.block > nvars()))
        throw std::invalid_argument("elimination block out of range");
}

std::optional<int> PolyRing::index_of(std::string_view name) const {
    for (size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == name) return static_cast<int>(i);
    return std::nullopt;
}

int PolyRing::order_degree(const Monomial& m, int from, int to) const {
    int d = 0;
    for (int i = from; i < to; ++i) d += order_weights_[static_cast<size_t>(i)] * m[i];
    return d;
}

int PolyRing::grevlex_tail(const Monomial& a, const Monomial& b, int from, int to) const {
    int da = order_degree(a, from, to), db = order_degree(b, from, to);
    if (da != db) return da < db ? -1 : 1;
    for (int i = to - 1; i >= from; --i)
        if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
    return 0;
}

int PolyRing::compare(const Monomial& a, const Monomial& b) const {
    switch (order_.kind) {
    case OrderKind::Lex:
        for (int i = 0; i < nvars(); ++i)
            if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
        return 0;
    case OrderKind::GrevLex:
        return grevlex_tail(a, b, 0, nvars());
    case OrderKind::Elimination: {
        int c = grevlex_tail(a, b, 0, order_.block);
        if (c != 0) return c;
        return grevlex_tail(a, b, order_.block, nvars());
    }
    }
    return 0;
}

int PolyRing::degree(const Monomial& m) const {
    int d = 0;
    for (int i = 0; i < nvars(); ++i) d += weights_[static_cast<size_t>(i)] * m[i];
    return d;
}

RingPtr PolyRing::with_order(MonomialOrder order) const {
    return std::make_shared<const PolyRing>(names_, order, weights_);
}

RingPtr PolyRing::with_weights(std::vector<int> weights) const {
    return std::make_shared<const PolyRing>(names_, order_, std::move(weights));
}

RingPtr make_ring(std::vector<std::string> names, MonomialOrder order, std::vector<int> weights) {
    return std::make_shared<const PolyRing>(std::move(names), order, std::move(weights));
}

// ---------------------------------------------------------------------------

Poly Poly::constant(RingPtr ring, const Rational& c) {
    Poly p(std::move(ring));
    if (!c.is_zero()) p.terms_.push_back({Monomial{}, c});
    return p;
}

Poly Poly::variable(RingPtr ring, int index) {
    if (index < 0 || index >= ring->nvars()) throw std::out_of_range("variable index");
    Monomial m;
    m[index] = 1;
    return monomial(std::move(ring), m);
}

Poly Poly::variable(RingPtr ring, std::string_view name) {
    auto idx = ring->index_of(name);
    if (!idx) throw std::invalid_argument("unknown variable '" + std::string(name) + "'");
    return variable(std::move(ring), *idx);
}

Poly Poly::monomial(RingPtr ring, const Monomial& m, const Rational& c) {
    Poly p(std::move(ring));
    if (!c.is_zero()) p.terms_.push_back({m, c});
    return p;
}

Poly Poly::from_terms(RingPtr ring, std::vector<Term> terms) {
    Poly p(std::move(ring));
    p.terms_ = std::move(terms);
    p.normalize();
    return p;
}

void Poly::normalize() {
    const PolyRing& r = *ring_;
    std::sort(terms_.begin(), terms_.end(),
              [&](const Term& a, const Term& b) { return r.compare(a.mono, b.mono) > 0; });
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (auto& t : terms_) {
        if (!out.empty() && out.back().mono == t.mono) {
            out.back().coeff += t.coeff;
        } else {
            if (!out.empty() && out.back().coeff.is_zero()) out.pop_back();
            out.push_back(std::move(t));
        }
    }
    if (!out.empty() && out.back().coeff.is_zero()) out.pop_back();
    terms_ = std::move(out);
}

void Poly::check_same_ring(const Poly& o) const {
    if (ring_ == o.ring_) return;
    if (!ring_ || !o.ring_ || !(*ring_ == *o.ring_))
        throw std::invalid_argument("polynomials live in different rings");
}

Rational Poly::constant_term() const {
    if (!terms_.empty() && terms_.back().mono.is_one()) return terms_.back().coeff;
    // Non-graded orders (lex) still put 1 last, but search defensively.
    for (const auto& t : terms_)
        if (t.mono.is_one()) return t.coeff;
    return 0;
}

Rational Poly::coefficient(const Monomial& m) const {
    for (const auto& t : terms_)
        if (t.mono == m) return t.coeff;
    return 0;
}

bool Poly::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }

int Poly::degree() const {
    int d = -1;
    for (const auto& t : terms_) d = std::max(d, ring_->degree(t.mono));
    return d;
}

int Poly::lowest_degree() const {
    if (terms_.empty()) return -1;
    int d = ring_->degree(terms_[0].mono);
    for (const auto& t : terms_) d = std::min(d, ring_->degree(t.mono));
    return d;
}

bool Poly::is_homogeneous() const { return terms_.empty() || degree() == lowest_degree(); }

int Poly::degree_in(int var) const {
    int d = 0;
    for (const auto& t : terms_) d = std::max(d, t.mono[var]);
    return d;
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& t : r.terms_) t.coeff = -t.coeff;
    return r;
}

Poly& Poly::operator+=(const Poly& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) {
        ring_ = o.ring_;
        terms_ = o.terms_;
        return *this;
    }
    check_same_ring(o);
    const PolyRing& r = *ring_;
    std::vector<Term> out;
    out.reserve(terms_.size() + o.terms_.size());
    size_t i = 0, j = 0;
    while (i < terms_.size() || j < o.terms_.size()) {
        if (j == o.terms_.size()) {
            out.push_back(std::move(terms_[i++]));
        } else if (i == terms_.size()) {
            out.push_back(o.terms_[j++]);
        } else {
            int c = r.compare(terms_[i].mono, o.terms_[j].mono);
            if (c > 0) {
                out.push_back(std::move(terms_[i++]));
            } else if (c < 0) {
                out.push_back(o.terms_[j++]);
            } else {
                Rational s = terms_[i].coeff + o.terms_[j].coeff;
                if (!s.is_zero()) out.push_back({terms_[i].mono, std::move(s)});
                ++i;
                ++j;
            }
        }
    }
    terms_ = std::move(out);
    return *this;
}

Poly& Poly::operator-=(const Poly& o) { return *this += -o; }

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) {
        if (a.ring_ && b.ring_) a.check_same_ring(b);
        return Poly(a.ring_ ? a.ring_ : b.ring_);
    }
    a.check_same_ring(b);
    std::vector<Term> prod;
    prod.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& s : a.terms_)
        for (const auto& t : b.terms_) prod.push_back({s.mono * t.mono, s.coeff * t.coeff});
    return Poly::from_terms(a.ring_, std::move(prod));
}

Poly& Poly::operator*=(const Poly& o) { return *this = *this * o; }

Poly Poly::scaled(const Rational& c) const {
    if (c.is_zero()) return Poly(ring_);
    Poly r = *this;
    for (auto& t : r.terms_) t.coeff *= c;
    return r;
}

Poly Poly::times_term(const Monomial& m, const Rational& c) const {
    if (c.is_zero()) return Poly(ring_);
    Poly r = *this;
    for (auto& t : r.terms_) {
        t.mono = t.mono * m;
        t.coeff *= c;
    }
    return r;
}

Poly Poly::pow(int e) const {
    if (e < 0) throw std::invalid_argument("negative exponent");
    Poly result = constant(ring_, 1), base = *this;
    while (e > 0) {
        if (e & 1) result *= base;
        e >>= 1;
        if (e) base *= base;
    }
    return result;
}

Poly Poly::make_monic() const {
    if (is_zero()) return *this;
    return scaled(lead().coeff.inverse());
}

Poly Poly::coefficient_of(int var, int k) const {
    std::vector<Term> out;
    for (const auto& t : terms_)
        if (t.mono[var] == k) {
            Term s = t;
            s.mono[var] = 0;
            out.push_back(std::move(s));
        }
    return from_terms(ring_, std::move(out));
}

Poly Poly::filtered(const std::function<bool(const Monomial&)>& keep) const {
    Poly r(ring_);
    for (const auto& t : terms_)
        if (keep(t.mono)) r.terms_.push_back(t);
    return r;
}

Poly Poly::substitute(std::span<const Poly> images) const {
    if (static_cast<int>(images.size()) != ring_->nvars())
        throw std::invalid_argument("substitution needs one image per variable");
    RingPtr target = images.empty() ? ring_ : images[0].ring();
    Poly result(target);
    // Cache powers per variable.
    std::vector<std::vector<Poly>> powers(images.size());
    for (const auto& t : terms_) {
        Poly acc = constant(target, t.coeff);
        for (size_t v = 0; v < images.size(); ++v) {
            int e = t.mono[static_cast<int>(v)];
            if (e == 0) continue;
            auto& pw = powers[v];
            if (pw.empty()) pw.push_back(constant(target, 1));
            while (static_cast<int>(pw.size()) <= e) pw.push_back(pw.back() * images[v]);
            acc *= pw[static_cast<size_t>(e)];
        }
        result += acc;
    }
    return result;
}

Poly Poly::derivative(int var) const {
    std::vector<Term> out;
    for (const auto& t : terms_) {
        int e = t.mono[var];
        if (e == 0) continue;
        Term s = t;
        s.mono[var] = static_cast<int16_t>(e - 1);
        s.coeff *= Rational(e);
        out.push_back(std::move(s));
    }
    return from_terms(ring_, std::move(out));
}

Poly Poly::in_ring(const RingPtr& ring) const {
    if (ring_ && ring_->names() != ring->names())
        throw std::invalid_argument("in_ring: variable names differ");
    return from_terms(ring, terms_);
}

bool operator==(const Poly& a, const Poly& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    if (a.is_zero()) return true;
    a.check_same_ring(b);
    for (size_t i = 0; i < a.terms_.size(); ++i)
        if (!(a.terms_[i].mono == b.terms_[i].mono) || a.terms_[i].coeff != b.terms_[i].coeff) return false;
    return true;
}

std::string monomial_to_string(const PolyRing& ring, const Monomial& m) {
    std::string s;
    for (int i = 0; i < ring.nvars(); ++i) {
        if (m[i] == 0) continue;
        if (!s.empty()) s += '*';
        s += ring.names()[static_cast<size_t>(i)];
        if (m[i] > 1) s += "^" + std::to_string(m[i]);
    }
    return s;
}

std::string Poly::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (size_t i = 0; i < terms_.size(); ++i) {
        const Term& t = terms_[i];
        Rational c = t.coeff;
        if (c.sign() < 0) {
            out += '-';
            c = -c;
        } else if (i > 0) {
            out += '+';
        }
        std::string mono = monomial_to_string(*ring_, t.mono);
        if (mono.empty()) {
            out += c.to_string();
        } else if (c.is_one()) {
            out += mono;
        } else {
            out += c.to_string() + "*" + mono;
        }
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.to_string(); }

// ---------------------------------------------------------------------------
// Recursive-descent parser:
//   expr   := ['+'|'-'] term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := atom ('^' integer)?
//   atom   := integer ['/' integer] | name | '(' expr ')'

namespace {

class Parser {
public:
    Parser(RingPtr ring, std::string_view text) : ring_(std::move(ring)), text_(text) {}

    Poly parse() {
        Poly p = expr();
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected character");
        return p;
    }

private:
    [[noreturn]] void fail(const std::string& what) const {
        throw std::invalid_argument("parse error at offset " + std::to_string(pos_) + " in '" +
                                    std::string(text_) + "': " + what);
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    std::string digits() {
        skip_ws();
        size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_) fail("expected integer");
        return std::string(text_.substr(start, pos_ - start));
    }

    Poly expr() {
        Poly acc(ring_);
        bool negate = false;
        if (accept('-')) negate = true;
        else accept('+');
        Poly t = term();
        acc += negate ? -t : t;
        while (true) {
            if (accept('+')) acc += term();
            else if (accept('-')) acc -= term();
            else break;
        }
        return acc;
    }

    Poly term() {
        Poly acc = factor();
        while (accept('*')) acc *= factor();
        return acc;
    }

    Poly factor() {
        Poly base = atom();
        if (accept('^')) {
            std::string e = digits();
            base = base.pow(std::stoi(e));
        }
        return base;
    }

    Poly atom() {
        skip_ws();
        if (pos_ >= text_.size()) fail("unexpected end of input");
        char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            Poly inner = expr();
            if (!accept(')')) fail("expected ')'");
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string num = digits();
            std::string den = "1";
            if (accept('/')) den = digits();
            return Poly::constant(ring_, Rational(mpz_class(num), mpz_class(den)));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            size_t start = pos_;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
                ++pos_;
            std::string name(text_.substr(start, pos_ - start));
            auto idx = ring_->index_of(name);
            if (!idx) {
                pos_ = start;
                fail("unknown variable '" + name + "'");
            }
            return Poly::variable(ring_, *idx);
        }
        fail(std::string("unexpected character '") + c + "'");
    }

    RingPtr ring_;
    std::string_view text_;
    size_t pos_ = 0;
};

}  // namespace

Poly Poly::parse(RingPtr ring, std::string_view text) { return Parser(std::move(ring), text).parse(); }

}  // namespace primring

namespace primring {

std::optional<Poly> divide_exact(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw std::domain_error("division by zero polynomial");
    Poly q(a.ring() ? a.ring() : b.ring());
    Poly r = a;
    const Term& lb = b.lead();
    while (!r.is_zero()) {
        const Term& lr = r.lead();
        if (!lb.mono.divides(lr.mono)) return std::nullopt;
        Monomial m = lr.mono / lb.mono;
        Rational c = lr.coeff / lb.coeff;
        q += Poly::monomial(b.ring(), m, c);
        r -= b.times_term(m, c);
    }
    return q;
}

}  // namespace primring
