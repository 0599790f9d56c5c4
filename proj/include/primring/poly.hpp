#pragma once

#include "primring/rational.hpp"

#include <array>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace primring {

inline constexpr int kMaxVars = 10;

/// Dense exponent vector; unused trailing slots stay zero.
struct Monomial {
    std::array<int16_t, kMaxVars> exp{};

    int operator[](int i) const { return exp[static_cast<size_t>(i)]; }
    int16_t& operator[](int i) { return exp[static_cast<size_t>(i)]; }

    bool is_one() const;
    bool divides(const Monomial& other) const;
    int total_degree() const;

    friend Monomial operator*(const Monomial& a, const Monomial& b);
    /// Exact quotient; the caller guarantees b divides a.
    friend Monomial operator/(const Monomial& a, const Monomial& b);
    friend Monomial lcm(const Monomial& a, const Monomial& b);
    friend bool coprime(const Monomial& a, const Monomial& b);
    friend bool operator==(const Monomial&, const Monomial&) = default;
};

enum class OrderKind { Lex, GrevLex, Elimination };

struct MonomialOrder {
    OrderKind kind = OrderKind::GrevLex;
    /// For Elimination: the first `block` variables form the eliminated block.
    int block = 0;

    static MonomialOrder lex() { return {OrderKind::Lex, 0}; }
    static MonomialOrder grevlex() { return {OrderKind::GrevLex, 0}; }
    static MonomialOrder elimination(int block) { return {OrderKind::Elimination, block}; }

    friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;
};

/// Ordered variable names, a grading (positive or zero integer weights) and
/// the active monomial order.
class PolyRing {
public:
    explicit PolyRing(std::vector<std::string> names, MonomialOrder order = {},
                      std::vector<int> weights = {});

    int nvars() const { return static_cast<int>(names_.size()); }
    const std::vector<std::string>& names() const { return names_; }
    const std::vector<int>& weights() const { return weights_; }
    const MonomialOrder& order() const { return order_; }
    std::optional<int> index_of(std::string_view name) const;

    /// Three-way comparison in the active order: <0, 0, >0.
    int compare(const Monomial& a, const Monomial& b) const;
    /// Weighted degree under the grading weights.
    int degree(const Monomial& m) const;

    std::shared_ptr<const PolyRing> with_order(MonomialOrder order) const;
    std::shared_ptr<const PolyRing> with_weights(std::vector<int> weights) const;

    friend bool operator==(const PolyRing& a, const PolyRing& b) {
        return a.names_ == b.names_ && a.order_ == b.order_ && a.weights_ == b.weights_;
    }

private:
    int order_degree(const Monomial& m, int from, int to) const;
    int grevlex_tail(const Monomial& a, const Monomial& b, int from, int to) const;

    std::vector<std::string> names_;
    MonomialOrder order_;
    std::vector<int> weights_;
    std::vector<int> order_weights_;
};

using RingPtr = std::shared_ptr<const PolyRing>;

RingPtr make_ring(std::vector<std::string> names, MonomialOrder order = {},
                  std::vector<int> weights = {});

struct Term {
    Monomial mono;
    Rational coeff;
};

/// Sparse multivariate polynomial over Q. Terms are kept sorted descending in
/// the ring's order with no zero coefficients.
class Poly {
public:
    Poly() = default;
    explicit Poly(RingPtr ring) : ring_(std::move(ring)) {}

    static Poly constant(RingPtr ring, const Rational& c);
    static Poly variable(RingPtr ring, int index);
    static Poly variable(RingPtr ring, std::string_view name);
    static Poly monomial(RingPtr ring, const Monomial& m, const Rational& c = 1);
    /// Sorts and combines arbitrary terms.
    static Poly from_terms(RingPtr ring, std::vector<Term> terms);
    /// Parses the canonical text form (also accepts parentheses and integer
    /// powers of sub-expressions).
    static Poly parse(RingPtr ring, std::string_view text);

    const RingPtr& ring() const { return ring_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t size() const { return terms_.size(); }
    const Term& lead() const { return terms_.front(); }

    /// Constant term, i.e. the value at the origin.
    Rational constant_term() const;
    Rational coefficient(const Monomial& m) const;
    bool is_constant() const;
    /// Highest weighted degree among terms; -1 for zero.
    int degree() const;
    int lowest_degree() const;
    bool is_homogeneous() const;
    /// Largest exponent of a variable; 0 for zero.
    int degree_in(int var) const;

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Poly& o);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    Poly scaled(const Rational& c) const;
    Poly times_term(const Monomial& m, const Rational& c) const;
    Poly pow(int e) const;
    Poly make_monic() const;

    /// Coefficient of var^k viewed as a polynomial in var (var^k removed).
    Poly coefficient_of(int var, int k) const;
    /// Keeps only terms accepted by the predicate.
    Poly filtered(const std::function<bool(const Monomial&)>& keep) const;
    /// Ring homomorphism: variable i is sent to images[i]; the result lives in
    /// the images' ring.
    Poly substitute(std::span<const Poly> images) const;
    Poly derivative(int var) const;
    /// Same terms re-sorted into another ring with identical variable names.
    Poly in_ring(const RingPtr& ring) const;

    std::string to_string() const;

    friend bool operator==(const Poly& a, const Poly& b);

private:
    void check_same_ring(const Poly& o) const;
    void normalize();

    RingPtr ring_;
    std::vector<Term> terms_;
};

std::ostream& operator<<(std::ostream& os, const Poly& p);

std::string monomial_to_string(const PolyRing& ring, const Monomial& m);

}  // namespace primring

namespace primring {

/// a / b when b divides a exactly, otherwise nothing.
std::optional<Poly> divide_exact(const Poly& a, const Poly& b);

}  // namespace primring
