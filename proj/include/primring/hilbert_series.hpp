#pragma once

#include "primring/groebner.hpp"

#include <map>
#include <ostream>
#include <string>
#include <vector>

namespace primring {

/// N(z) / prod_i (1 - z^{w_i}) with a Laurent numerator N.
class HilbertSeries {
public:
    HilbertSeries() = default;
    HilbertSeries(std::map<int, long long> numerator, std::vector<int> denominator);

    const std::map<int, long long>& numerator() const { return num_; }
    const std::vector<int>& denominator() const { return den_; }
    bool is_zero() const { return num_.empty(); }

    /// Hilbert function value in degree d.
    long long coefficient(int d) const;
    HilbertSeries shifted(int s) const;

    friend HilbertSeries operator+(const HilbertSeries& a, const HilbertSeries& b);
    friend HilbertSeries operator-(const HilbertSeries& a, const HilbertSeries& b);
    friend bool operator==(const HilbertSeries& a, const HilbertSeries& b);

    /// Numerator and denominator in z, e.g. "(1+2*z)/((1-z)^2)".
    std::string to_string() const;

private:
    HilbertSeries with_denominator(const std::vector<int>& den) const;

    std::map<int, long long> num_;
    std::vector<int> den_;  // sorted
};

std::ostream& operator<<(std::ostream& os, const HilbertSeries& h);

/// Numerator of the Hilbert series of k[vars]/(monomials); weights per ring
/// variable, only `vars` participate.
std::map<int, long long> monomial_ideal_numerator(std::vector<Monomial> gens, const std::vector<int>& vars,
                                                   const std::vector<int>& weights);

/// Hilbert series of A^r / span(gb) graded by the ring weights plus
/// comp_degrees. When t_var >= 0 the module is taken over A/(t^n): t-powers
/// are split off so t may have any integer weight.
HilbertSeries hilbert_series(const GroebnerBasis& gb, const std::vector<int>& comp_degrees, int t_var = -1,
                             int n = 0);

/// Monomials in `vars` of weighted degree d.
std::vector<Monomial> monomials_of_degree(const std::vector<int>& vars, const std::vector<int>& weights, int d);

/// Dimension of (A^r / span(rels))_d by dense linear algebra, with A = Q[x, t]/(t^n)
/// when t_var >= 0. Independent of Groebner bases; used as an oracle.
long long hilbert_function_dense(const RingPtr& ring, int rank, const std::vector<Vec>& rels,
                                 const std::vector<int>& comp_degrees, int t_var, int n, int d);

}  // namespace primring
