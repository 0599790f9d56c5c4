#pragma once

#include "primring/fpmod.hpp"

#include <optional>
#include <vector>

namespace primring {

struct SequenceReport {
    std::vector<TruncElem> elements;
    /// x_{k,0}: the elements with t set to 0.
    std::vector<Poly> reductions;
    bool verdict = false;
    /// Zero-divisor ladder on the reductions in R, and directly in R[n].
    bool verdict_base = false;
    bool verdict_direct = false;
    /// First failing index k (1-based) and a with a x_k in (x_1..x_{k-1}),
    /// a outside it; taken from the R[n] ladder.
    int failure_index = 0;
    std::optional<Poly> witness;
};

/// Both ladders use the ideal quotient (I_{k-1} : x_k) = I_{k-1}; containment
/// follows the ring's locality. Throws std::logic_error if they disagree.
SequenceReport is_regular_sequence(const std::vector<TruncElem>& seq);

/// t^{n-1} y in I and y in I_0, asserted equal. Throws std::invalid_argument
/// if seq is not regular.
bool shadow_membership(const Poly& y, const std::vector<TruncElem>& seq);

/// The ideal of a regular sequence as a module; its balancedness is asserted.
PresMod balanced_ideal(const std::vector<TruncElem>& seq);

}  // namespace primring
