// Continued fraction expansion of quadratic irrationals, with eventual-period
// detection via the classic (P + sqrt(D))/Q state recurrence.
#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "factorbound/quadratic.hpp"

namespace factorbound {

/// Partial quotients a0; a1, a2, ... with an eventual-period marker.
/// `terms` holds the preperiod followed by exactly one period when the
/// period was detected; `period == 0` flags a truncated (non-periodic)
/// expansion that ran into the term cap.
struct ContinuedFraction {
    std::vector<Int> terms;
    std::size_t preperiod = 0;
    std::size_t period = 0;

    bool periodic() const { return period > 0; }

    /// i-th partial quotient, cycling through the period when periodic.
    /// Throws std::out_of_range past the end of a truncated expansion.
    const Int& term(std::size_t i) const;
};

/// Expansion of an irrational q in (0, 1). Throws std::domain_error for
/// rational input or values outside (0, 1). If the period is not detected
/// within max_terms quotients the result is truncated with period == 0.
ContinuedFraction continued_fraction(const QuadraticIrrational& q, std::size_t max_terms = 64);

/// First `count` convergents p_i/q_i of the expansion.
std::vector<std::pair<Int, Int>> convergents(const ContinuedFraction& cf, std::size_t count);

}  // namespace factorbound
