// Sturmian (mechanical) words from exact quadratic-irrational slopes.
//
// Bits come from exact integer floors; there is no floating-point path,
// because indices where {n*alpha} lands next to alpha are exactly the
// interesting ones.
//
// Indexing: the emitted word w[0] w[1] ... has w[i] = mechanical_bit(i+1)
// = floor((i+2)*alpha + beta) - floor((i+1)*alpha + beta). For beta = 0
// and alpha = (3-sqrt(5))/2 this starts 01001010 (the Fibonacci word).
// The fractional-part rule 1_{ {(n+1)alpha} < alpha } indexes the same
// word one step earlier (its n = 0 term, always 0, is dropped), i.e.
// w[i] is the rule evaluated at n = i + 1.
#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "factorbound/quadratic.hpp"
#include "factorbound/words.hpp"

namespace factorbound {

class SturmianSpec {
public:
    /// alpha must be irrational in (0, 1); beta in [0, 1), rational allowed.
    /// beta must be rational or share alpha's radicand.
    SturmianSpec(QuadraticIrrational alpha, QuadraticIrrational beta = QuadraticIrrational());

    /// Parses `alpha=<number> beta=<number>` (beta optional).
    static SturmianSpec parse(std::string_view text);
    std::string to_string() const;

    const QuadraticIrrational& alpha() const { return alpha_; }
    const QuadraticIrrational& beta() const { return beta_; }

    /// floor((n+1) alpha + beta) - floor(n alpha + beta), n >= 1.
    int mechanical_bit(unsigned long long n) const;
    /// First N bits of the word.
    std::string prefix(std::size_t N) const;
    /// Number of 1s among the first N bits.
    unsigned long long ones_count(std::size_t N) const;

    /// Complete set of length-n factors, certified by the n+1 complexity
    /// bound: a sliding window walks growing prefixes until exactly n+1
    /// distinct factors have appeared, at which point no further factor can
    /// exist. Exceeding prefix_cap yields certified = false (which for a
    /// genuine Sturmian spec signals a bug or a cap that is too low).
    FactorSet factor_set(int n, std::size_t prefix_cap = 1000000) const;

private:
    QuadraticIrrational alpha_, beta_;
};

/// Zero-based bit of the characteristic word (beta = 0) of alpha; equals
/// prefix()[n] of SturmianSpec(alpha). Throws for rational alpha.
int characteristic_bit(const QuadraticIrrational& alpha, unsigned long long n);

}  // namespace factorbound
