// Deterministic finite automaton with output: the machine model of
// k-automatic sequences. Canonical form reads base-k digits least
// significant first, so that kernel subsequences correspond to states.
#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace factorbound {

class Dfao {
public:
    /// Builds and validates: transitions total and in range, every state
    /// reachable (trimmed on construction), and zero-robust (reading extra
    /// high-order zero digits never changes the output).
    Dfao(int base, int initial, std::vector<char> output, std::vector<std::vector<int>> transitions);

    int base() const { return base_; }
    int initial() const { return initial_; }
    int state_count() const { return static_cast<int>(output_.size()); }
    char output(int state) const { return output_[static_cast<std::size_t>(state)]; }
    int next(int state, int digit) const {
        return transitions_[static_cast<std::size_t>(state)][static_cast<std::size_t>(digit)];
    }

    /// Base-k digits of n, least significant first; empty for n = 0.
    std::vector<int> digits(unsigned long long n) const;

    int state_after(std::span<const int> lsd_digits) const;
    char evaluate_digits(std::span<const int> lsd_digits) const;
    /// n-th symbol of the sequence.
    char evaluate(unsigned long long n) const;

    /// Text-format loader (see README for the grammar); accepts both
    /// lsd and msd reading conventions and converts msd input to the
    /// canonical lsd form.
    static Dfao load_text(std::istream& in);

private:
    int base_;
    int initial_;
    std::vector<char> output_;
    std::vector<std::vector<int>> transitions_;

    void trim();
    void validate() const;
};

/// Converts an automaton that reads digits most significant first into an
/// equivalent canonical lsd-first one (state set: reachable transition maps
/// under composition). The msd automaton must loop on digit 0 at its
/// initial state, which is what makes leading zeros harmless.
Dfao msd_to_lsd(const Dfao& msd);

/// Variant of the constructor inputs that skips the zero-robustness check,
/// for msd-convention automata staged for conversion.
struct MsdDfao {
    int base;
    int initial;
    std::vector<char> output;
    std::vector<std::vector<int>> transitions;
};
Dfao msd_to_lsd(const MsdDfao& msd);

}  // namespace factorbound
