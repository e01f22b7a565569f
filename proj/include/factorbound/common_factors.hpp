// Common factors of an automatic sequence and a Sturmian word.
//
// Certified mode intersects complete per-length factor sets and can prove
// termination: factors are closed under taking sub-factors, so the first
// empty intersection rules out every longer length. Prefix mode compares
// finite prefixes with a suffix automaton and only ever yields lower bounds.
#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>

#include "factorbound/morphism.hpp"
#include "factorbound/sturmian.hpp"
#include "factorbound/words.hpp"

namespace factorbound {

struct CommonFactorReport {
    /// length -> common factors; includes 0 -> {""} and, when exhausted,
    /// the first empty length.
    std::map<int, std::set<Word>> lengths;
    int longest = 0;
    /// True iff some length had an empty intersection, which (with both
    /// sides certified) proves no longer common factor exists.
    bool exhausted = false;
    /// Set when one side's factor set came back uncertified at a length.
    std::optional<int> uncertified_at;

    bool operator==(const CommonFactorReport&) const = default;
};

CommonFactorReport common_factors(const UniformMorphism& m, const SturmianSpec& spec, int max_len,
                                  int morphism_rounds = 64,
                                  std::size_t sturmian_prefix_cap = 1000000);

struct LcfResult {
    std::size_t length = 0;
    Word witness;
    std::size_t pos_first = 0;   ///< start of one occurrence in the first word
    std::size_t pos_second = 0;  ///< start of one occurrence in the second word

    bool operator==(const LcfResult&) const = default;
};

/// Longest common contiguous block of two finite words, with one witness
/// occurrence pair. Tie-break: least position in the first word, then least
/// in the second. Suffix automaton on the second word, streamed by the
/// first; O(|x| + |a|) up to alphabet factors.
LcfResult longest_common_factor_prefix(std::string_view x_prefix, std::string_view a_prefix);

}  // namespace factorbound
