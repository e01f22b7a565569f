// Shared word/factor vocabulary.
#pragma once

#include <set>
#include <string>

namespace factorbound {

using Word = std::string;

/// Three-valued membership answer; `unknown` propagates an uncertified
/// factor enumeration instead of guessing.
enum class Presence { absent, present, unknown };

/// Set of length-n factors of an infinite word. When `certified` is true
/// the set is the complete factor set, not just a sample.
struct FactorSet {
    int length = 0;
    std::set<Word> factors;
    bool certified = false;
    std::string provenance;

    bool contains(const Word& w) const { return factors.count(w) != 0; }
    std::size_t size() const { return factors.size(); }
};

}  // namespace factorbound
