// Uniform morphisms (every letter maps to a word of length k), their fixed
// points, the standard automaton construction, and certified factor
// enumeration by image closure.
#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "factorbound/dfao.hpp"
#include "factorbound/words.hpp"

namespace factorbound {

class UniformMorphism {
public:
    /// Validates: every image has length exactly `base`, the seed's image
    /// starts with the seed (prolongability), and the coding is total.
    UniformMorphism(int base, std::vector<char> letters, std::map<char, std::string> images,
                    char seed, std::map<char, char> coding);

    int base() const { return base_; }
    const std::vector<char>& letters() const { return letters_; }
    const std::string& image(char letter) const;
    char seed() const { return seed_; }
    char code(char letter) const;

    std::string apply(const std::string& word) const;

    static UniformMorphism load_text(std::istream& in);

private:
    int base_;
    std::vector<char> letters_;
    std::map<char, std::string> images_;
    char seed_;
    std::map<char, char> coding_;
};

/// Automaton for the coded fixed point: evaluate(result, n) equals the
/// coding of the n-th letter of the fixed point. Canonical lsd form.
Dfao from_uniform_morphism(const UniformMorphism& m);

/// Complete factor sets of the coded fixed point for every length 1..n at
/// once; stops at the joint fixpoint of the image-closure step. A length-l
/// factor of m(u) is determined by a factor of u of length ceil(l/k)+1, so
/// stabilization at every length <= n really is a fixpoint.
/// Exceeding max_rounds yields certified = false.
std::vector<FactorSet> factor_table(const UniformMorphism& m, int n, int max_rounds = 64);
FactorSet factor_set(const UniformMorphism& m, int n, int max_rounds = 64);

/// Membership of w in the factor set of the coded fixed point; `unknown`
/// if the enumeration was uncertified.
Presence contains_factor(const UniformMorphism& m, const Word& w, int max_rounds = 64);

}  // namespace factorbound
