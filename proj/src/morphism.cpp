#include "factorbound/morphism.hpp"

#include <algorithm>
#include <istream>
#include <queue>
#include <sstream>
#include <stdexcept>

namespace factorbound {

UniformMorphism::UniformMorphism(int base, std::vector<char> letters,
                                 std::map<char, std::string> images, char seed,
                                 std::map<char, char> coding)
    : base_(base), letters_(std::move(letters)), images_(std::move(images)), seed_(seed),
      coding_(std::move(coding)) {
    if (base_ < 2) throw std::invalid_argument("base must be at least 2");
    if (letters_.empty()) throw std::invalid_argument("alphabet is empty");
    for (char a : letters_) {
        auto it = images_.find(a);
        if (it == images_.end())
            throw std::invalid_argument(std::string("letter '") + a + "' has no image");
        if (static_cast<int>(it->second.size()) != base_)
            throw std::invalid_argument(std::string("image of '") + a +
                                        "' must have length equal to the base");
        for (char b : it->second)
            if (std::find(letters_.begin(), letters_.end(), b) == letters_.end())
                throw std::invalid_argument(std::string("image of '") + a +
                                            "' uses letter outside the alphabet");
        if (coding_.find(a) == coding_.end()) coding_.emplace(a, a);
    }
    if (std::find(letters_.begin(), letters_.end(), seed_) == letters_.end())
        throw std::invalid_argument("seed letter is not in the alphabet");
    if (images_.at(seed_)[0] != seed_)
        throw std::invalid_argument("morphism is not prolongable: image of seed must start with it");
}

const std::string& UniformMorphism::image(char letter) const {
    auto it = images_.find(letter);
    if (it == images_.end())
        throw std::invalid_argument(std::string("no image for letter '") + letter + "'");
    return it->second;
}

char UniformMorphism::code(char letter) const {
    auto it = coding_.find(letter);
    if (it == coding_.end())
        throw std::invalid_argument(std::string("no coding for letter '") + letter + "'");
    return it->second;
}

std::string UniformMorphism::apply(const std::string& word) const {
    std::string out;
    out.reserve(word.size() * static_cast<std::size_t>(base_));
    for (char a : word) out += image(a);
    return out;
}

Dfao from_uniform_morphism(const UniformMorphism& m) {
    // Letters reachable from the seed become the states of the msd automaton.
    std::vector<char> states;
    std::map<char, int> index;
    std::queue<char> bfs;
    auto intern = [&](char a) {
        auto [it, fresh] = index.emplace(a, static_cast<int>(states.size()));
        if (fresh) {
            states.push_back(a);
            bfs.push(a);
        }
        return it->second;
    };
    intern(m.seed());
    while (!bfs.empty()) {
        char a = bfs.front();
        bfs.pop();
        for (char b : m.image(a)) intern(b);
    }

    MsdDfao msd;
    msd.base = m.base();
    msd.initial = 0;
    msd.output.resize(states.size());
    msd.transitions.resize(states.size());
    for (std::size_t s = 0; s < states.size(); ++s) {
        msd.output[s] = m.code(states[s]);
        auto& row = msd.transitions[s];
        row.resize(static_cast<std::size_t>(m.base()));
        const std::string& img = m.image(states[s]);
        for (int d = 0; d < m.base(); ++d)
            row[static_cast<std::size_t>(d)] = index.at(img[static_cast<std::size_t>(d)]);
    }
    return msd_to_lsd(msd);
}

namespace {

void collect_factors(const std::string& w, int max_len, std::vector<std::set<Word>>& into) {
    for (int len = 1; len <= max_len; ++len) {
        if (w.size() < static_cast<std::size_t>(len)) break;
        auto& dst = into[static_cast<std::size_t>(len)];
        for (std::size_t i = 0; i + static_cast<std::size_t>(len) <= w.size(); ++i)
            dst.insert(w.substr(i, static_cast<std::size_t>(len)));
    }
}

}  // namespace

std::vector<FactorSet> factor_table(const UniformMorphism& m, int n, int max_rounds) {
    if (n < 1) throw std::invalid_argument("factor length must be positive");
    const int k = m.base();

    // Seed word long enough that every needed factor length is populated.
    std::string w(1, m.seed());
    int rounds_used = 0;
    while (w.size() < static_cast<std::size_t>(n) + 1) {
        w = m.apply(w);
        ++rounds_used;
    }
    std::vector<std::set<Word>> F(static_cast<std::size_t>(n) + 1);
    collect_factors(w, n, F);

    bool certified = false;
    for (int round = rounds_used; round < max_rounds; ++round) {
        std::vector<std::set<Word>> G(static_cast<std::size_t>(n) + 1);
        for (const Word& a : F[1]) {
            for (char b : m.image(a[0])) G[1].insert(Word(1, b));
        }
        for (int len = 2; len <= n; ++len) {
            int need = (len + k - 1) / k + 1;
            std::vector<std::set<Word>> slice(static_cast<std::size_t>(len) + 1);
            for (const Word& v : F[static_cast<std::size_t>(need)])
                collect_factors(m.apply(v), len, slice);
            G[static_cast<std::size_t>(len)] = std::move(slice[static_cast<std::size_t>(len)]);
        }
        if (G == F) {
            certified = true;
            break;
        }
        F = std::move(G);
    }

    std::vector<FactorSet> out;
    out.reserve(static_cast<std::size_t>(n));
    std::string provenance = certified
        ? "image-closure fixpoint over lengths 1.." + std::to_string(n)
        : "image closure stopped at round cap " + std::to_string(max_rounds);
    for (int len = 1; len <= n; ++len) {
        FactorSet fs;
        fs.length = len;
        fs.certified = certified;
        fs.provenance = provenance;
        for (const Word& v : F[static_cast<std::size_t>(len)]) {
            Word coded(v.size(), '\0');
            for (std::size_t i = 0; i < v.size(); ++i) coded[i] = m.code(v[i]);
            fs.factors.insert(std::move(coded));
        }
        out.push_back(std::move(fs));
    }
    return out;
}

FactorSet factor_set(const UniformMorphism& m, int n, int max_rounds) {
    return factor_table(m, n, max_rounds).back();
}

Presence contains_factor(const UniformMorphism& m, const Word& w, int max_rounds) {
    if (w.empty()) throw std::invalid_argument("factor query needs a nonempty word");
    FactorSet fs = factor_set(m, static_cast<int>(w.size()), max_rounds);
    if (!fs.certified) return Presence::unknown;
    return fs.contains(w) ? Presence::present : Presence::absent;
}

UniformMorphism UniformMorphism::load_text(std::istream& in) {
    int base = -1;
    std::vector<char> letters;
    std::map<char, std::string> images;
    std::map<char, char> coding;
    char seed = '\0';
    bool have_seed = false;

    std::string line;
    int lineno = 0;
    auto fail = [&](const std::string& msg) {
        throw std::invalid_argument("morphism line " + std::to_string(lineno) + ": " + msg);
    };
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string key;
        if (!(ls >> key)) continue;
        if (key == "base") {
            if (!(ls >> base)) fail("expected: base <k>");
        } else if (key == "letters") {
            std::string tok;
            while (ls >> tok) {
                if (tok.size() != 1) fail("letters must be single characters");
                letters.push_back(tok[0]);
            }
        } else if (key == "map") {
            std::string from, arrow, tok;
            if (!(ls >> from >> arrow) || from.size() != 1 || arrow != "->")
                fail("expected: map <letter> -> <letter>...");
            std::string img;
            while (ls >> tok) {
                if (tok.size() != 1) fail("image letters must be single characters");
                img += tok[0];
            }
            images[from[0]] = img;
        } else if (key == "seed") {
            std::string tok;
            if (!(ls >> tok) || tok.size() != 1) fail("expected: seed <letter>");
            seed = tok[0];
            have_seed = true;
        } else if (key == "code") {
            std::string from, arrow, to;
            if (!(ls >> from >> arrow >> to) || from.size() != 1 || arrow != "->" || to.size() != 1)
                fail("expected: code <letter> -> <symbol>");
            coding[from[0]] = to[0];
        } else {
            fail("unknown declaration '" + key + "'");
        }
    }
    lineno = 0;
    if (base < 2) fail("missing or bad 'base'");
    if (letters.empty()) fail("missing 'letters'");
    if (!have_seed) fail("missing 'seed'");
    return UniformMorphism(base, std::move(letters), std::move(images), seed, std::move(coding));
}

}  // namespace factorbound
