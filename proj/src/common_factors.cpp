#include "factorbound/common_factors.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <vector>

namespace factorbound {

CommonFactorReport common_factors(const UniformMorphism& m, const SturmianSpec& spec, int max_len,
                                  int morphism_rounds, std::size_t sturmian_prefix_cap) {
    if (max_len < 1) throw std::invalid_argument("max_len must be positive");
    CommonFactorReport rep;
    rep.lengths[0] = {Word()};

    std::vector<FactorSet> automatic = factor_table(m, max_len, morphism_rounds);
    for (int n = 1; n <= max_len; ++n) {
        const FactorSet& xs = automatic[static_cast<std::size_t>(n - 1)];
        FactorSet as = spec.factor_set(n, sturmian_prefix_cap);
        if (!xs.certified || !as.certified) {
            rep.uncertified_at = n;
            return rep;
        }
        std::set<Word> common;
        std::set_intersection(xs.factors.begin(), xs.factors.end(), as.factors.begin(),
                              as.factors.end(), std::inserter(common, common.begin()));
        bool empty = common.empty();
        rep.lengths[n] = std::move(common);
        if (empty) {
            rep.exhausted = true;
            break;
        }
        rep.longest = n;
    }
    return rep;
}

namespace {

// Suffix automaton with first-occurrence tracking. All strings in one state
// share the same end-position set, so first_end is per state.
class SuffixAutomaton {
public:
    explicit SuffixAutomaton(std::string_view text) {
        states_.reserve(2 * text.size() + 2);
        states_.push_back({-1, 0, -1, {}});
        int last = 0;
        for (std::size_t i = 0; i < text.size(); ++i) last = extend(text[i], last, static_cast<long long>(i));
    }

    // Longest match of any factor of `text` ending at each position of the
    // streamed word; reports overall best (length, earliest end in stream).
    struct StreamBest {
        std::size_t length = 0;
        std::size_t end = 0;  // end index (inclusive) in the streamed word
    };
    StreamBest stream(std::string_view w) const {
        StreamBest best;
        int cur = 0;
        std::size_t len = 0;
        for (std::size_t i = 0; i < w.size(); ++i) {
            char c = w[i];
            while (cur != 0 && !has(cur, c)) {
                cur = states_[static_cast<std::size_t>(cur)].link;
                len = static_cast<std::size_t>(states_[static_cast<std::size_t>(cur)].len);
            }
            if (has(cur, c)) {
                cur = get(cur, c);
                ++len;
            } else {
                cur = 0;
                len = 0;
            }
            if (len > best.length) {
                best.length = len;
                best.end = i;
            }
        }
        return best;
    }

    /// First (leftmost) end position of w in the indexed text; w must occur.
    std::size_t first_end_of(std::string_view w) const {
        int cur = 0;
        for (char c : w) {
            if (!has(cur, c)) throw std::logic_error("witness not found in suffix automaton");
            cur = get(cur, c);
        }
        return static_cast<std::size_t>(states_[static_cast<std::size_t>(cur)].first_end);
    }

private:
    struct State {
        int link;
        int len;
        long long first_end;
        std::map<char, int> next;
    };
    std::vector<State> states_;

    bool has(int s, char c) const { return states_[static_cast<std::size_t>(s)].next.count(c) != 0; }
    int get(int s, char c) const { return states_[static_cast<std::size_t>(s)].next.at(c); }

    int extend(char c, int last, long long pos) {
        int cur = static_cast<int>(states_.size());
        states_.push_back({-1, states_[static_cast<std::size_t>(last)].len + 1, pos, {}});
        int p = last;
        while (p != -1 && !has(p, c)) {
            states_[static_cast<std::size_t>(p)].next[c] = cur;
            p = states_[static_cast<std::size_t>(p)].link;
        }
        if (p == -1) {
            states_[static_cast<std::size_t>(cur)].link = 0;
        } else {
            int q = get(p, c);
            if (states_[static_cast<std::size_t>(p)].len + 1 == states_[static_cast<std::size_t>(q)].len) {
                states_[static_cast<std::size_t>(cur)].link = q;
            } else {
                int clone = static_cast<int>(states_.size());
                states_.push_back(states_[static_cast<std::size_t>(q)]);
                states_[static_cast<std::size_t>(clone)].len =
                    states_[static_cast<std::size_t>(p)].len + 1;
                // The clone inherits q's end positions (plus the new one),
                // so its first occurrence is q's.
                while (p != -1 && has(p, c) && get(p, c) == q) {
                    states_[static_cast<std::size_t>(p)].next[c] = clone;
                    p = states_[static_cast<std::size_t>(p)].link;
                }
                states_[static_cast<std::size_t>(q)].link = clone;
                states_[static_cast<std::size_t>(cur)].link = clone;
            }
        }
        return cur;
    }
};

}  // namespace

LcfResult longest_common_factor_prefix(std::string_view x_prefix, std::string_view a_prefix) {
    if (x_prefix.empty() || a_prefix.empty())
        throw std::invalid_argument("both prefixes must be nonempty");
    SuffixAutomaton sam(a_prefix);
    auto best = sam.stream(x_prefix);
    LcfResult res;
    res.length = best.length;
    if (best.length == 0) return res;
    res.pos_first = best.end + 1 - best.length;
    res.witness = Word(x_prefix.substr(res.pos_first, best.length));
    res.pos_second = sam.first_end_of(res.witness) + 1 - best.length;
    return res;
}

}  // namespace factorbound
