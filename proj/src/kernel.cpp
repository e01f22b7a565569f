#include "factorbound/kernel.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace factorbound {

std::vector<int> moore_classes(const Dfao& dfao) {
    const int n = dfao.state_count();
    const int k = dfao.base();

    // Initial partition by output symbol, then refine by successor classes.
    std::vector<int> cls(static_cast<std::size_t>(n));
    {
        std::map<char, int> by_out;
        for (int s = 0; s < n; ++s) {
            auto [it, fresh] = by_out.emplace(dfao.output(s), static_cast<int>(by_out.size()));
            cls[static_cast<std::size_t>(s)] = it->second;
        }
    }
    for (;;) {
        std::map<std::vector<int>, int> sig_ids;
        std::vector<int> next_cls(static_cast<std::size_t>(n));
        for (int s = 0; s < n; ++s) {
            std::vector<int> sig;
            sig.reserve(static_cast<std::size_t>(k) + 1);
            sig.push_back(cls[static_cast<std::size_t>(s)]);
            for (int d = 0; d < k; ++d)
                sig.push_back(cls[static_cast<std::size_t>(dfao.next(s, d))]);
            auto [it, fresh] = sig_ids.emplace(std::move(sig), static_cast<int>(sig_ids.size()));
            next_cls[static_cast<std::size_t>(s)] = it->second;
        }
        bool stable = true;
        for (int s = 0; s < n && stable; ++s)
            stable = next_cls[static_cast<std::size_t>(s)] == cls[static_cast<std::size_t>(s)];
        cls = std::move(next_cls);
        if (stable) break;
    }
    // Normalize ids by first occurrence so results are deterministic.
    std::map<int, int> renum;
    for (int s = 0; s < n; ++s) {
        auto [it, fresh] = renum.emplace(cls[static_cast<std::size_t>(s)],
                                         static_cast<int>(renum.size()));
        cls[static_cast<std::size_t>(s)] = it->second;
    }
    return cls;
}

KernelReport kernel(const Dfao& dfao) {
    KernelReport rep;
    rep.state_class = moore_classes(dfao);
    rep.Q = *std::max_element(rep.state_class.begin(), rep.state_class.end()) + 1;

    // Close (r, s) pairs under one more (high-order) digit: the pair
    // (r+1, s + d*k^r) starts from next(state, d). Every automaton state is
    // reached this way, so the closure stops once all states are seen.
    const int k = dfao.base();
    std::vector<bool> seen(static_cast<std::size_t>(dfao.state_count()), false);
    struct Item {
        int r;
        long long s;
        long long kr;
        int state;
    };
    std::vector<Item> frontier{{0, 0, 1, dfao.initial()}};
    seen[static_cast<std::size_t>(dfao.initial())] = true;
    rep.explored.push_back({0, 0, rep.state_class[static_cast<std::size_t>(dfao.initial())]});
    for (std::size_t i = 0; i < frontier.size(); ++i) {
        Item it = frontier[i];
        for (int d = 0; d < k; ++d) {
            int t = dfao.next(it.state, d);
            Item child{it.r + 1, it.s + static_cast<long long>(d) * it.kr, it.kr * k, t};
            rep.explored.push_back(
                {child.r, child.s, rep.state_class[static_cast<std::size_t>(t)]});
            if (!seen[static_cast<std::size_t>(t)]) {
                seen[static_cast<std::size_t>(t)] = true;
                frontier.push_back(child);
            }
        }
    }
    std::sort(rep.explored.begin(), rep.explored.end(), [](const KernelEntry& a, const KernelEntry& b) {
        return std::tie(a.r, a.s) < std::tie(b.r, b.s);
    });
    rep.explored.erase(std::unique(rep.explored.begin(), rep.explored.end(),
                                   [](const KernelEntry& a, const KernelEntry& b) {
                                       return a.r == b.r && a.s == b.s;
                                   }),
                       rep.explored.end());

    std::vector<bool> have(static_cast<std::size_t>(rep.Q), false);
    for (const KernelEntry& e : rep.explored) {
        if (have[static_cast<std::size_t>(e.class_id)]) continue;
        have[static_cast<std::size_t>(e.class_id)] = true;
        std::vector<int> digits;
        long long s = e.s;
        for (int j = 0; j < e.r; ++j) {
            digits.push_back(static_cast<int>(s % k));
            s /= k;
        }
        rep.witnesses.push_back({e.class_id, e.r, e.s, dfao.state_after(digits)});
    }
    std::sort(rep.witnesses.begin(), rep.witnesses.end(),
              [](const KernelWitness& a, const KernelWitness& b) { return a.class_id < b.class_id; });
    return rep;
}

std::pair<long long, long long> colliding_pair(const Dfao& dfao, int r) {
    if (r < 0 || r > 40) throw std::invalid_argument("kernel depth r out of supported range");
    const int k = dfao.base();
    long long kr = 1;
    for (int i = 0; i < r; ++i) {
        kr *= k;
        if (kr > (1LL << 40)) throw std::invalid_argument("k^r too large to enumerate");
    }
    std::vector<int> cls = moore_classes(dfao);
    int Q = *std::max_element(cls.begin(), cls.end()) + 1;
    if (kr <= Q)
        throw std::invalid_argument("precondition k^r > Q fails: k^r = " + std::to_string(kr) +
                                    ", Q = " + std::to_string(Q));

    // First two residues per class; the winning class is the one whose
    // smallest member is least, which makes the pair lexicographically least.
    std::vector<std::pair<long long, long long>> firsts(static_cast<std::size_t>(Q), {-1, -1});
    std::vector<int> digits(static_cast<std::size_t>(r));
    for (long long s = 0; s < kr; ++s) {
        long long v = s;
        for (int j = 0; j < r; ++j) {
            digits[static_cast<std::size_t>(j)] = static_cast<int>(v % k);
            v /= k;
        }
        int c = cls[static_cast<std::size_t>(dfao.state_after(digits))];
        auto& slot = firsts[static_cast<std::size_t>(c)];
        if (slot.first < 0)
            slot.first = s;
        else if (slot.second < 0)
            slot.second = s;
    }
    std::pair<long long, long long> best{-1, -1};
    for (const auto& slot : firsts)
        if (slot.second >= 0 && (best.first < 0 || slot.first < best.first)) best = slot;
    if (best.first < 0)
        throw std::logic_error("pigeonhole violated: no kernel collision found");
    return best;
}

}  // namespace factorbound
