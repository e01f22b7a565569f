// k-kernel of an automatic sequence: the subsequences (x_{n k^r + s}).
// In the canonical lsd automaton these correspond to states, so kernel
// equality is decided by automaton equivalence, never by prefix sampling.
#pragma once

#include <utility>
#include <vector>

#include "factorbound/dfao.hpp"

namespace factorbound {

struct KernelEntry {
    int r = 0;
    long long s = 0;
    int class_id = 0;
};

struct KernelWitness {
    int class_id = 0;
    int r = 0;
    long long s = 0;
    int state = 0;  ///< start state of the witness automaton inside the shared dfao
};

struct KernelReport {
    int Q = 0;                          ///< number of distinct kernel elements
    std::vector<KernelEntry> explored;  ///< (r, s) pairs visited by the closure, with class ids
    std::vector<KernelWitness> witnesses;  ///< one representative per class
    std::vector<int> state_class;          ///< Moore class of every automaton state
};

/// Moore equivalence classes of the automaton's states (equal outputs and
/// equivalent successors); class ids are normalized by first occurrence.
std::vector<int> moore_classes(const Dfao& dfao);

/// Kernel size Q and the class partition, by closing (r, s) exploration
/// under appending one more digit until no new classes appear.
KernelReport kernel(const Dfao& dfao);

/// Lexicographically least pair s1 < s2 < k^r whose kernel sequences are
/// equal. Requires k^r > Q (throws std::invalid_argument otherwise).
std::pair<long long, long long> colliding_pair(const Dfao& dfao, int r);

}  // namespace factorbound
