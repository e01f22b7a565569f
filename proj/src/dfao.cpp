#include "factorbound/dfao.hpp"

#include <istream>
#include <map>
#include <queue>
#include <sstream>
#include <stdexcept>

namespace factorbound {

Dfao::Dfao(int base, int initial, std::vector<char> output,
           std::vector<std::vector<int>> transitions)
    : base_(base), initial_(initial), output_(std::move(output)),
      transitions_(std::move(transitions)) {
    if (base_ < 2) throw std::invalid_argument("base must be at least 2");
    if (output_.empty()) throw std::invalid_argument("automaton needs at least one state");
    if (output_.size() != transitions_.size())
        throw std::invalid_argument("output/transition tables disagree on state count");
    trim();
    validate();
}

void Dfao::validate() const {
    const int n = state_count();
    if (initial_ < 0 || initial_ >= n) throw std::invalid_argument("initial state out of range");
    for (int s = 0; s < n; ++s) {
        const auto& row = transitions_[static_cast<std::size_t>(s)];
        if (static_cast<int>(row.size()) != base_)
            throw std::invalid_argument("transition row must have one entry per digit");
        for (int t : row)
            if (t < 0 || t >= n) throw std::invalid_argument("transition target out of range");
    }
    // Zero-robustness: a high-order zero digit must not change the output.
    for (int s = 0; s < n; ++s)
        if (output(next(s, 0)) != output(s))
            throw std::invalid_argument(
                "automaton is not zero-robust (digit 0 changes the output from state " +
                std::to_string(s) + ")");
}

void Dfao::trim() {
    const int n = static_cast<int>(output_.size());
    std::vector<int> remap(static_cast<std::size_t>(n), -1);
    std::queue<int> bfs;
    remap[static_cast<std::size_t>(initial_)] = 0;
    bfs.push(initial_);
    int count = 1;
    while (!bfs.empty()) {
        int s = bfs.front();
        bfs.pop();
        for (int t : transitions_[static_cast<std::size_t>(s)]) {
            if (t < 0 || t >= n) throw std::invalid_argument("transition target out of range");
            if (remap[static_cast<std::size_t>(t)] < 0) {
                remap[static_cast<std::size_t>(t)] = count++;
                bfs.push(t);
            }
        }
    }
    if (count == n) return;
    std::vector<char> out(static_cast<std::size_t>(count));
    std::vector<std::vector<int>> trans(static_cast<std::size_t>(count));
    for (int s = 0; s < n; ++s) {
        int ns = remap[static_cast<std::size_t>(s)];
        if (ns < 0) continue;
        out[static_cast<std::size_t>(ns)] = output_[static_cast<std::size_t>(s)];
        auto& row = trans[static_cast<std::size_t>(ns)];
        row.reserve(transitions_[static_cast<std::size_t>(s)].size());
        for (int t : transitions_[static_cast<std::size_t>(s)])
            row.push_back(remap[static_cast<std::size_t>(t)]);
    }
    initial_ = 0;
    output_ = std::move(out);
    transitions_ = std::move(trans);
}

std::vector<int> Dfao::digits(unsigned long long n) const {
    std::vector<int> ds;
    while (n > 0) {
        ds.push_back(static_cast<int>(n % static_cast<unsigned long long>(base_)));
        n /= static_cast<unsigned long long>(base_);
    }
    return ds;
}

int Dfao::state_after(std::span<const int> lsd_digits) const {
    int s = initial_;
    for (int d : lsd_digits) {
        if (d < 0 || d >= base_) throw std::invalid_argument("digit out of range");
        s = next(s, d);
    }
    return s;
}

char Dfao::evaluate_digits(std::span<const int> lsd_digits) const {
    return output(state_after(lsd_digits));
}

char Dfao::evaluate(unsigned long long n) const {
    auto ds = digits(n);
    return evaluate_digits(ds);
}

Dfao msd_to_lsd(const MsdDfao& msd) {
    const int n = static_cast<int>(msd.output.size());
    const int k = msd.base;
    if (msd.transitions[static_cast<std::size_t>(msd.initial)][0] != msd.initial)
        throw std::invalid_argument(
            "msd automaton must loop on digit 0 at its initial state (leading zeros)");

    // States of the lsd automaton are reachable maps g: state -> state;
    // reading a new (higher-order) digit d sends g to g . delta_d.
    std::vector<int> identity(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) identity[static_cast<std::size_t>(i)] = i;

    std::map<std::vector<int>, int> ids;
    std::vector<std::vector<int>> maps;
    std::vector<std::vector<int>> trans;
    std::vector<char> out;
    auto intern = [&](std::vector<int> g) {
        auto [it, fresh] = ids.emplace(std::move(g), static_cast<int>(maps.size()));
        if (fresh) {
            maps.push_back(it->first);
            trans.emplace_back();
            out.push_back(
                msd.output[static_cast<std::size_t>(it->first[static_cast<std::size_t>(msd.initial)])]);
        }
        return it->second;
    };

    constexpr std::size_t kStateCap = 1 << 16;
    int start = intern(identity);
    for (std::size_t cur = 0; cur < maps.size(); ++cur) {
        if (maps.size() > kStateCap)
            throw std::runtime_error("msd-to-lsd conversion exceeded the state cap");
        std::vector<int> row(static_cast<std::size_t>(k));
        for (int d = 0; d < k; ++d) {
            std::vector<int> g(static_cast<std::size_t>(n));
            for (int q = 0; q < n; ++q)
                g[static_cast<std::size_t>(q)] =
                    maps[cur][static_cast<std::size_t>(
                        msd.transitions[static_cast<std::size_t>(q)][static_cast<std::size_t>(d)])];
            row[static_cast<std::size_t>(d)] = intern(std::move(g));
        }
        trans[cur] = std::move(row);
    }
    return Dfao(k, start, std::move(out), std::move(trans));
}

Dfao msd_to_lsd(const Dfao& msd) {
    MsdDfao m;
    m.base = msd.base();
    m.initial = msd.initial();
    m.output.resize(static_cast<std::size_t>(msd.state_count()));
    m.transitions.resize(static_cast<std::size_t>(msd.state_count()));
    for (int s = 0; s < msd.state_count(); ++s) {
        m.output[static_cast<std::size_t>(s)] = msd.output(s);
        auto& row = m.transitions[static_cast<std::size_t>(s)];
        row.resize(static_cast<std::size_t>(msd.base()));
        for (int d = 0; d < msd.base(); ++d) row[static_cast<std::size_t>(d)] = msd.next(s, d);
    }
    return msd_to_lsd(m);
}

Dfao Dfao::load_text(std::istream& in) {
    int base = -1, states = -1, initial = -1;
    bool msd = false;
    std::vector<std::pair<int, char>> outputs;
    std::vector<std::tuple<int, int, int>> edges;

    std::string line;
    int lineno = 0;
    auto fail = [&](const std::string& msg) {
        throw std::invalid_argument("dfao line " + std::to_string(lineno) + ": " + msg);
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
        } else if (key == "states") {
            if (!(ls >> states)) fail("expected: states <count>");
        } else if (key == "initial") {
            if (!(ls >> initial)) fail("expected: initial <state>");
        } else if (key == "reading") {
            std::string conv;
            if (!(ls >> conv) || (conv != "lsd" && conv != "msd"))
                fail("expected: reading lsd|msd");
            msd = conv == "msd";
        } else if (key == "output") {
            int s;
            std::string arrow, sym;
            if (!(ls >> s >> arrow >> sym) || arrow != "->" || sym.size() != 1)
                fail("expected: output <state> -> <symbol>");
            outputs.emplace_back(s, sym[0]);
        } else if (key == "transition") {
            int s, d, t;
            std::string arrow;
            if (!(ls >> s >> d >> arrow >> t) || arrow != "->")
                fail("expected: transition <state> <digit> -> <state>");
            edges.emplace_back(s, d, t);
        } else {
            fail("unknown declaration '" + key + "'");
        }
    }
    lineno = 0;
    if (base < 2) fail("missing or bad 'base'");
    if (states < 1) fail("missing or bad 'states'");
    if (initial < 0 || initial >= states) fail("missing or bad 'initial'");

    std::vector<char> out(static_cast<std::size_t>(states), '\0');
    std::vector<bool> have_out(static_cast<std::size_t>(states), false);
    for (auto [s, sym] : outputs) {
        if (s < 0 || s >= states) fail("output state out of range");
        out[static_cast<std::size_t>(s)] = sym;
        have_out[static_cast<std::size_t>(s)] = true;
    }
    for (int s = 0; s < states; ++s)
        if (!have_out[static_cast<std::size_t>(s)])
            fail("state " + std::to_string(s) + " has no output");
    std::vector<std::vector<int>> trans(static_cast<std::size_t>(states),
                                        std::vector<int>(static_cast<std::size_t>(base), -1));
    for (auto [s, d, t] : edges) {
        if (s < 0 || s >= states || t < 0 || t >= states) fail("transition state out of range");
        if (d < 0 || d >= base) fail("transition digit out of range");
        trans[static_cast<std::size_t>(s)][static_cast<std::size_t>(d)] = t;
    }
    for (int s = 0; s < states; ++s)
        for (int d = 0; d < base; ++d)
            if (trans[static_cast<std::size_t>(s)][static_cast<std::size_t>(d)] < 0)
                fail("missing transition for state " + std::to_string(s) + " digit " +
                     std::to_string(d));

    if (msd) return msd_to_lsd(MsdDfao{base, initial, std::move(out), std::move(trans)});
    return Dfao(base, initial, std::move(out), std::move(trans));
}

}  // namespace factorbound
