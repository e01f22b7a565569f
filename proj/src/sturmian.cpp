#include "factorbound/sturmian.hpp"

#include <sstream>
#include <stdexcept>

namespace factorbound {

SturmianSpec::SturmianSpec(QuadraticIrrational alpha, QuadraticIrrational beta)
    : alpha_(std::move(alpha)), beta_(std::move(beta)) {
    if (!alpha_.is_irrational()) throw std::domain_error("alpha must be irrational");
    if (alpha_.signum() <= 0 || alpha_ >= QuadraticIrrational(1))
        throw std::domain_error("alpha must lie in (0, 1)");
    if (beta_.signum() < 0 || beta_ >= QuadraticIrrational(1))
        throw std::domain_error("beta must lie in [0, 1)");
    if (beta_.is_irrational() && beta_.d() != alpha_.d())
        throw RadicandMismatch("beta must be rational or share alpha's radicand");
}

int SturmianSpec::mechanical_bit(unsigned long long n) const {
    if (n == 0) throw std::invalid_argument("mechanical bits are indexed from 1");
    QuadraticIrrational lo = alpha_.times(make_int(n)) + beta_;
    QuadraticIrrational hi = lo + alpha_;
    Int diff = hi.floor() - lo.floor();
    return static_cast<int>(diff.get_si());
}

std::string SturmianSpec::prefix(std::size_t N) const {
    std::string out;
    out.reserve(N);
    QuadraticIrrational q = alpha_ + beta_;  // n = 1 position
    Int prev = q.floor();
    for (std::size_t i = 0; i < N; ++i) {
        q = q + alpha_;
        Int cur = q.floor();
        out.push_back(cur == prev ? '0' : '1');
        prev = std::move(cur);
    }
    return out;
}

unsigned long long SturmianSpec::ones_count(std::size_t N) const {
    if (N == 0) throw std::invalid_argument("ones_count needs N >= 1");
    unsigned long long count = 0;
    QuadraticIrrational q = alpha_ + beta_;
    Int prev = q.floor();
    for (std::size_t i = 0; i < N; ++i) {
        q = q + alpha_;
        Int cur = q.floor();
        if (cur != prev) ++count;
        prev = std::move(cur);
    }
    return count;
}

FactorSet SturmianSpec::factor_set(int n, std::size_t prefix_cap) const {
    if (n < 1) throw std::invalid_argument("factor length must be positive");
    FactorSet fs;
    fs.length = n;

    const std::size_t target = static_cast<std::size_t>(n) + 1;
    std::string window;
    QuadraticIrrational q = alpha_ + beta_;
    Int prev = q.floor();
    std::size_t produced = 0;
    while (produced < prefix_cap) {
        q = q + alpha_;
        Int cur = q.floor();
        window.push_back(cur == prev ? '0' : '1');
        prev = std::move(cur);
        ++produced;
        if (window.size() > static_cast<std::size_t>(n)) window.erase(window.begin());
        if (window.size() == static_cast<std::size_t>(n)) {
            fs.factors.insert(window);
            if (fs.factors.size() == target) {
                fs.certified = true;
                fs.provenance = "complexity bound n+1 reached after a prefix of length " +
                                std::to_string(produced);
                return fs;
            }
        }
    }
    fs.certified = false;
    fs.provenance = "prefix cap " + std::to_string(prefix_cap) +
                    " exhausted before n+1 factors appeared";
    return fs;
}

int characteristic_bit(const QuadraticIrrational& alpha, unsigned long long n) {
    if (!alpha.is_irrational()) throw std::domain_error("alpha must be irrational");
    QuadraticIrrational lo = alpha.times(make_int(n) + 1);
    QuadraticIrrational hi = lo + alpha;
    Int diff = hi.floor() - lo.floor();
    return static_cast<int>(diff.get_si());
}

SturmianSpec SturmianSpec::parse(std::string_view text) {
    std::istringstream is{std::string(text)};
    std::string tok;
    QuadraticIrrational alpha, beta;
    bool have_alpha = false;
    while (is >> tok) {
        auto eq = tok.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("expected key=value in sturmian spec: " + tok);
        std::string key = tok.substr(0, eq);
        std::string val = tok.substr(eq + 1);
        if (key == "alpha") {
            alpha = QuadraticIrrational::parse(val);
            have_alpha = true;
        } else if (key == "beta") {
            beta = QuadraticIrrational::parse(val);
        } else {
            throw std::invalid_argument("unknown sturmian spec key: " + key);
        }
    }
    if (!have_alpha) throw std::invalid_argument("sturmian spec needs alpha=...");
    return SturmianSpec(std::move(alpha), std::move(beta));
}

std::string SturmianSpec::to_string() const {
    return "alpha=" + alpha_.to_string() + " beta=" + beta_.to_string();
}

}  // namespace factorbound
