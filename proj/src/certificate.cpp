#include "factorbound/certificate.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "factorbound/kernel.hpp"

namespace factorbound {

namespace {

constexpr long long kResidueCap = 1LL << 20;

long long pow_checked(long long k, long long r) {
    long long v = 1;
    for (long long i = 0; i < r; ++i) {
        if (v > kResidueCap) throw std::overflow_error("k^r exceeds the supported range");
        v *= k;
    }
    if (v > kResidueCap) throw std::overflow_error("k^r exceeds the supported range");
    return v;
}

// floor((i + C - 1 - s2)/kr) - ceil((i - s1)/kr) + 1: the number of n with
// i <= n*kr + s1 and n*kr + s2 <= i + C - 1. Depends on i only mod kr.
long long window_count(long long i, long long C, long long kr, long long s1, long long s2) {
    auto fdiv = [](long long a, long long b) {
        long long q = a / b;
        if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
        return q;
    };
    long long hi = fdiv(i + C - 1 - s2, kr);
    long long lo = -fdiv(-(i - s1), kr);  // ceil
    return hi - lo + 1;
}

void check_window_count(long long C, long long kr, long long s1, long long s2, long long M) {
    for (long long i = 0; i < kr; ++i)
        if (window_count(i, C, kr, s1, s2) < M)
            throw std::logic_error("window-count inequality failed at residue " +
                                   std::to_string(i));
}

std::string ll(long long v) { return std::to_string(v); }

}  // namespace

GapProfile gap_profile(const QuadraticIrrational& theta, long long M) {
    if (!theta.is_irrational()) throw std::domain_error("theta must be irrational");
    if (theta.signum() <= 0 || theta >= QuadraticIrrational(1))
        throw std::domain_error("theta must lie in (0, 1)");
    if (M < 1) throw std::invalid_argument("need at least one orbit point");

    std::vector<QuadraticIrrational> points;
    points.reserve(static_cast<std::size_t>(M));
    QuadraticIrrational p;  // frac(0 * theta)
    const QuadraticIrrational one(1);
    for (long long n = 0; n < M; ++n) {
        points.push_back(p);
        p = p + theta;
        if (p >= one) p = p - one;
    }
    std::sort(points.begin(), points.end());

    std::map<QuadraticIrrational, long long> gaps;
    for (std::size_t i = 0; i + 1 < points.size(); ++i) gaps[points[i + 1] - points[i]] += 1;
    gaps[one - points.back() + points.front()] += 1;

    GapProfile prof;
    prof.theta = theta;
    prof.points = M;
    prof.gaps.assign(gaps.begin(), gaps.end());
    return prof;
}

QuadraticIrrational max_gap(const QuadraticIrrational& theta, long long M) {
    return gap_profile(theta, M).max_gap();
}

long long min_window(const QuadraticIrrational& theta, const QuadraticIrrational& epsilon) {
    if (!theta.is_irrational()) throw std::domain_error("theta must be irrational");
    if (epsilon.signum() <= 0 || epsilon >= QuadraticIrrational(1))
        throw std::domain_error("epsilon must lie in (0, 1)");

    constexpr long long kCap = 1LL << 22;
    long long hi = 2;
    while (max_gap(theta, hi) >= epsilon) {
        hi *= 2;
        if (hi > kCap) throw std::overflow_error("window search exceeded the cap");
    }
    long long lo = hi / 2;  // max_gap(theta, lo) >= epsilon (lo = 1 gives gap 1)
    while (hi - lo > 1) {
        long long mid = lo + (hi - lo) / 2;
        if (max_gap(theta, mid) < epsilon)
            hi = mid;
        else
            lo = mid;
    }
    return hi;
}

BoundCertificate certify(const Dfao& dfao, const QuadraticIrrational& alpha) {
    if (!alpha.is_irrational()) throw std::domain_error("alpha must be irrational");
    if (alpha.signum() <= 0 || alpha >= QuadraticIrrational(1))
        throw std::domain_error("alpha must lie in (0, 1)");

    BoundCertificate cert;
    cert.k = dfao.base();

    KernelReport kr_rep = kernel(dfao);
    cert.Q = kr_rep.Q;
    cert.transcript.push_back({"kernel",
                               {{"k", ll(cert.k)}},
                               {{"Q", ll(cert.Q)}},
                               "distinct kernel subsequences, by automaton equivalence"});

    cert.r = 0;
    long long kr = 1;
    while (kr <= cert.Q) {
        kr *= cert.k;
        ++cert.r;
        if (kr > kResidueCap) throw std::overflow_error("k^r exceeds the supported range");
    }
    cert.transcript.push_back({"choose-r",
                               {{"Q", ll(cert.Q)}},
                               {{"r", ll(cert.r)}, {"k^r", ll(kr)}},
                               "least r with k^r > Q"});

    auto [s1, s2] = colliding_pair(dfao, static_cast<int>(cert.r));
    cert.s1 = s1;
    cert.s2 = s2;
    cert.delta = s2 - s1;
    cert.transcript.push_back({"colliding-pair",
                               {{"r", ll(cert.r)}},
                               {{"s1", ll(s1)}, {"s2", ll(s2)}, {"delta", ll(cert.delta)}},
                               "lexicographically least residues with equal kernel sequences"});

    QuadraticIrrational dist = alpha.times(make_int(cert.delta)).dist_to_integers();
    QuadraticIrrational one_minus = QuadraticIrrational(1) - alpha;
    cert.epsilon = dist;
    if (alpha < cert.epsilon) cert.epsilon = alpha;
    if (one_minus < cert.epsilon) cert.epsilon = one_minus;
    if (cert.epsilon.signum() <= 0) throw std::logic_error("epsilon must be positive");
    cert.transcript.push_back(
        {"epsilon",
         {{"delta", ll(cert.delta)}, {"alpha", alpha.to_string()}},
         {{"dist(delta*alpha)", dist.to_string()}, {"epsilon", cert.epsilon.to_string()}},
         "alignment-free: positions offset by delta have bits of circle points offset by "
         "delta*alpha, and the set where the two bits differ is two arcs of length "
         "min(dist(delta*alpha), alpha, 1-alpha) each"});

    cert.theta = alpha.times(make_int(kr)).frac();
    cert.transcript.push_back({"theta",
                               {{"k^r", ll(kr)}, {"alpha", alpha.to_string()}},
                               {{"theta", cert.theta.to_string()}},
                               "orbit step of n -> frac(n * k^r * alpha)"});

    cert.M = min_window(cert.theta, cert.epsilon);
    cert.transcript.push_back(
        {"window",
         {{"theta", cert.theta.to_string()}, {"epsilon", cert.epsilon.to_string()}},
         {{"M", ll(cert.M)}, {"max_gap", max_gap(cert.theta, cert.M).to_string()}},
         "least M whose M-point orbit has every circular gap below epsilon; rotation "
         "invariance extends this to every window of M consecutive n and every phase"});

    if (cert.M > (1LL << 22) || kr > kResidueCap)
        throw std::overflow_error("certificate parameters exceed the supported range");
    cert.C = (cert.M + 1) * kr + cert.delta + 1;
    check_window_count(cert.C, kr, cert.s1, cert.s2, cert.M);
    cert.transcript.push_back(
        {"bound",
         {{"M", ll(cert.M)}, {"k^r", ll(kr)}, {"delta", ll(cert.delta)}},
         {{"C", ll(cert.C)}},
         "C = (M+1)*k^r + delta + 1; checked over all alignment residues that any common "
         "factor of length >= C leaves at least M consecutive usable n. The underlying "
         "alignment offsets enter only through delta; whether the specific target interval "
         "(rather than phase-free gaps) could give a smaller C is left open"});
    return cert;
}

VerifyResult verify(const BoundCertificate& cert, const Dfao& dfao,
                    const QuadraticIrrational& alpha) {
    auto fail = [](const char* step) { return VerifyResult{false, step}; };

    if (!alpha.is_irrational() || alpha.signum() <= 0 || alpha >= QuadraticIrrational(1))
        return fail("alpha-range");
    if (cert.k != dfao.base() || cert.r < 1 || cert.k < 2) return fail("base");

    long long kr;
    try {
        kr = pow_checked(cert.k, cert.r);
    } catch (const std::overflow_error&) {
        return fail("base");
    }

    std::vector<int> cls = moore_classes(dfao);
    long long Q = *std::max_element(cls.begin(), cls.end()) + 1;
    if (Q != cert.Q) return fail("kernel-size");
    if (kr <= cert.Q) return fail("r-bound");

    if (!(0 <= cert.s1 && cert.s1 < cert.s2 && cert.s2 < kr)) return fail("s-range");
    auto state_of = [&](long long s) {
        std::vector<int> digits(static_cast<std::size_t>(cert.r));
        for (std::size_t j = 0; j < digits.size(); ++j) {
            digits[j] = static_cast<int>(s % cert.k);
            s /= cert.k;
        }
        return dfao.state_after(digits);
    };
    if (cls[static_cast<std::size_t>(state_of(cert.s1))] !=
        cls[static_cast<std::size_t>(state_of(cert.s2))])
        return fail("s-collision");
    if (cert.delta != cert.s2 - cert.s1) return fail("delta");

    QuadraticIrrational dist = alpha.times(make_int(cert.delta)).dist_to_integers();
    if (cert.epsilon.signum() <= 0 || cert.epsilon > dist || cert.epsilon > alpha ||
        cert.epsilon > QuadraticIrrational(1) - alpha)
        return fail("epsilon-bound");

    if (cert.theta != alpha.times(make_int(kr)).frac()) return fail("theta");

    if (cert.M < 1 || cert.M > (1LL << 22)) return fail("gap");
    if (!(max_gap(cert.theta, cert.M) < cert.epsilon)) return fail("gap");

    if (cert.C != (cert.M + 1) * kr + cert.delta + 1) return fail("bound-formula");
    for (long long i = 0; i < kr; ++i)
        if (window_count(i, cert.C, kr, cert.s1, cert.s2) < cert.M) return fail("window-count");

    return VerifyResult{true, ""};
}

}  // namespace factorbound
