// Explicit bound certificates.
//
// The chain: the k-kernel of the automatic sequence has Q elements, so for
// k^r > Q two residues s1 < s2 < k^r carry identical kernel subsequences.
// Along any shared factor those residues force equal Sturmian bits at
// positions differing by delta = s2 - s1, i.e. equal values of the rule
// 1_{ {u} < alpha } at circle points u and u + delta*alpha. The set where
// those values differ is a pair of arcs of length min(alpha, 1-alpha,
// dist(delta*alpha, Z)) each, and the points {n*theta}, theta = {k^r
// alpha}, visit every arc of length epsilon once the largest gap of an
// M-point orbit drops below epsilon (the orbit over any M consecutive n is
// a rigid rotation of the base orbit). C is sized so that any common factor
// of length >= C spans at least M consecutive usable n, which is
// contradictory; hence every common factor is shorter than C.
//
// Everything in the certificate is re-checkable from scratch; `verify`
// recomputes each invariant exactly.
#pragma once

#include <string>
#include <utility>
#include <vector>

#include "factorbound/dfao.hpp"
#include "factorbound/quadratic.hpp"

namespace factorbound {

/// Exact circular gap structure of the orbit {frac(n*theta) : 0 <= n < M}.
/// The classic three-distance phenomenon shows up as at most three distinct
/// gap values; gaps always sum to exactly 1.
struct GapProfile {
    QuadraticIrrational theta;
    long long points = 0;
    /// Distinct gap values in increasing order with multiplicities.
    std::vector<std::pair<QuadraticIrrational, long long>> gaps;

    const QuadraticIrrational& max_gap() const { return gaps.back().first; }
};

GapProfile gap_profile(const QuadraticIrrational& theta, long long M);

/// Largest circular gap between consecutive orbit points; exact. Because
/// the orbit over n in [n0, n0+M) is a rotation of the base orbit, the
/// bound applies to every window of M consecutive integers at every phase.
QuadraticIrrational max_gap(const QuadraticIrrational& theta, long long M);

/// Least M with max_gap(theta, M) < epsilon, by doubling then bisection
/// (max_gap is non-increasing in M). Requires irrational theta and
/// 0 < epsilon < 1.
long long min_window(const QuadraticIrrational& theta, const QuadraticIrrational& epsilon);

struct TranscriptStep {
    std::string step;
    std::vector<std::pair<std::string, std::string>> inputs;
    std::vector<std::pair<std::string, std::string>> outputs;
    std::string note;

    bool operator==(const TranscriptStep&) const = default;
};

struct BoundCertificate {
    long long k = 0;
    long long Q = 0;
    long long r = 0;
    long long s1 = 0;
    long long s2 = 0;
    long long delta = 0;  ///< s2 - s1
    QuadraticIrrational epsilon;
    QuadraticIrrational theta;  ///< frac(k^r * alpha)
    long long M = 0;            ///< window length with max_gap(theta, M) < epsilon
    long long C = 0;            ///< (M + 1) * k^r + delta + 1

    std::vector<TranscriptStep> transcript;

    bool operator==(const BoundCertificate& o) const {
        return k == o.k && Q == o.Q && r == o.r && s1 == o.s1 && s2 == o.s2 &&
               delta == o.delta && epsilon == o.epsilon && theta == o.theta && M == o.M &&
               C == o.C && transcript == o.transcript;
    }
};

/// Builds the certificate for the pair (automatic sequence, slope alpha).
/// Deterministic; throws std::domain_error for rational alpha or alpha
/// outside (0, 1). The window-count inequality behind the C formula is
/// checked exhaustively over alignment residues before returning.
BoundCertificate certify(const Dfao& dfao, const QuadraticIrrational& alpha);

struct VerifyResult {
    bool ok = false;
    std::string failed_step;  ///< empty when ok

    explicit operator bool() const { return ok; }
};

/// Re-validates every certificate invariant from scratch: kernel size and
/// the s1/s2 collision by automaton equivalence, the epsilon bounds, theta,
/// the exact gap inequality, the C formula, and the window count.
VerifyResult verify(const BoundCertificate& cert, const Dfao& dfao,
                    const QuadraticIrrational& alpha);

}  // namespace factorbound
