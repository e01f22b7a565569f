// Exact arithmetic over quadratic irrationals (a + b*sqrt(d))/c.
//
// Every value is kept in a normalized canonical form, every comparison is
// decided exactly by integer arithmetic (sign-tracked squaring for mixed
// radicands), and floor/frac are computed by integer square-root bracketing.
// No floating point anywhere.
#pragma once

#include <compare>
#include <string>
#include <string_view>

#include "factorbound/integer.hpp"

namespace factorbound {

/// Thrown when two values live in arithmetically incompatible radicand
/// classes (e.g. sqrt(2) + sqrt(3) is not representable here). Comparison
/// never throws this; only +, -, * do.
class RadicandMismatch : public std::domain_error {
public:
    explicit RadicandMismatch(const std::string& what) : std::domain_error(what) {}
};

/// Immutable exact real of the form (a + b*sqrt(d))/c with unbounded
/// integer fields. Normal form: c > 0, gcd(a, b, c) = 1, d squarefree
/// (square factors are pulled into b, perfect squares folded into a),
/// and b == 0 implies d == 0. Two normalized values are equal iff their
/// field tuples are equal. All operations are pure; instances are safe
/// to share across threads.
class QuadraticIrrational {
public:
    QuadraticIrrational() : a_(0), b_(0), d_(0), c_(1) {}
    QuadraticIrrational(Int value) : a_(std::move(value)), b_(0), d_(0), c_(1) {}
    QuadraticIrrational(Int num, Int den);
    QuadraticIrrational(Int a, Int b, Int d, Int c);

    static QuadraticIrrational sqrt_of(Int d) { return {0, 1, std::move(d), 1}; }

    /// Parses "(a+b*sqrt(d))/c" (also "-" before b); plain "n" and "n/c"
    /// are accepted as rationals. Result is normalized.
    static QuadraticIrrational parse(std::string_view text);

    const Int& a() const { return a_; }
    const Int& b() const { return b_; }
    const Int& d() const { return d_; }
    const Int& c() const { return c_; }

    bool is_rational() const { return b_ == 0; }
    /// True iff the value is irrational: b != 0 and d > 0 not a perfect
    /// square (normalization folds the degenerate cases away).
    bool is_irrational() const { return b_ != 0; }
    bool is_integer() const { return b_ == 0 && c_ == 1; }
    bool is_zero() const { return a_ == 0 && b_ == 0; }
    int signum() const;

    QuadraticIrrational operator-() const;
    QuadraticIrrational operator+(const QuadraticIrrational& o) const;
    QuadraticIrrational operator-(const QuadraticIrrational& o) const;
    QuadraticIrrational operator*(const QuadraticIrrational& o) const;
    QuadraticIrrational times(const Int& n) const;
    QuadraticIrrational inverse() const;

    /// Exact floor, via integer square-root bracketing of b*sqrt(d).
    Int floor() const;
    /// this - floor(this); always in [0, 1).
    QuadraticIrrational frac() const;
    /// Distance to the nearest integer: min(frac, 1 - frac), in [0, 1/2].
    QuadraticIrrational dist_to_integers() const;

    /// Canonical text form "(a+b*sqrt(d))/c".
    std::string to_string() const;
    /// Decimal approximation for display; truncated toward zero, computed
    /// exactly (never used in any decision path).
    std::string approx_decimal(int digits = 12) const;

    friend bool operator==(const QuadraticIrrational& x, const QuadraticIrrational& y) {
        return x.a_ == y.a_ && x.b_ == y.b_ && x.d_ == y.d_ && x.c_ == y.c_;
    }
    /// Exact order, total over all representable values; mixed radicands
    /// are resolved by sign-tracked squaring (degree <= 2, applied twice).
    friend std::strong_ordering operator<=>(const QuadraticIrrational& x,
                                            const QuadraticIrrational& y);

private:
    Int a_, b_, d_, c_;

    void normalize();
};

inline std::strong_ordering compare(const QuadraticIrrational& x, const QuadraticIrrational& y) {
    return x <=> y;
}

/// Sign of a + b*sqrt(d) for arbitrary d >= 0.
int sign_of_surd(const Int& a, const Int& b, const Int& d);

}  // namespace factorbound
