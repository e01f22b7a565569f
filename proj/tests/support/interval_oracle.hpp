// Test-only interval arithmetic: brackets a quadratic irrational between
// dyadic rationals at a configurable precision. Used as an independent
// numeric route to cross-check exact comparisons and orderings; never part
// of the production path.
#pragma once

#include <optional>

#include "factorbound/quadratic.hpp"

namespace factorbound::testing {

struct DyadicBracket {
    Int lo;  // value * 2^prec lies in [lo, hi]
    Int hi;
    int prec;
};

inline DyadicBracket bracket(const QuadraticIrrational& q, int prec = 128) {
    Int scale = pow_ui(2, static_cast<unsigned long>(prec));
    Int lo_num, hi_num;
    if (q.b() == 0) {
        lo_num = q.a() * scale;
        hi_num = lo_num;
    } else {
        // floor(|b| sqrt(d) * 2^prec) = isqrt(b^2 d 4^prec)
        Int root = isqrt(q.b() * q.b() * q.d() * scale * scale);
        if (q.b() > 0) {
            lo_num = q.a() * scale + root;
            hi_num = lo_num + 1;
        } else {
            hi_num = q.a() * scale - root;
            lo_num = hi_num - 1;
        }
    }
    return {floordiv(lo_num, q.c()), floordiv(hi_num, q.c()) + 1, prec};
}

/// Ordering decided from brackets alone; nullopt when the brackets straddle.
inline std::optional<std::strong_ordering> interval_compare(const QuadraticIrrational& x,
                                                            const QuadraticIrrational& y,
                                                            int prec = 256) {
    DyadicBracket bx = bracket(x, prec);
    DyadicBracket by = bracket(y, prec);
    if (bx.hi < by.lo) return std::strong_ordering::less;
    if (by.hi < bx.lo) return std::strong_ordering::greater;
    return std::nullopt;
}

}  // namespace factorbound::testing
