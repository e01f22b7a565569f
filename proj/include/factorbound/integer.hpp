// Unbounded integer support. GMP does the limb work; the helpers below keep
// mpz_* calls out of the rest of the code base.
#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace factorbound {

using Int = mpz_class;

// gmpxx has no long long constructors; these assume LP64.
inline Int make_int(long long v) { return Int(static_cast<long>(v)); }
inline Int make_int(unsigned long long v) { return Int(static_cast<unsigned long>(v)); }

inline Int parse_int(std::string_view text) {
    if (text.empty()) throw std::invalid_argument("empty integer literal");
    Int v;
    if (mpz_set_str(v.get_mpz_t(), std::string(text).c_str(), 10) != 0)
        throw std::invalid_argument("bad integer literal: " + std::string(text));
    return v;
}

inline std::string to_string(const Int& v) { return v.get_str(); }

/// floor(sqrt(n)); n must be nonnegative.
inline Int isqrt(const Int& n) {
    if (n < 0) throw std::domain_error("isqrt of negative value");
    Int r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

inline bool is_perfect_square(const Int& n) {
    return n >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

/// Division rounding toward -inf; divisor must be nonzero.
inline Int floordiv(const Int& n, const Int& d) {
    if (d == 0) throw std::domain_error("division by zero");
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
    return q;
}

inline Int gcd(const Int& a, const Int& b) {
    Int g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

inline Int pow_ui(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline long long to_int64_checked(const Int& v) {
    if (!v.fits_slong_p()) throw std::overflow_error("integer does not fit in 64 bits");
    return static_cast<long long>(v.get_si());
}

}  // namespace factorbound
