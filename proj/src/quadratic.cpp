#include "factorbound/quadratic.hpp"

#include <cctype>
#include <sstream>
#include <utility>

namespace factorbound {

namespace {

int sgn(const Int& v) { return v < 0 ? -1 : (v > 0 ? 1 : 0); }

// Pulls the square part out of d: returns (f, d0) with d = f^2 * d0 and d0
// squarefree as far as trial division by primes <= 10^4 can see (followed by
// a perfect-square check on the cofactor). All radicands in practice are
// tiny, so this is exhaustive for them.
std::pair<Int, Int> extract_square_part(Int d) {
    Int f = 1;
    if (d <= 1) return {f, d};
    for (long p = 2; p <= 10000 && Int(p) * p <= d; p = (p == 2 ? 3 : p + 2)) {
        Int p2 = Int(p) * p;
        while (d % p2 == 0) {
            d /= p2;
            f *= p;
        }
    }
    if (is_perfect_square(d)) {
        f *= isqrt(d);
        d = 1;
    }
    return {f, d};
}

}  // namespace

int sign_of_surd(const Int& a, const Int& b, const Int& d) {
    if (d < 0) throw std::domain_error("negative radicand");
    if (b == 0 || d == 0) return sgn(a);
    if (is_perfect_square(d)) return sgn(a + b * isqrt(d));
    if (a == 0) return sgn(b);
    int sa = sgn(a), sb = sgn(b);
    if (sa == sb) return sa;
    // Opposite signs: |a| vs |b|*sqrt(d) decided by squaring.
    return sa * sgn(a * a - b * b * d);
}

QuadraticIrrational::QuadraticIrrational(Int num, Int den)
    : a_(std::move(num)), b_(0), d_(0), c_(std::move(den)) {
    normalize();
}

QuadraticIrrational::QuadraticIrrational(Int a, Int b, Int d, Int c)
    : a_(std::move(a)), b_(std::move(b)), d_(std::move(d)), c_(std::move(c)) {
    normalize();
}

void QuadraticIrrational::normalize() {
    if (c_ == 0) throw std::domain_error("zero denominator");
    if (d_ < 0) throw std::domain_error("negative radicand");
    if (c_ < 0) {
        a_ = -a_;
        b_ = -b_;
        c_ = -c_;
    }
    if (b_ == 0) {
        d_ = 0;
    } else if (is_perfect_square(d_)) {
        a_ += b_ * isqrt(d_);
        b_ = 0;
        d_ = 0;
    } else {
        auto [f, d0] = extract_square_part(d_);
        if (f > 1) {
            b_ *= f;
            d_ = d0;
        }
    }
    Int g = gcd(gcd(a_, b_), c_);
    if (g > 1) {
        a_ /= g;
        b_ /= g;
        c_ /= g;
    }
    if (a_ == 0 && b_ == 0) c_ = 1;
}

int QuadraticIrrational::signum() const { return sign_of_surd(a_, b_, d_); }

QuadraticIrrational QuadraticIrrational::operator-() const {
    QuadraticIrrational r = *this;
    r.a_ = -r.a_;
    r.b_ = -r.b_;
    return r;
}

QuadraticIrrational QuadraticIrrational::operator+(const QuadraticIrrational& o) const {
    if (b_ != 0 && o.b_ != 0 && d_ != o.d_)
        throw RadicandMismatch("cannot add values with radicands " + factorbound::to_string(d_) +
                               " and " + factorbound::to_string(o.d_));
    const Int& d = b_ != 0 ? d_ : o.d_;
    return {a_ * o.c_ + o.a_ * c_, b_ * o.c_ + o.b_ * c_, d, c_ * o.c_};
}

QuadraticIrrational QuadraticIrrational::operator-(const QuadraticIrrational& o) const {
    return *this + (-o);
}

QuadraticIrrational QuadraticIrrational::operator*(const QuadraticIrrational& o) const {
    if (b_ != 0 && o.b_ != 0 && d_ != o.d_)
        throw RadicandMismatch("cannot multiply values with radicands " +
                               factorbound::to_string(d_) + " and " +
                               factorbound::to_string(o.d_));
    const Int& d = b_ != 0 ? d_ : o.d_;
    return {a_ * o.a_ + b_ * o.b_ * d, a_ * o.b_ + b_ * o.a_, d, c_ * o.c_};
}

QuadraticIrrational QuadraticIrrational::times(const Int& n) const {
    return {a_ * n, b_ * n, d_, c_};
}

QuadraticIrrational QuadraticIrrational::inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero");
    // 1 / ((a + b sqrt(d)) / c) = c (a - b sqrt(d)) / (a^2 - b^2 d)
    return {c_ * a_, -(c_ * b_), d_, a_ * a_ - b_ * b_ * d_};
}

Int QuadraticIrrational::floor() const {
    if (b_ == 0) return floordiv(a_, c_);
    // floor(b sqrt(d)) first; b^2 d is never a perfect square here.
    Int s = isqrt(b_ * b_ * d_);
    Int fb = b_ > 0 ? s : -(s + 1);
    return floordiv(a_ + fb, c_);
}

QuadraticIrrational QuadraticIrrational::frac() const {
    return {a_ - floor() * c_, b_, d_, c_};
}

QuadraticIrrational QuadraticIrrational::dist_to_integers() const {
    QuadraticIrrational f = frac();
    QuadraticIrrational g = QuadraticIrrational(1) - f;
    return f <= g ? f : g;
}

std::strong_ordering operator<=>(const QuadraticIrrational& x, const QuadraticIrrational& y) {
    auto as_ordering = [](int s) {
        return s < 0 ? std::strong_ordering::less
                     : (s > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    };
    // Compare a1 c2 + b1 c2 sqrt(d1) against a2 c1 + b2 c1 sqrt(d2).
    Int A = x.a_ * y.c_ - y.a_ * x.c_;
    Int B = x.b_ * y.c_;
    Int E = y.b_ * x.c_;
    if (B == 0 && E == 0) return as_ordering(sgn(A));
    if (E == 0) return as_ordering(sign_of_surd(A, B, x.d_));
    if (B == 0) return as_ordering(sign_of_surd(A, -E, y.d_));
    if (x.d_ == y.d_) return as_ordering(sign_of_surd(A, B - E, x.d_));

    // Mixed radicands: decide sign of A + T with T = B sqrt(d1) - E sqrt(d2).
    int sT;
    if (sgn(B) != sgn(E)) {
        sT = sgn(B);
    } else {
        sT = sgn(B) * sgn(B * B * x.d_ - E * E * y.d_);
    }
    if (A == 0) return as_ordering(sT);
    if (sT == 0) return as_ordering(sgn(A));
    if (sgn(A) == sT) return as_ordering(sgn(A));
    // A and T have opposite signs; compare magnitudes via
    // A^2 - T^2 = (A^2 - B^2 d1 - E^2 d2) + 2 B E sqrt(d1 d2).
    int mag = sign_of_surd(A * A - B * B * x.d_ - E * E * y.d_, 2 * B * E, x.d_ * y.d_);
    return as_ordering(sgn(A) * mag);
}

std::string QuadraticIrrational::to_string() const {
    std::ostringstream os;
    os << '(' << a_.get_str();
    if (b_ >= 0)
        os << '+' << b_.get_str();
    else
        os << '-' << Int(-b_).get_str();
    os << "*sqrt(" << d_.get_str() << "))/" << c_.get_str();
    return os.str();
}

std::string QuadraticIrrational::approx_decimal(int digits) const {
    Int scale = pow_ui(10, static_cast<unsigned long>(digits));
    bool neg = signum() < 0;
    // Truncate toward zero: floor of the absolute value.
    Int scaled = (neg ? -*this : *this).times(scale).floor();
    std::string s = scaled.get_str();
    if (static_cast<int>(s.size()) <= digits) s.insert(0, digits + 1 - s.size(), '0');
    s.insert(s.size() - digits, ".");
    return (neg ? "-" : "") + s;
}

namespace {

struct Cursor {
    std::string_view s;
    size_t i = 0;

    void skip_ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool eat(char c) {
        skip_ws();
        if (i < s.size() && s[i] == c) {
            ++i;
            return true;
        }
        return false;
    }
    bool eat_word(std::string_view w) {
        skip_ws();
        if (s.substr(i, w.size()) == w) {
            i += w.size();
            return true;
        }
        return false;
    }
    Int integer() {
        skip_ws();
        size_t start = i;
        if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
        size_t ds = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (i == ds) throw std::invalid_argument("expected integer in number literal");
        return parse_int(s.substr(start, i - start));
    }
    bool done() {
        skip_ws();
        return i == s.size();
    }
};

}  // namespace

QuadraticIrrational QuadraticIrrational::parse(std::string_view text) {
    Cursor c{text};
    if (c.eat('(')) {
        Int a = c.integer();
        c.skip_ws();
        if (c.i >= c.s.size() || (c.s[c.i] != '+' && c.s[c.i] != '-'))
            throw std::invalid_argument("expected sign in number literal: " + std::string(text));
        int bsign = c.s[c.i] == '-' ? -1 : 1;
        ++c.i;
        Int b = c.integer();
        if (!c.eat('*') || !c.eat_word("sqrt") || !c.eat('('))
            throw std::invalid_argument("expected *sqrt( in number literal: " + std::string(text));
        Int d = c.integer();
        if (!c.eat(')') || !c.eat(')') || !c.eat('/'))
            throw std::invalid_argument("expected ))/ in number literal: " + std::string(text));
        Int den = c.integer();
        if (!c.done()) throw std::invalid_argument("trailing input in number literal");
        return {std::move(a), bsign < 0 ? Int(-b) : b, std::move(d), std::move(den)};
    }
    Int num = c.integer();
    if (c.eat('/')) {
        Int den = c.integer();
        if (!c.done()) throw std::invalid_argument("trailing input in number literal");
        return {std::move(num), std::move(den)};
    }
    if (!c.done()) throw std::invalid_argument("trailing input in number literal");
    return {std::move(num)};
}

}  // namespace factorbound
