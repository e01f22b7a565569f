#include "factorbound/continued_fraction.hpp"

#include <map>
#include <stdexcept>

namespace factorbound {

const Int& ContinuedFraction::term(std::size_t i) const {
    if (i < terms.size()) return terms[i];
    if (period == 0) throw std::out_of_range("continued fraction truncated before this term");
    return terms[preperiod + (i - preperiod) % period];
}

ContinuedFraction continued_fraction(const QuadraticIrrational& q, std::size_t max_terms) {
    if (!q.is_irrational()) throw std::domain_error("rational input");
    if (q.signum() <= 0 || q >= QuadraticIrrational(1))
        throw std::domain_error("expansion requires a value in (0, 1)");

    // Bring q into the form (P + sqrt(D))/Q with Q | D - P^2.
    Int D = q.b() * q.b() * q.d();
    Int P, Q;
    if (q.b() > 0) {
        P = q.a();
        Q = q.c();
    } else {
        P = -q.a();
        Q = -q.c();
    }
    if ((D - P * P) % Q != 0) {
        Int m = Q < 0 ? Int(-Q) : Q;
        P *= m;
        D *= m * m;
        Q *= m;
    }

    ContinuedFraction cf;
    std::map<std::pair<Int, Int>, std::size_t> seen;
    for (std::size_t k = 0; k < max_terms; ++k) {
        auto [it, fresh] = seen.emplace(std::make_pair(P, Q), k);
        if (!fresh) {
            cf.preperiod = it->second;
            cf.period = k - it->second;
            cf.terms.resize(cf.preperiod + cf.period);
            return cf;
        }
        Int ak = QuadraticIrrational(P, 1, D, Q).floor();
        cf.terms.push_back(ak);
        P = ak * Q - P;
        Q = (D - P * P) / Q;
    }
    cf.preperiod = cf.terms.size();
    cf.period = 0;
    return cf;
}

std::vector<std::pair<Int, Int>> convergents(const ContinuedFraction& cf, std::size_t count) {
    std::vector<std::pair<Int, Int>> out;
    out.reserve(count);
    Int p_prev = 1, p_curr = 0;  // p_{-1}, p_{-2} convention folded in below
    Int q_prev = 0, q_curr = 1;
    for (std::size_t i = 0; i < count; ++i) {
        const Int& a = cf.term(i);
        Int p = a * p_prev + p_curr;
        Int q = a * q_prev + q_curr;
        out.emplace_back(p, q);
        p_curr = std::exchange(p_prev, p);
        q_curr = std::exchange(q_prev, q);
    }
    return out;
}

}  // namespace factorbound
