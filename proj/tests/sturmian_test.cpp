#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "factorbound/sturmian.hpp"
#include "support/oracles.hpp"

using namespace factorbound;
namespace ft = factorbound::testing;

namespace {

SturmianSpec fib_spec() { return SturmianSpec(ft::alpha_fibonacci()); }

int ones(const std::string& w) {
    return static_cast<int>(std::count(w.begin(), w.end(), '1'));
}

}  // namespace

TEST_CASE("spec validation") {
    CHECK_THROWS_AS(SturmianSpec(QuadraticIrrational(1, 2)), std::domain_error);  // rational
    CHECK_THROWS_AS(SturmianSpec(QuadraticIrrational(0, 1, 5, 1)), std::domain_error);  // > 1
    CHECK_THROWS_AS(SturmianSpec(ft::alpha_fibonacci(), QuadraticIrrational(3, 2)),
                    std::domain_error);  // beta out of range
    CHECK_THROWS_AS(SturmianSpec(ft::alpha_fibonacci(), ft::alpha_sqrt2()), RadicandMismatch);
    CHECK_NOTHROW(SturmianSpec(ft::alpha_fibonacci(), ft::alpha_fibonacci()));
    CHECK_NOTHROW(SturmianSpec(ft::alpha_fibonacci(), QuadraticIrrational(1, 2)));
}

TEST_CASE("fibonacci word prefix") {
    CHECK(fib_spec().prefix(8) == "01001010");
    CHECK(fib_spec().prefix(0).empty());
    CHECK(fib_spec().prefix(20) == ft::fibonacci_word_prefix(20));
    // longer stretch against the substitution-rule oracle
    CHECK(fib_spec().prefix(5000) == ft::fibonacci_word_prefix(5000));
}

TEST_CASE("characteristic bits match the emitted word") {
    QuadraticIrrational alpha = ft::alpha_fibonacci();
    std::string expect = "01001010";
    for (unsigned long long n = 0; n < 8; ++n)
        CHECK(characteristic_bit(alpha, n) == expect[static_cast<std::size_t>(n)] - '0');
    CHECK_THROWS_AS(characteristic_bit(QuadraticIrrational(1, 2), 0), std::domain_error);
}

TEST_CASE("telescoped floors agree with the fractional-part rule") {
    // bit(n) = floor((n+2)a) - floor((n+1)a) must equal 1_{ {(n+2)a} < a }.
    for (const QuadraticIrrational& alpha :
         {ft::alpha_fibonacci(), ft::alpha_golden(), ft::alpha_sqrt2()}) {
        QuadraticIrrational q = alpha;  // (n+1) alpha at n = 0
        for (unsigned long long n = 0; n < 10000; ++n) {
            QuadraticIrrational next = q + alpha;  // (n+2) alpha
            int telescoped = static_cast<int>(Int(next.floor() - q.floor()).get_si());
            int rule = next.frac() < alpha ? 1 : 0;
            REQUIRE(telescoped == rule);
            q = next;
        }
    }
}

TEST_CASE("mechanical bits") {
    SturmianSpec spec = fib_spec();
    // beta = 0 reduces to the characteristic word
    for (unsigned long long n = 1; n <= 10000; ++n)
        REQUIRE(spec.mechanical_bit(n) == characteristic_bit(spec.alpha(), n - 1));
    // difference of consecutive floors is always a bit
    SturmianSpec shifted(ft::alpha_golden(), QuadraticIrrational(1, 3));
    for (unsigned long long n = 1; n < 2000; ++n) {
        int b = shifted.mechanical_bit(n);
        CHECK((b == 0 || b == 1));
    }
    CHECK_THROWS_AS(spec.mechanical_bit(0), std::invalid_argument);
}

TEST_CASE("mechanical words with shifted intercept use the same factors") {
    SturmianSpec base = fib_spec();
    SturmianSpec shifted(ft::alpha_fibonacci(), QuadraticIrrational(1, 2));
    std::string w = shifted.prefix(400);
    for (int n : {1, 2, 3, 4, 5, 6, 7, 8}) {
        FactorSet fs = base.factor_set(n);
        for (const auto& f : ft::scan_factors(w, n)) CHECK(fs.contains(f));
    }
}

TEST_CASE("factor sets: fibonacci examples") {
    SturmianSpec spec = fib_spec();
    CHECK(spec.factor_set(1).factors == std::set<Word>{"0", "1"});
    CHECK(spec.factor_set(2).factors == std::set<Word>{"00", "01", "10"});
    FactorSet f4 = spec.factor_set(4);
    CHECK(f4.size() == 5);
    for (const char* w : {"0010", "0100", "0101", "1001", "1010"}) CHECK(f4.contains(w));
    CHECK(f4.certified);
}

TEST_CASE("factor sets match brute-force prefix scans") {
    SturmianSpec spec = fib_spec();
    std::string prefix = spec.prefix(10000);
    for (int n = 1; n <= 8; ++n) CHECK(spec.factor_set(n).factors == ft::scan_factors(prefix, n));
}

TEST_CASE("complexity is exactly n+1") {
    std::vector<QuadraticIrrational> alphas{
        ft::alpha_fibonacci(), ft::alpha_golden(), ft::alpha_sqrt2(),
        QuadraticIrrational(1, 1, 3, 4),    // (1 + sqrt(3))/4
        QuadraticIrrational(7, -1, 17, 8),  // (7 - sqrt(17))/8
    };
    for (const auto& alpha : alphas) {
        SturmianSpec spec(alpha);
        for (int n = 1; n <= 12; ++n) {
            FactorSet fs = spec.factor_set(n);
            REQUIRE(fs.certified);
            REQUIRE(fs.size() == static_cast<std::size_t>(n) + 1);
        }
    }
}

TEST_CASE("balance: ones counts of equal-length factors differ by at most 1") {
    for (const QuadraticIrrational& alpha :
         {ft::alpha_fibonacci(), ft::alpha_golden(), ft::alpha_sqrt2()}) {
        SturmianSpec spec(alpha);
        for (int n = 1; n <= 12; ++n) {
            FactorSet fs = spec.factor_set(n);
            int lo = n + 1, hi = -1;
            for (const Word& w : fs.factors) {
                lo = std::min(lo, ones(w));
                hi = std::max(hi, ones(w));
            }
            CHECK(hi - lo <= 1);
        }
    }
}

TEST_CASE("intercept does not change the factor set") {
    for (const QuadraticIrrational& alpha : {ft::alpha_fibonacci(), ft::alpha_sqrt2()}) {
        SturmianSpec base(alpha);
        SturmianSpec shifted(alpha, QuadraticIrrational(1, 2));
        for (int n = 1; n <= 10; ++n)
            CHECK(base.factor_set(n).factors == shifted.factor_set(n).factors);
    }
}

TEST_CASE("ones count: anchored and telescoped") {
    SturmianSpec spec = fib_spec();
    CHECK(spec.ones_count(8) == 3);
    CHECK(spec.ones_count(1) == static_cast<unsigned long long>(spec.prefix(1)[0] - '0'));

    // telescoping: count over n = 1..N equals floor((N+1) alpha) - floor(alpha)
    for (std::size_t N : {10UL, 100UL, 1234UL}) {
        Int expect = spec.alpha().times(make_int(static_cast<unsigned long long>(N) + 1)).floor() -
                     spec.alpha().floor();
        CHECK(make_int(spec.ones_count(N)) == expect);
    }
}

TEST_CASE("frequency: |count - N*alpha| < 1 exactly") {
    for (const QuadraticIrrational& alpha :
         {ft::alpha_fibonacci(), ft::alpha_golden(), ft::alpha_sqrt2()}) {
        SturmianSpec spec(alpha);
        for (std::size_t N : {100UL, 1000UL, 10000UL}) {
            unsigned long long count = spec.ones_count(N);
            QuadraticIrrational diff =
                QuadraticIrrational(make_int(count)) - alpha.times(make_int(static_cast<unsigned long long>(N)));
            if (diff.signum() < 0) diff = -diff;
            CHECK(diff < QuadraticIrrational(1));
        }
    }
}

TEST_CASE("spec parsing round trip") {
    SturmianSpec spec = SturmianSpec::parse("alpha=(3-1*sqrt(5))/2 beta=(0+0*sqrt(5))/1");
    CHECK(spec.alpha() == ft::alpha_fibonacci());
    CHECK(spec.beta().is_zero());
    CHECK(SturmianSpec::parse(spec.to_string()).alpha() == spec.alpha());
    CHECK_THROWS_AS(SturmianSpec::parse("beta=1/2"), std::invalid_argument);
    CHECK_THROWS_AS(SturmianSpec::parse("alpha=(3-1*sqrt(5))/2 gamma=1"), std::invalid_argument);
}
