// Acceptance suite: one line per criterion, nonzero exit if any fails.
// Run from anywhere; fixture and golden paths are compiled in.

#include <chrono>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <vector>

#include "factorbound/certificate.hpp"
#include "factorbound/cli.hpp"
#include "factorbound/common_factors.hpp"
#include "factorbound/kernel.hpp"
#include "factorbound/serialize.hpp"
#include "support/oracles.hpp"

using namespace factorbound;
namespace ft = factorbound::testing;

namespace {

int failures = 0;

void report(int number, const std::string& name, bool ok, const std::string& detail = "") {
    std::cout << "criterion " << number << " (" << name << "): " << (ok ? "PASS" : "FAIL");
    if (!detail.empty()) std::cout << " [" << detail << "]";
    std::cout << std::endl;
    if (!ok) ++failures;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) return {};
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::string fib_spec_arg() { return "alpha=(3-1*sqrt(5))/2 beta=(0+0*sqrt(5))/1"; }

std::vector<std::pair<std::string, Dfao>> automatic_fixtures() {
    std::vector<std::pair<std::string, Dfao>> v;
    v.emplace_back("thue-morse", from_uniform_morphism(ft::thue_morse()));
    v.emplace_back("rudin-shapiro", from_uniform_morphism(ft::rudin_shapiro()));
    v.emplace_back("period-doubling", from_uniform_morphism(ft::period_doubling()));
    v.emplace_back("constant", from_uniform_morphism(ft::constant_zero()));
    v.emplace_back("powers-of-2", ft::powers_of_two_dfao());
    return v;
}

std::vector<std::pair<std::string, QuadraticIrrational>> alpha_fixtures() {
    return {{"fibonacci", ft::alpha_fibonacci()},
            {"golden", ft::alpha_golden()},
            {"sqrt2", ft::alpha_sqrt2()}};
}

// 1. The worked example: Thue-Morse x Fibonacci common factors, bit-exact.
void criterion_1() {
    auto start = std::chrono::steady_clock::now();
    std::ostringstream out, err;
    int code = run_cli({"--format", "json", "common", "--morphism",
                        ft::fixture_path("thue-morse.mor"), "--sturmian", fib_spec_arg(),
                        "--max-len", "10"},
                       out, err);
    std::string expect =
        read_file(std::string(FACTORBOUND_SOURCE_DIR) + "/tests/golden/tm_fib_common.json");
    CommonFactorReport rep = common_factor_report_from_json(Json::parse(out.str()));
    std::size_t total = 0;
    for (const auto& [n, words] : rep.lengths) total += words.size();
    double secs = seconds_since(start);
    bool ok = code == 0 && !expect.empty() && out.str() == expect && rep.longest == 8 &&
              rep.exhausted && rep.lengths.count(9) == 1 && rep.lengths.at(9).empty() &&
              total == 25 && secs < 10.0;
    std::ostringstream detail;
    detail << total << " factors, longest " << rep.longest << ", " << secs << "s";
    report(1, "example reproduction", ok, detail.str());
}

// 2. Certificates verify; empirical common factors never exceed C.
void criterion_2() {
    auto start = std::chrono::steady_clock::now();
    bool ok = true;
    std::ostringstream detail;

    Dfao tm = from_uniform_morphism(ft::thue_morse());
    BoundCertificate tm_cert = certify(tm, ft::alpha_fibonacci());
    ok = ok && verify(tm_cert, tm, ft::alpha_fibonacci()).ok && tm_cert.C >= 8;

    const std::size_t prefix_len = 100000;
    std::vector<std::pair<std::string, std::string>> sturmian_prefixes;
    for (const auto& [name, alpha] : alpha_fixtures())
        sturmian_prefixes.emplace_back(name, SturmianSpec(alpha).prefix(prefix_len));

    for (const auto& [aname, dfao] : automatic_fixtures()) {
        std::string x;
        x.reserve(prefix_len);
        for (std::size_t n = 0; n < prefix_len; ++n)
            x.push_back(dfao.evaluate(static_cast<unsigned long long>(n)));
        std::size_t i = 0;
        for (const auto& [sname, alpha] : alpha_fixtures()) {
            BoundCertificate cert = certify(dfao, alpha);
            bool verified = verify(cert, dfao, alpha).ok;
            LcfResult lcf = longest_common_factor_prefix(x, sturmian_prefixes[i++].second);
            bool bounded = lcf.length <= static_cast<std::size_t>(cert.C);
            if (!(verified && bounded)) {
                ok = false;
                detail << aname << "x" << sname << " FAILED (lcf " << lcf.length << ", C "
                       << cert.C << "); ";
            }
        }
    }
    double secs = seconds_since(start);
    ok = ok && secs < 60.0;
    detail << "15 pairs, " << secs << "s";
    report(2, "certificate soundness", ok, detail.str());
}

// 3. Sturmian factor counts are exactly n+1.
void criterion_3() {
    bool ok = true;
    for (const auto& [name, alpha] : alpha_fixtures()) {
        SturmianSpec spec(alpha);
        for (int n = 1; n <= 12; ++n) {
            FactorSet fs = spec.factor_set(n);
            if (!fs.certified || fs.size() != static_cast<std::size_t>(n) + 1) ok = false;
        }
    }
    report(3, "sturmian complexity n+1", ok, "n = 1..12 on 3 slopes");
}

// 4. Ones counts stay within 1 of N*alpha, exactly.
void criterion_4() {
    bool ok = true;
    for (const auto& [name, alpha] : alpha_fixtures()) {
        SturmianSpec spec(alpha);
        for (std::size_t N : {100UL, 1000UL, 10000UL, 100000UL}) {
            unsigned long long count = spec.ones_count(N);
            QuadraticIrrational diff = QuadraticIrrational(make_int(count)) -
                                       alpha.times(make_int(static_cast<unsigned long long>(N)));
            if (diff.signum() < 0) diff = -diff;
            if (!(diff < QuadraticIrrational(1))) ok = false;
        }
    }
    report(4, "frequency of ones", ok, "N up to 1e5, exact comparison");
}

// 5. Thue-Morse kernel size and colliding residues.
void criterion_5() {
    Dfao tm = from_uniform_morphism(ft::thue_morse());
    int q = kernel(tm).Q;
    int q_oracle = ft::kernel_size_by_prefixes(tm, 6, 2048);
    auto pair = colliding_pair(tm, 2);
    bool ok = q == 2 && q_oracle == 2 && pair == std::pair<long long, long long>{0, 3};
    std::ostringstream detail;
    detail << "Q = " << q << " (oracle " << q_oracle << "), pair (" << pair.first << ", "
           << pair.second << ")";
    report(5, "kernel", ok, detail.str());
}

// 6. Three-distance structure on random slopes, against the bracket oracle.
void criterion_6() {
    bool ok = true;
    QuadraticIrrational one(1);
    std::mt19937_64 rng(20260806);
    for (int i = 0; i < 100; ++i) {
        QuadraticIrrational theta = ft::random_quadratic(rng());
        long long M = 1 + static_cast<long long>(rng() % 1000);
        GapProfile prof = gap_profile(theta, M);
        auto oracle = ft::gap_multiset_oracle(theta, M);
        if (prof.gaps.size() > 3) ok = false;
        QuadraticIrrational total;
        for (const auto& [g, mult] : prof.gaps) total = total + g.times(make_int(mult));
        if (total != one) ok = false;
        if (prof.gaps.size() != oracle.size()) {
            ok = false;
        } else {
            for (std::size_t j = 0; j < oracle.size(); ++j)
                if (prof.gaps[j].first != oracle[j].first ||
                    prof.gaps[j].second != oracle[j].second)
                    ok = false;
        }
    }
    report(6, "three-distance gaps", ok, "100 random (theta, M), M <= 1000");
}

// 7. Suffix-automaton longest common factor vs the quadratic scan.
void criterion_7() {
    bool ok = true;
    std::mt19937_64 rng(77);
    for (int i = 0; i < 50; ++i) {
        std::size_t n = 10 + rng() % 1000;
        std::size_t m = 10 + rng() % 1000;
        std::string x(n, '0'), a(m, '0');
        int sigma = 2 + static_cast<int>(rng() % 3);
        for (char& c : x) c = static_cast<char>('0' + rng() % sigma);
        for (char& c : a) c = static_cast<char>('0' + rng() % sigma);
        if (longest_common_factor_prefix(x, a) != ft::brute_force_lcf(x, a)) ok = false;
    }
    report(7, "lcf oracle equivalence", ok, "50 random pairs up to length 1000");
}

// 8. Verification rejects all five certificate mutations on every fixture.
void criterion_8() {
    bool ok = true;
    int killed = 0, total = 0;
    for (const auto& [aname, dfao] : automatic_fixtures()) {
        KernelReport rep = kernel(dfao);
        for (const auto& [sname, alpha] : alpha_fixtures()) {
            BoundCertificate cert = certify(dfao, alpha);
            long long kr = 1;
            for (long long i = 0; i < cert.r; ++i) kr *= cert.k;

            std::vector<BoundCertificate> mutants;
            BoundCertificate m1 = cert;
            m1.Q += 1;
            m1.r -= 1;
            mutants.push_back(m1);

            BoundCertificate m2 = cert;
            {
                auto class_of = [&](long long s) {
                    std::vector<int> digits(static_cast<std::size_t>(cert.r));
                    for (auto& d : digits) {
                        d = static_cast<int>(s % cert.k);
                        s /= cert.k;
                    }
                    return rep.state_class[static_cast<std::size_t>(dfao.state_after(digits))];
                };
                bool found = false;
                for (long long s1 = 0; s1 < kr && !found; ++s1)
                    for (long long s2 = s1 + 1; s2 < kr && !found; ++s2)
                        if (class_of(s1) != class_of(s2)) {
                            m2.s1 = s1;
                            m2.s2 = s2;
                            m2.delta = s2 - s1;
                            found = true;
                        }
                if (!found) {
                    m2.s1 = 0;
                    m2.s2 = 0;
                    m2.delta = 0;
                }
            }
            mutants.push_back(m2);

            BoundCertificate m3 = cert;
            m3.epsilon = cert.epsilon.times(2);
            mutants.push_back(m3);

            BoundCertificate m4 = cert;
            m4.M -= 1;
            mutants.push_back(m4);

            BoundCertificate m5 = cert;
            m5.C -= kr;
            mutants.push_back(m5);

            for (const BoundCertificate& m : mutants) {
                ++total;
                if (!verify(m, dfao, alpha).ok)
                    ++killed;
                else
                    ok = false;
            }
        }
    }
    std::ostringstream detail;
    detail << killed << "/" << total << " mutants rejected";
    report(8, "mutation kill", ok, detail.str());
}

}  // namespace

int main() {
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    if (failures == 0) {
        std::cout << "acceptance: all 8 criteria PASS" << std::endl;
        return 0;
    }
    std::cout << "acceptance: " << failures << " criteria FAILED" << std::endl;
    return 1;
}
