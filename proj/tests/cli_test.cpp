#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "factorbound/cli.hpp"
#include "factorbound/serialize.hpp"
#include "support/oracles.hpp"

using namespace factorbound;
namespace ft = factorbound::testing;

namespace {

struct CliRun {
    int exit_code;
    std::string out;
    std::string err;
};

CliRun run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = run_cli(std::move(args), out, err);
    return {code, out.str(), err.str()};
}

std::string golden(const std::string& name) {
    std::ifstream in(std::string(FACTORBOUND_SOURCE_DIR) + "/tests/golden/" + name);
    REQUIRE(in.good());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::string fib_spec_arg() { return "alpha=(3-1*sqrt(5))/2 beta=(0+0*sqrt(5))/1"; }

}  // namespace

TEST_CASE("generate: morphism and sturmian words") {
    CliRun r1 = run({"generate", "--morphism", ft::fixture_path("thue-morse.mor"), "-n", "8"});
    CHECK(r1.exit_code == 0);
    CHECK(r1.out == "01101001\n");

    CliRun r2 = run({"generate", "--sturmian", fib_spec_arg(), "-n", "8"});
    CHECK(r2.exit_code == 0);
    CHECK(r2.out == "01001010\n");

    CliRun r3 = run({"generate", "--sturmian", fib_spec_arg(), "-n", "0"});
    CHECK(r3.exit_code == 0);
    CHECK(r3.out == "\n");

    CliRun r4 = run({"generate", "--dfao", ft::fixture_path("powers-of-2.dfao"), "-n", "9"});
    CHECK(r4.exit_code == 0);
    CHECK(r4.out == "011010001\n");
}

TEST_CASE("generate: cap and parse failures") {
    CliRun capped = run({"generate", "--sturmian", fib_spec_arg(), "-n", "100", "--cap", "10"});
    CHECK(capped.exit_code == 3);

    CliRun missing = run({"generate", "--morphism", "/nonexistent.mor", "-n", "4"});
    CHECK(missing.exit_code == 2);
    CHECK(missing.err.find("error") != std::string::npos);

    CliRun bad_spec = run({"generate", "--sturmian", "alpha=oops", "-n", "4"});
    CHECK(bad_spec.exit_code == 2);

    CliRun no_args = run({"generate", "-n", "4"});
    CHECK(no_args.exit_code == 2);
}

TEST_CASE("common: certified table matches the golden file") {
    CliRun r = run({"--format", "json", "common", "--morphism",
                    ft::fixture_path("thue-morse.mor"), "--sturmian", fib_spec_arg(),
                    "--max-len", "10"});
    CHECK(r.exit_code == 0);
    CHECK(r.out == golden("tm_fib_common.json"));
}

TEST_CASE("common: rudin-shapiro table matches the golden file") {
    CliRun r = run({"--format", "json", "common", "--morphism",
                    ft::fixture_path("rudin-shapiro.mor"), "--sturmian", fib_spec_arg(),
                    "--max-len", "32"});
    CHECK(r.exit_code == 0);
    CHECK(r.out == golden("rs_fib_common.json"));
}

TEST_CASE("common: non-exhausted run exits 4") {
    CliRun r = run({"common", "--morphism", ft::fixture_path("thue-morse.mor"), "--sturmian",
                    fib_spec_arg(), "--max-len", "3"});
    CHECK(r.exit_code == 4);
    CHECK(r.out.find("exhausted = false") != std::string::npos);
}

TEST_CASE("common: prefix-scan mode reports a witness and positions") {
    CliRun r = run({"--format", "json", "common", "--dfao", ft::fixture_path("powers-of-2.dfao"),
                    "--sturmian", fib_spec_arg(), "--prefix-len", "4096"});
    CHECK(r.exit_code == 4);  // a scan can never prove exhaustion
    Json j = Json::parse(r.out);
    CHECK(j.at("mode") == "prefix-scan");
    CHECK(j.at("longest").get<long long>() >= 1);
    CHECK(!j.at("witness").get<std::string>().empty());
}

TEST_CASE("certify: golden certificate, and verify round trip") {
    CliRun r = run({"certify", "--morphism", ft::fixture_path("thue-morse.mor"), "--alpha",
                    "(3-1*sqrt(5))/2"});
    CHECK(r.exit_code == 0);
    CHECK(r.out == golden("tm_fib_cert.json"));

    // write to a file and verify through the subcommand
    std::string path = "/tmp/fb_cli_cert.json";
    CliRun w = run({"certify", "--morphism", ft::fixture_path("thue-morse.mor"), "--alpha",
                    "(3-1*sqrt(5))/2", "-o", path});
    CHECK(w.exit_code == 0);
    CliRun v = run({"verify", "--morphism", ft::fixture_path("thue-morse.mor"), "--alpha",
                    "(3-1*sqrt(5))/2", "--cert", path});
    CHECK(v.exit_code == 0);
    CHECK(v.out.find("C = 68") != std::string::npos);
}

TEST_CASE("verify: tampered certificate exits 5") {
    std::string path = "/tmp/fb_cli_cert_tampered.json";
    CliRun w = run({"certify", "--morphism", ft::fixture_path("thue-morse.mor"), "--alpha",
                    "(3-1*sqrt(5))/2", "-o", path});
    REQUIRE(w.exit_code == 0);
    {
        std::ifstream in(path);
        Json j = Json::parse(in);
        j["M"] = std::to_string(std::stoll(j.at("M").get<std::string>()) - 1);
        std::ofstream out(path);
        out << dump(j);
    }
    CliRun v = run({"verify", "--morphism", ft::fixture_path("thue-morse.mor"), "--alpha",
                    "(3-1*sqrt(5))/2", "--cert", path});
    CHECK(v.exit_code == 5);
    CHECK(v.err.find("gap") != std::string::npos);
}

TEST_CASE("kernel subcommand") {
    CliRun text = run({"kernel", "--morphism", ft::fixture_path("thue-morse.mor")});
    CHECK(text.exit_code == 0);
    CHECK(text.out.find("Q = 2") != std::string::npos);

    CliRun js = run({"--format", "json", "kernel", "--dfao", ft::fixture_path("powers-of-2.dfao")});
    CHECK(js.exit_code == 0);
    CHECK(Json::parse(js.out).at("Q").get<int>() == 3);
}

TEST_CASE("factors subcommand") {
    CliRun sturmian = run({"factors", "--sturmian", fib_spec_arg(), "-n", "1"});
    CHECK(sturmian.exit_code == 0);
    CHECK(sturmian.out.find("2 factors") != std::string::npos);

    CliRun morphism =
        run({"--format", "json", "factors", "--morphism", ft::fixture_path("thue-morse.mor"),
             "-n", "3"});
    CHECK(morphism.exit_code == 0);
    Json j = Json::parse(morphism.out);
    CHECK(j.at("factors").size() == 6);
    CHECK(j.at("certified").get<bool>());

    // dfao scans are never certified
    CliRun dfao = run({"factors", "--dfao", ft::fixture_path("powers-of-2.dfao"), "-n", "2",
                       "--scan-len", "1024"});
    CHECK(dfao.exit_code == 4);
    CHECK(dfao.out.find("uncertified") != std::string::npos);
}

TEST_CASE("format default comes from the environment") {
    setenv("FACTORBOUND_FORMAT", "json", 1);
    CliRun r = run({"kernel", "--morphism", ft::fixture_path("thue-morse.mor")});
    unsetenv("FACTORBOUND_FORMAT");
    CHECK(r.exit_code == 0);
    CHECK(Json::parse(r.out).at("Q").get<int>() == 2);
}

TEST_CASE("usage errors exit 2") {
    CHECK(run({}).exit_code == 2);
    CHECK(run({"frobnicate"}).exit_code == 2);
    CHECK(run({"generate"}).exit_code == 2);  // missing -n
    CHECK(run({"certify", "--alpha", "(3-1*sqrt(5))/2"}).exit_code == 2);
}
