#include "factorbound/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "factorbound/certificate.hpp"
#include "factorbound/common_factors.hpp"
#include "factorbound/serialize.hpp"

namespace factorbound {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitParse = 2;
constexpr int kExitCap = 3;
constexpr int kExitUncertified = 4;
constexpr int kExitVerify = 5;

std::string default_format() {
    const char* env = std::getenv("FACTORBOUND_FORMAT");
    if (env && std::string(env) == "json") return "json";
    return "text";
}

struct Sink {
    std::ostream& fallback;
    std::string path;

    void write(const std::string& text) const {
        if (path.empty()) {
            fallback << text;
            return;
        }
        std::ofstream f(path);
        if (!f) throw std::invalid_argument("cannot open output file: " + path);
        f << text;
    }
};

struct SequenceArgs {
    std::string morphism_path;
    std::string dfao_path;

    std::optional<UniformMorphism> morphism;
    std::optional<Dfao> dfao;

    void add_options(CLI::App* cmd) {
        cmd->add_option("--morphism", morphism_path, "uniform morphism definition file");
        cmd->add_option("--dfao", dfao_path, "dfao definition file");
    }
    void load() {
        if (!morphism_path.empty() && !dfao_path.empty())
            throw CLI::ValidationError("give either --morphism or --dfao, not both");
        if (!morphism_path.empty()) {
            auto def = load_definition_file(morphism_path);
            if (!def.morphism)
                throw std::invalid_argument(morphism_path + " does not define a morphism");
            morphism = std::move(def.morphism);
        } else if (!dfao_path.empty()) {
            auto def = load_definition_file(dfao_path);
            if (def.dfao)
                dfao = std::move(def.dfao);
            else if (def.morphism)
                dfao = from_uniform_morphism(*def.morphism);
        }
    }
    bool loaded() const { return morphism || dfao; }
    Dfao automaton() const {
        if (dfao) return *dfao;
        return from_uniform_morphism(*morphism);
    }
};

std::string render_common_text(const CommonFactorReport& rep) {
    std::ostringstream os;
    for (const auto& [n, words] : rep.lengths) {
        os << "length " << n << " (" << words.size() << ")";
        if (!words.empty()) {
            os << ":";
            for (const Word& w : words) os << ' ' << (w.empty() ? "(empty)" : w);
        }
        os << '\n';
    }
    os << "longest = " << rep.longest << '\n';
    os << "exhausted = " << (rep.exhausted ? "true" : "false") << '\n';
    if (rep.uncertified_at) os << "uncertified at length " << *rep.uncertified_at << '\n';
    return os.str();
}

std::string render_factors_text(const FactorSet& fs) {
    std::ostringstream os;
    os << fs.size() << " factor" << (fs.size() == 1 ? "" : "s") << " of length " << fs.length
       << (fs.certified ? " (certified)" : " (uncertified)") << '\n';
    for (const Word& w : fs.factors) os << w << '\n';
    return os.str();
}

std::string render_kernel_text(const KernelReport& rep) {
    std::ostringstream os;
    os << "Q = " << rep.Q << '\n';
    for (const KernelWitness& w : rep.witnesses)
        os << "class " << w.class_id << ": witness r=" << w.r << " s=" << w.s << '\n';
    return os.str();
}

}  // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact factor analysis of automatic and Sturmian sequences"};
    app.require_subcommand(1);

    std::string format = default_format();
    app.add_option("--format", format, "output format: text or json")
        ->check(CLI::IsMember({"text", "json"}));

    // generate
    auto* gen = app.add_subcommand("generate", "print a prefix of a sequence");
    SequenceArgs gen_seq;
    gen_seq.add_options(gen);
    std::string gen_sturmian;
    gen->add_option("--sturmian", gen_sturmian, "sturmian spec: alpha=... beta=...");
    long long gen_n = 0;
    gen->add_option("-n,--length", gen_n, "prefix length")->required();
    long long gen_cap = 1000000;
    gen->add_option("--cap", gen_cap, "largest allowed prefix length");
    std::string gen_out;
    gen->add_option("-o,--output", gen_out, "write to file instead of stdout");

    // common
    auto* common = app.add_subcommand("common", "common factors of an automatic and a Sturmian sequence");
    SequenceArgs common_seq;
    common_seq.add_options(common);
    std::string common_sturmian;
    common->add_option("--sturmian", common_sturmian, "sturmian spec")->required();
    int common_max_len = 16;
    common->add_option("--max-len", common_max_len, "largest factor length to intersect");
    long long common_prefix_len = 0;
    common->add_option("--prefix-len", common_prefix_len,
                       "compare finite prefixes of this length instead (lower bound only)");
    std::string common_out;
    common->add_option("-o,--output", common_out, "write to file instead of stdout");

    // certify
    auto* cert_cmd = app.add_subcommand("certify", "produce a verified common-factor length bound");
    SequenceArgs cert_seq;
    cert_seq.add_options(cert_cmd);
    std::string cert_alpha;
    cert_cmd->add_option("--alpha", cert_alpha, "slope as (a+b*sqrt(d))/c")->required();
    std::string cert_out;
    cert_cmd->add_option("-o,--output", cert_out, "write to file instead of stdout");

    // verify
    auto* ver = app.add_subcommand("verify", "re-check a certificate against its inputs");
    SequenceArgs ver_seq;
    ver_seq.add_options(ver);
    std::string ver_alpha, ver_cert;
    ver->add_option("--alpha", ver_alpha, "slope as (a+b*sqrt(d))/c")->required();
    ver->add_option("--cert", ver_cert, "certificate JSON file")->required();

    // kernel
    auto* ker = app.add_subcommand("kernel", "kernel size and class witnesses");
    SequenceArgs ker_seq;
    ker_seq.add_options(ker);
    std::string ker_out;
    ker->add_option("-o,--output", ker_out, "write to file instead of stdout");

    // factors
    auto* fac = app.add_subcommand("factors", "factor set of a given length");
    SequenceArgs fac_seq;
    fac_seq.add_options(fac);
    std::string fac_sturmian;
    fac->add_option("--sturmian", fac_sturmian, "sturmian spec");
    int fac_n = 0;
    fac->add_option("-n,--length", fac_n, "factor length")->required();
    long long fac_scan = 1 << 16;
    fac->add_option("--scan-len", fac_scan, "prefix length for uncertified dfao scans");
    long long fac_cap = 1000000;
    fac->add_option("--prefix-cap", fac_cap, "prefix cap for sturmian enumeration");
    std::string fac_out;
    fac->add_option("-o,--output", fac_out, "write to file instead of stdout");

    std::vector<const char*> argv;
    argv.push_back("factorbound");
    for (const auto& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << e.what() << '\n';
        return kExitParse;
    }

    try {
        if (*gen) {
            gen_seq.load();
            if (gen_n < 0) throw std::invalid_argument("prefix length must be nonnegative");
            if (((int)!gen_sturmian.empty() + (int)gen_seq.loaded()) != 1)
                throw std::invalid_argument(
                    "generate needs exactly one of --morphism/--dfao/--sturmian");
            if (gen_n > gen_cap) {
                err << "requested length " << gen_n << " exceeds cap " << gen_cap << '\n';
                return kExitCap;
            }
            std::string word;
            if (!gen_sturmian.empty()) {
                word = SturmianSpec::parse(gen_sturmian).prefix(static_cast<std::size_t>(gen_n));
            } else {
                Dfao dfao = gen_seq.automaton();
                word.reserve(static_cast<std::size_t>(gen_n));
                for (long long n = 0; n < gen_n; ++n)
                    word.push_back(dfao.evaluate(static_cast<unsigned long long>(n)));
            }
            Sink{out, gen_out}.write(word + "\n");
            return kExitOk;
        }

        if (*common) {
            common_seq.load();
            SturmianSpec spec = SturmianSpec::parse(common_sturmian);
            Sink sink{out, common_out};
            if (common_prefix_len > 0) {
                if (!common_seq.loaded())
                    throw std::invalid_argument("common needs --morphism or --dfao");
                Dfao dfao = common_seq.automaton();
                std::string x;
                x.reserve(static_cast<std::size_t>(common_prefix_len));
                for (long long n = 0; n < common_prefix_len; ++n)
                    x.push_back(dfao.evaluate(static_cast<unsigned long long>(n)));
                std::string a = spec.prefix(static_cast<std::size_t>(common_prefix_len));
                LcfResult lcf = longest_common_factor_prefix(x, a);
                if (format == "json") {
                    Json j;
                    j["mode"] = "prefix-scan";
                    j["prefix_len"] = common_prefix_len;
                    j["longest"] = lcf.length;
                    j["witness"] = lcf.witness;
                    j["i"] = lcf.pos_first;
                    j["j"] = lcf.pos_second;
                    sink.write(dump(j));
                } else {
                    std::ostringstream os;
                    os << "longest common factor of the two length-" << common_prefix_len
                       << " prefixes: " << lcf.length << '\n'
                       << "witness " << lcf.witness << " at positions i=" << lcf.pos_first
                       << " j=" << lcf.pos_second << '\n'
                       << "(lower bound only; prefix scans cannot prove exhaustion)\n";
                    sink.write(os.str());
                }
                return kExitUncertified;
            }
            if (!common_seq.morphism)
                throw std::invalid_argument(
                    "certified common-factor mode needs --morphism (use --prefix-len with a dfao)");
            CommonFactorReport rep = common_factors(*common_seq.morphism, spec, common_max_len);
            sink.write(format == "json" ? dump(to_json(rep)) : render_common_text(rep));
            return rep.exhausted && !rep.uncertified_at ? kExitOk : kExitUncertified;
        }

        if (*cert_cmd) {
            cert_seq.load();
            if (!cert_seq.loaded()) throw std::invalid_argument("certify needs --morphism or --dfao");
            Dfao dfao = cert_seq.automaton();
            QuadraticIrrational alpha = QuadraticIrrational::parse(cert_alpha);
            BoundCertificate cert = certify(dfao, alpha);
            Sink{out, cert_out}.write(dump(to_json(cert)));
            VerifyResult vr = verify(cert, dfao, alpha);
            if (!vr.ok) {
                err << "verification failed at step: " << vr.failed_step << '\n';
                return kExitVerify;
            }
            return kExitOk;
        }

        if (*ver) {
            ver_seq.load();
            if (!ver_seq.loaded()) throw std::invalid_argument("verify needs --morphism or --dfao");
            std::ifstream f(ver_cert);
            if (!f) throw std::invalid_argument("cannot open certificate file: " + ver_cert);
            Json j = Json::parse(f);
            BoundCertificate cert = certificate_from_json(j);
            Dfao dfao = ver_seq.automaton();
            QuadraticIrrational alpha = QuadraticIrrational::parse(ver_alpha);
            VerifyResult vr = verify(cert, dfao, alpha);
            if (!vr.ok) {
                err << "verification failed at step: " << vr.failed_step << '\n';
                return kExitVerify;
            }
            out << "certificate verified: C = " << cert.C << '\n';
            return kExitOk;
        }

        if (*ker) {
            ker_seq.load();
            if (!ker_seq.loaded()) throw std::invalid_argument("kernel needs --morphism or --dfao");
            KernelReport rep = kernel(ker_seq.automaton());
            Sink{out, ker_out}.write(format == "json" ? dump(to_json(rep))
                                                      : render_kernel_text(rep));
            return kExitOk;
        }

        if (*fac) {
            fac_seq.load();
            if (fac_n < 1) throw std::invalid_argument("factor length must be positive");
            if (((int)!fac_sturmian.empty() + (int)fac_seq.loaded()) != 1)
                throw std::invalid_argument(
                    "factors needs exactly one of --morphism/--dfao/--sturmian");
            FactorSet fs;
            if (!fac_sturmian.empty()) {
                fs = SturmianSpec::parse(fac_sturmian)
                         .factor_set(fac_n, static_cast<std::size_t>(fac_cap));
            } else if (fac_seq.morphism) {
                fs = factor_set(*fac_seq.morphism, fac_n);
            } else {
                // No morphic presentation: uncertified scan of a finite prefix.
                Dfao dfao = *fac_seq.dfao;
                std::string prefix;
                prefix.reserve(static_cast<std::size_t>(fac_scan));
                for (long long n = 0; n < fac_scan; ++n)
                    prefix.push_back(dfao.evaluate(static_cast<unsigned long long>(n)));
                fs.length = fac_n;
                fs.certified = false;
                fs.provenance = "prefix scan of length " + std::to_string(fac_scan) +
                                " (no morphic presentation)";
                for (std::size_t i = 0; i + static_cast<std::size_t>(fac_n) <= prefix.size(); ++i)
                    fs.factors.insert(prefix.substr(i, static_cast<std::size_t>(fac_n)));
            }
            Sink{out, fac_out}.write(format == "json" ? dump(to_json(fs))
                                                      : render_factors_text(fs));
            return fs.certified ? kExitOk : kExitUncertified;
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitParse;
    }
    err << "no subcommand given\n";
    return kExitParse;
}

}  // namespace factorbound
