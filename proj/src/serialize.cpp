#include "factorbound/serialize.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace factorbound {

namespace {

long long ll_from(const Json& j) {
    if (j.is_string()) return std::stoll(j.get<std::string>());
    return j.get<long long>();
}

}  // namespace

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json to_json(const FactorSet& fs) {
    Json j;
    j["length"] = fs.length;
    j["certified"] = fs.certified;
    j["factors"] = Json::array();
    for (const Word& w : fs.factors) j["factors"].push_back(w);
    j["provenance"] = fs.provenance;
    return j;
}

FactorSet factor_set_from_json(const Json& j) {
    FactorSet fs;
    fs.length = j.at("length").get<int>();
    fs.certified = j.at("certified").get<bool>();
    for (const auto& w : j.at("factors")) fs.factors.insert(w.get<std::string>());
    fs.provenance = j.at("provenance").get<std::string>();
    return fs;
}

Json to_json(const KernelReport& rep) {
    Json j;
    j["Q"] = rep.Q;
    j["witnesses"] = Json::array();
    for (const KernelWitness& w : rep.witnesses)
        j["witnesses"].push_back(Json{{"class", w.class_id}, {"r", w.r}, {"s", w.s}});
    j["explored"] = Json::array();
    for (const KernelEntry& e : rep.explored)
        j["explored"].push_back(Json{{"r", e.r}, {"s", e.s}, {"class", e.class_id}});
    return j;
}

KernelReport kernel_report_from_json(const Json& j) {
    KernelReport rep;
    rep.Q = j.at("Q").get<int>();
    for (const auto& w : j.at("witnesses"))
        rep.witnesses.push_back({w.at("class").get<int>(), w.at("r").get<int>(),
                                 w.at("s").get<long long>(), 0});
    for (const auto& e : j.at("explored"))
        rep.explored.push_back(
            {e.at("r").get<int>(), e.at("s").get<long long>(), e.at("class").get<int>()});
    return rep;
}

Json to_json(const CommonFactorReport& rep) {
    Json j;
    Json lengths = Json::object();
    for (const auto& [n, words] : rep.lengths) {
        Json arr = Json::array();
        for (const Word& w : words) arr.push_back(w);
        lengths[std::to_string(n)] = std::move(arr);
    }
    j["lengths"] = std::move(lengths);
    j["longest"] = rep.longest;
    j["exhausted"] = rep.exhausted;
    if (rep.uncertified_at) j["uncertified_at"] = *rep.uncertified_at;
    return j;
}

CommonFactorReport common_factor_report_from_json(const Json& j) {
    CommonFactorReport rep;
    for (const auto& [key, arr] : j.at("lengths").items()) {
        std::set<Word>& dst = rep.lengths[std::stoi(key)];
        for (const auto& w : arr) dst.insert(w.get<std::string>());
    }
    rep.longest = j.at("longest").get<int>();
    rep.exhausted = j.at("exhausted").get<bool>();
    if (j.contains("uncertified_at")) rep.uncertified_at = j.at("uncertified_at").get<int>();
    return rep;
}

Json to_json(const BoundCertificate& cert) {
    Json j;
    j["k"] = std::to_string(cert.k);
    j["Q"] = std::to_string(cert.Q);
    j["r"] = std::to_string(cert.r);
    j["s1"] = std::to_string(cert.s1);
    j["s2"] = std::to_string(cert.s2);
    j["delta"] = std::to_string(cert.delta);
    j["epsilon"] = cert.epsilon.to_string();
    j["theta"] = cert.theta.to_string();
    j["M"] = std::to_string(cert.M);
    j["C"] = std::to_string(cert.C);
    j["transcript"] = Json::array();
    for (const TranscriptStep& s : cert.transcript) {
        Json step;
        step["step"] = s.step;
        step["inputs"] = Json::object();
        for (const auto& [key, val] : s.inputs) step["inputs"][key] = val;
        step["outputs"] = Json::object();
        for (const auto& [key, val] : s.outputs) step["outputs"][key] = val;
        if (!s.note.empty()) step["note"] = s.note;
        j["transcript"].push_back(std::move(step));
    }
    return j;
}

BoundCertificate certificate_from_json(const Json& j) {
    BoundCertificate cert;
    cert.k = ll_from(j.at("k"));
    cert.Q = ll_from(j.at("Q"));
    cert.r = ll_from(j.at("r"));
    cert.s1 = ll_from(j.at("s1"));
    cert.s2 = ll_from(j.at("s2"));
    cert.delta = ll_from(j.at("delta"));
    cert.epsilon = QuadraticIrrational::parse(j.at("epsilon").get<std::string>());
    cert.theta = QuadraticIrrational::parse(j.at("theta").get<std::string>());
    cert.M = ll_from(j.at("M"));
    cert.C = ll_from(j.at("C"));
    if (j.contains("transcript")) {
        for (const auto& s : j.at("transcript")) {
            TranscriptStep step;
            step.step = s.at("step").get<std::string>();
            for (const auto& [key, val] : s.at("inputs").items())
                step.inputs.emplace_back(key, val.get<std::string>());
            for (const auto& [key, val] : s.at("outputs").items())
                step.outputs.emplace_back(key, val.get<std::string>());
            if (s.contains("note")) step.note = s.at("note").get<std::string>();
            cert.transcript.push_back(std::move(step));
        }
    }
    return cert;
}

Json to_json(const Dfao& dfao) {
    Json j;
    j["type"] = "dfao";
    j["base"] = dfao.base();
    j["initial"] = dfao.initial();
    j["reading"] = "lsd";
    j["outputs"] = Json::array();
    for (int s = 0; s < dfao.state_count(); ++s)
        j["outputs"].push_back(std::string(1, dfao.output(s)));
    j["transitions"] = Json::array();
    for (int s = 0; s < dfao.state_count(); ++s) {
        Json row = Json::array();
        for (int d = 0; d < dfao.base(); ++d) row.push_back(dfao.next(s, d));
        j["transitions"].push_back(std::move(row));
    }
    return j;
}

Dfao dfao_from_json(const Json& j) {
    int base = j.at("base").get<int>();
    int initial = j.at("initial").get<int>();
    std::string reading = j.value("reading", "lsd");
    std::vector<char> outputs;
    for (const auto& o : j.at("outputs")) {
        std::string s = o.get<std::string>();
        if (s.size() != 1) throw std::invalid_argument("dfao outputs must be single characters");
        outputs.push_back(s[0]);
    }
    std::vector<std::vector<int>> transitions;
    for (const auto& row : j.at("transitions"))
        transitions.push_back(row.get<std::vector<int>>());
    if (reading == "msd")
        return msd_to_lsd(MsdDfao{base, initial, std::move(outputs), std::move(transitions)});
    if (reading != "lsd") throw std::invalid_argument("reading must be lsd or msd");
    return Dfao(base, initial, std::move(outputs), std::move(transitions));
}

Json to_json(const UniformMorphism& m) {
    Json j;
    j["type"] = "morphism";
    j["base"] = m.base();
    j["letters"] = Json::array();
    for (char a : m.letters()) j["letters"].push_back(std::string(1, a));
    j["images"] = Json::object();
    for (char a : m.letters()) j["images"][std::string(1, a)] = m.image(a);
    j["seed"] = std::string(1, m.seed());
    j["coding"] = Json::object();
    for (char a : m.letters()) j["coding"][std::string(1, a)] = std::string(1, m.code(a));
    return j;
}

UniformMorphism morphism_from_json(const Json& j) {
    int base = j.at("base").get<int>();
    std::vector<char> letters;
    for (const auto& l : j.at("letters")) {
        std::string s = l.get<std::string>();
        if (s.size() != 1) throw std::invalid_argument("letters must be single characters");
        letters.push_back(s[0]);
    }
    std::map<char, std::string> images;
    for (const auto& [key, val] : j.at("images").items())
        images[key.at(0)] = val.get<std::string>();
    std::string seed = j.at("seed").get<std::string>();
    std::map<char, char> coding;
    if (j.contains("coding"))
        for (const auto& [key, val] : j.at("coding").items())
            coding[key.at(0)] = val.get<std::string>().at(0);
    return UniformMorphism(base, std::move(letters), std::move(images), seed.at(0),
                           std::move(coding));
}

SequenceDefinition load_definition_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open definition file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    std::string text = buf.str();

    SequenceDefinition def;
    auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') {
        Json j = Json::parse(text);
        std::string type = j.at("type").get<std::string>();
        if (type == "morphism")
            def.morphism = morphism_from_json(j);
        else if (type == "dfao")
            def.dfao = dfao_from_json(j);
        else
            throw std::invalid_argument("unknown definition type: " + type);
        return def;
    }
    // Text format: morphism files declare `map`/`seed`, dfao files `states`.
    std::istringstream probe(text);
    std::string word;
    bool is_morphism = false;
    while (probe >> word) {
        if (word == "map" || word == "code") {
            is_morphism = true;
            break;
        }
        if (word == "states" || word == "transition") break;
    }
    std::istringstream body(text);
    if (is_morphism)
        def.morphism = UniformMorphism::load_text(body);
    else
        def.dfao = Dfao::load_text(body);
    return def;
}

}  // namespace factorbound
