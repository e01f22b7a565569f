// JSON encodings of the report and definition types. Key order is fixed
// (insertion order) so emitted documents are stable for golden-file tests.
// Certificate integers are decimal strings since they are unbounded in
// principle; exact numbers use the canonical (a+b*sqrt(d))/c text form.
#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "factorbound/certificate.hpp"
#include "factorbound/common_factors.hpp"
#include "factorbound/dfao.hpp"
#include "factorbound/kernel.hpp"
#include "factorbound/morphism.hpp"
#include "factorbound/words.hpp"

namespace factorbound {

using Json = nlohmann::ordered_json;

Json to_json(const FactorSet& fs);
FactorSet factor_set_from_json(const Json& j);

Json to_json(const KernelReport& rep);
KernelReport kernel_report_from_json(const Json& j);

Json to_json(const CommonFactorReport& rep);
CommonFactorReport common_factor_report_from_json(const Json& j);

Json to_json(const BoundCertificate& cert);
BoundCertificate certificate_from_json(const Json& j);

Json to_json(const Dfao& dfao);
Dfao dfao_from_json(const Json& j);

Json to_json(const UniformMorphism& m);
UniformMorphism morphism_from_json(const Json& j);

/// Serialized with two-space indentation and a trailing newline.
std::string dump(const Json& j);

/// Loads a sequence definition file: JSON (sniffed by a leading '{') or the
/// line-oriented text format. Returns a morphism or a dfao.
struct SequenceDefinition {
    std::optional<UniformMorphism> morphism;
    std::optional<Dfao> dfao;
};
SequenceDefinition load_definition_file(const std::string& path);

}  // namespace factorbound
