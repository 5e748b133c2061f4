#pragma once

// JSON file formats and report objects. Every report is built once as JSON;
// the text form is rendered from that JSON, so both carry the same values.

#include <cstdint>
#include <optional>
#include <string>

#include <json.hpp>

#include "thompsonf/classify.hpp"
#include "thompsonf/lattice.hpp"
#include "thompsonf/plmap.hpp"
#include "thompsonf/thompson.hpp"
#include "thompsonf/word.hpp"

namespace thompsonf {

using Json = nlohmann::ordered_json;

/// {"breaks": [["1/4","1/2"],["1/2","3/4"]]}, endpoints implicit.
Json element_to_json(const PLMap& f);
PLMap element_from_json(const Json& j);

/// {"name": {"breaks": ...}, ...} layered over base.
Environment environment_from_json(const Json& j, Environment base);

Json lattice_to_json(const LatticeSubgroup& L);
/// {"generators": [[3,7],[5,11]]}
Json generators_to_json(std::span<const IntPair> vs);
std::vector<IntPair> generators_from_json(const Json& j);

/// {"phi_pairs": [[..],..]} and/or {"elements": [{"breaks": ..}, ..]}.
FIFSubgroup subgroup_from_json(const Json& j);

Json element_report(const PLMap& f);
Json phi_report(const PLMap& f);
Json orbitals_report(const PLMap& f);
Json value_report(const Rational& v);
Json push_report(std::int64_t n, const Rational& image);

Json subgroup_report(const FIFSubgroup& H);
Json iso_report(const FIFSubgroup& H, const FIFSubgroup& H2);
Json enumerate_report(std::int64_t n);
Json classify_report(std::int64_t n);
Json kab_report(std::int64_t a, std::int64_t b, std::optional<std::uint64_t> seed, const GeneratorPair& ys,
                const KabCertificate& cert);

/// Human-readable rendering. A report holding a single inline value renders
/// as just that value, e.g. "(1, -1)".
std::string render_text(const Json& report);

}  // namespace thompsonf
