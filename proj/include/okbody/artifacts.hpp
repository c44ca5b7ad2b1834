#pragma once

#include "okbody/convex.hpp"
#include "okbody/filtration.hpp"
#include "okbody/measures.hpp"
#include "okbody/okounkov.hpp"

#include <json.hpp>

#include <map>
#include <string>
#include <vector>

namespace okbody {

using Json = nlohmann::ordered_json;

// Run metadata embedded in every artifact: commands stay byte-reproducible,
// so the config block plus format version pins what produced a file.
struct ArtifactMeta {
    std::string command;
    std::map<std::string, std::string> config; // flag -> value, ordered
    static constexpr int format_version = 1;
};

Json meta_json(const ArtifactMeta& meta);
std::string meta_csv_header(const ArtifactMeta& meta);

Json scalar_json(const Scalar& s); // "n/d" or {"rat": ..., "sqrt2": ...}
Json value_json(const Value& v);
Json point_json(const Point& p);

Json sequence_json(const ArtifactMeta& meta, const VanishingSequence& seq);
// Columns (m, j, a_j_num, a_j_den); throws ValidationError on irrational
// values (use JSON for those).
std::string sequence_csv(const ArtifactMeta& meta, const VanishingSequence& seq);

Json profile_json(const ArtifactMeta& meta, const FiltrationProfile& profile);
std::string profile_csv(const ArtifactMeta& meta, const FiltrationProfile& profile);

Json asymptotics_json(const ArtifactMeta& meta, const AsymptoticsReport& report);

Json body_json(const ArtifactMeta& meta, const LatticeBodyApprox& body);
Json transform_json(const ArtifactMeta& meta, const LatticeBodyApprox& body,
                    const ConcaveTransformTable& table);

Json equidist_json(const ArtifactMeta& meta, int m, const Scalar& ks);
std::string equidist_csv(const ArtifactMeta& meta, const StepMeasure& emp, const ReferenceCDF& ref);

std::string conical_csv(const ArtifactMeta& meta, const ConicalReport& report);

// Pure rendering of already-computed rational data; doubles appear only
// here, in the coordinate mapping to the page.
std::string body_svg(const LatticeBodyApprox& body);
std::string transform_svg(const LatticeBodyApprox& body, const ConcaveTransformTable& table);

// Body specs for the extremal subcommand.
ConvexBody body_from_json(const Json& spec);

} // namespace okbody
