#pragma once

#include <json.hpp>

#include "zf/series.hpp"

namespace zf {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchema = "zariski-forge/1";
inline constexpr const char* kVersion = "1.0.0";

Json to_json(const ConditionReport& rep);
Json to_json(const SingularCluster& cluster);
Json to_json(const CurveVerification& verification);
Json to_json(const BuiltCurve& curve);
Json to_json(const Prop5Report& rep);
Json to_json(const PairReport& rep);
Json to_json(const FamilyDerivation& der);
Json to_json(const Abelianization& ab);
Json to_json(const PermutationAssignment& w, const FinitePresentation& pres);
Json to_json(const SingularLocus& locus);

/// Wraps a result body into the versioned report envelope.
Json make_report(const std::string& command, Json inputs, Json result, bool passed,
                 const std::vector<std::string>& caveats);

}  // namespace zf
