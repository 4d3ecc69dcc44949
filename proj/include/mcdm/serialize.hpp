#pragma once

// JSON views of the engine types. Numbers are written at full double precision.

#include "json.hpp"
#include "mcdm/fahp.hpp"
#include "mcdm/screening.hpp"
#include "mcdm/sensitivity.hpp"
#include "mcdm/topsis.hpp"

namespace mcdm {

using Json = nlohmann::json;

Json to_json(const Tfn& t);
Tfn tfn_from_json(const Json& j, const std::string& location);

const char* to_string(Direction d);
Direction parse_direction(const std::string& text);

Json to_json(const FuzzyPairwiseMatrix& m);
FuzzyPairwiseMatrix matrix_from_json(const Json& j);

Json to_json(const CriterionWeightVector& w);
CriterionWeightVector weights_from_json(const Json& j);

Json to_json(const CrMethod& method);
CrMethod cr_method_from_json(const Json& j);

Json to_json(const InconsistentTriad& t, const std::vector<std::string>& ids);
Json to_json(const FahpResult& r);

Json to_json(const RankingResult& r, const std::vector<std::string>& criterion_ids = {});

struct StabilityJsonOptions {
  bool include_scenarios = true;
};
Json to_json(const StabilityReport& r, const std::vector<std::string>& criterion_ids = {},
             const StabilityJsonOptions& options = {});

Json to_json(const RoadmapTiers& t);
Json to_json(const ScreeningOutcome& o);

}  // namespace mcdm
