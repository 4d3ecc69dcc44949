#pragma once

// Project files: panel inputs plus cached results, shared by the CLI and the
// HTTP service.

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mcdm/fahp.hpp"
#include "mcdm/screening.hpp"
#include "mcdm/sensitivity.hpp"
#include "mcdm/serialize.hpp"
#include "mcdm/topsis.hpp"

namespace mcdm {

inline constexpr const char* kSchemaVersion = "1.0.0";
inline constexpr const char* kProjectSuffix = ".mcdm.json";
// Score set not attributed to a single panel member (a consolidated matrix).
inline constexpr const char* kConsensusExpert = "consensus";

enum class ExpertRole { Academic, Practitioner };
const char* to_string(ExpertRole role);
ExpertRole parse_expert_role(const std::string& text);

struct Expert {
  std::string id;
  std::string name;
  ExpertRole role = ExpertRole::Academic;
  friend bool operator==(const Expert&, const Expert&) = default;
};

struct CriterionEntry {
  std::string id;
  std::string name;
  Direction direction = Direction::Benefit;
  friend bool operator==(const CriterionEntry&, const CriterionEntry&) = default;
};

struct AlternativeEntry {
  std::string id;
  std::string name;
  friend bool operator==(const AlternativeEntry&, const AlternativeEntry&) = default;
};

// Pairwise statement by criterion id; reciprocal means `col` dominates `row`.
struct JudgmentEntry {
  std::string row;
  std::string col;
  LinguisticLabel label = LinguisticLabel::Equal;
  bool reciprocal = false;
  friend bool operator==(const JudgmentEntry&, const JudgmentEntry&) = default;
};

struct ScreeningEntry {
  std::string item;
  ItemKind kind = ItemKind::Criterion;
  std::map<std::string, int> scores;  // expert id -> 1..5
  friend bool operator==(const ScreeningEntry&, const ScreeningEntry&) = default;
};

struct Settings {
  double cr_threshold = 0.1;
  CrMethod cr_method = CentroidDefuzz{};
  std::optional<int> rounding;
  std::vector<int> band_sizes;  // empty: default bands
  ScreeningThresholds screening;
};

struct CacheEntry {
  std::string input_hash;
  Json value;
  friend bool operator==(const CacheEntry&, const CacheEntry&) = default;
};

struct Metadata {
  std::string name;
  std::string created;
  std::string modified;
  std::string schema_version = kSchemaVersion;
  friend bool operator==(const Metadata&, const Metadata&) = default;
};

// expert -> alternative id -> criterion id -> score
using ScoreSets = std::map<std::string, std::map<std::string, std::map<std::string, double>>>;

struct Project {
  Metadata metadata;
  Settings settings;
  std::vector<Expert> experts;
  std::vector<ScreeningEntry> screening;
  std::vector<CriterionEntry> criteria;
  std::vector<AlternativeEntry> alternatives;
  std::map<std::string, std::vector<JudgmentEntry>> judgments;  // by expert id
  ScoreSets scores;
  std::map<std::string, CacheEntry> cache;  // "weights", "stability"
  std::uint64_t revision = 0;

  const CriterionEntry* find_criterion(const std::string& id) const;
  const AlternativeEntry* find_alternative(const std::string& id) const;
  const Expert* find_expert(const std::string& id) const;
  std::vector<std::string> criterion_ids() const;
  std::vector<std::string> alternative_ids() const;
};

std::string utc_timestamp();
// Lower-case ASCII id: runs of anything else collapse to '_'.
std::string slugify(const std::string& text);

Project new_project(const std::string& name, const std::string& timestamp = utc_timestamp());
// Records a mutation: revision + 1 and a new modified stamp.
void commit(Project& p, const std::string& timestamp = utc_timestamp());

Json project_to_json(const Project& p);
// Validates schema version and invariants; errors carry the JSON path.
Project project_from_json(const Json& j);
void validate_project(const Project& p);

void save_project(const Project& p, const std::filesystem::path& path);
Project load_project(const std::filesystem::path& path);

// FNV-1a 64 over the compact dump of `j` (object keys are kept sorted).
std::string input_hash(const Json& j);
Json weight_inputs(const Project& p);
Json ranking_inputs(const Project& p);

enum class Freshness { Missing, Stale, Fresh };
const char* to_string(Freshness f);
// weights -> weight_inputs, everything downstream -> ranking_inputs.
Freshness cache_state(const Project& p, const std::string& key);

// Mutations. Each commits a new revision.
void set_judgments(Project& p, const std::string& expert, std::vector<JudgmentEntry> entries);
void set_scores(Project& p, const std::string& expert,
                const std::map<std::string, std::map<std::string, double>>& scores);

// Pure computations over a snapshot.
FahpResult compute_weights(const Project& p);
// Per-expert CRs for whatever judgment sets are complete (nullopt when not).
std::map<std::string, std::optional<double>> expert_consistency(const Project& p);
void store_weights(Project& p, const FahpResult& result);
// Fresh, accepted cached weights; MustRecompute otherwise.
CriterionWeightVector fresh_weights(const Project& p);
// Fresh cached weights when available, else computed from the judgments.
// A consistency-gate rejection throws ConsistencyGate.
CriterionWeightVector resolve_weights(const Project& p);
// Mean of all score sets; MustRecompute naming the first pending cell.
DecisionMatrix project_decision_matrix(const Project& p);
TopsisOptions ranking_options(const Project& p, std::optional<int> rounding_override = {});
RankingResult compute_ranking(const Project& p, const TopsisOptions& options);
RoadmapTiers compute_tiers(const Project& p, const RankingResult& ranking,
                           const std::vector<int>& band_override = {});

struct StabilityParams {
  std::vector<double> oat_deltas;
  std::size_t mc_samples = 0;
  std::uint64_t seed = 0;
  friend bool operator==(const StabilityParams&, const StabilityParams&) = default;
};
Json to_json(const StabilityParams& s);
struct StabilityRun {
  std::optional<StabilityReport> oat;
  std::optional<StabilityReport> monte_carlo;
};
StabilityRun compute_stability(const Project& p, const StabilityParams& params, const TopsisOptions& options);
Json stability_json(const Project& p, const StabilityParams& params, const StabilityRun& run);
void store_stability(Project& p, Json value);

// CSV import. Both merge into `p` and commit.
//   decision: alternative,<criterion>+,<criterion>-,...   then name,score,...
//   likert:   item,kind,<expert_id>,...                   then item,kind,1..5,...
void import_decision_csv(Project& p, const std::string& text, const std::string& expert = kConsensusExpert);
void import_likert_csv(Project& p, const std::string& text);
// Removes items eliminated by screening from the criteria and alternatives
// lists (with their judgments and scores). Returns the outcome.
ScreeningOutcome apply_screening(Project& p);

std::vector<std::vector<std::string>> parse_csv(const std::string& text);
std::string read_text_file(const std::filesystem::path& path);

}  // namespace mcdm
