#include "mcdm/workspace.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <ctime>
#include <fstream>
#include <set>
#include <sstream>

#include "mcdm/error.hpp"

namespace mcdm {

namespace {

std::string path_of(std::initializer_list<std::string> parts) {
  std::string out;
  for (const auto& p : parts) out += "/" + p;
  return out;
}

template <typename T>
T field(const Json& j, const char* key, const std::string& at) {
  if (!j.is_object() || !j.contains(key)) throw Error(ErrorCode::Validation, std::string("missing field '") + key + "'", at);
  try {
    return j.at(key).get<T>();
  } catch (const Json::exception&) {
    throw Error(ErrorCode::Validation, std::string("field '") + key + "' has the wrong type", at + "/" + key);
  }
}

int major_of(const std::string& version) {
  try {
    return std::stoi(version.substr(0, version.find('.')));
  } catch (const std::exception&) {
    throw Error(ErrorCode::Validation, "malformed schema_version '" + version + "'", "/metadata/schema_version");
  }
}

Json settings_to_json(const Settings& s) {
  Json j = {{"cr_threshold", s.cr_threshold},
            {"cr_method", to_json(s.cr_method)},
            {"band_sizes", s.band_sizes},
            {"screening", {{"mean", s.screening.mean}, {"dispersion", s.screening.dispersion}}}};
  j["rounding"] = s.rounding ? Json(*s.rounding) : Json(nullptr);
  return j;
}

Settings settings_from_json(const Json& j) {
  Settings s;
  if (j.is_null()) return s;
  const std::string at = "/settings";
  if (j.contains("cr_threshold")) s.cr_threshold = field<double>(j, "cr_threshold", at);
  if (j.contains("cr_method")) s.cr_method = cr_method_from_json(j.at("cr_method"));
  if (j.contains("rounding") && !j.at("rounding").is_null()) s.rounding = field<int>(j, "rounding", at);
  if (j.contains("band_sizes")) s.band_sizes = field<std::vector<int>>(j, "band_sizes", at);
  if (j.contains("screening")) {
    const Json& sc = j.at("screening");
    s.screening.mean = sc.value("mean", s.screening.mean);
    s.screening.dispersion = sc.value("dispersion", s.screening.dispersion);
  }
  if (!(s.cr_threshold > 0.0)) throw Error(ErrorCode::Validation, "cr_threshold must be positive", at + "/cr_threshold");
  if (s.rounding && (*s.rounding < 0 || *s.rounding > 12)) {
    throw Error(ErrorCode::Validation, "rounding must be within 0..12", at + "/rounding");
  }
  return s;
}

std::string join_pending(const std::vector<std::string>& items) {
  std::string out;
  for (std::size_t k = 0; k < items.size() && k < 5; ++k) out += (k ? ", " : "") + items[k];
  if (items.size() > 5) out += ", ...";
  return out;
}

std::vector<Judgment> to_indexed(const Project& p, const std::vector<JudgmentEntry>& entries, const std::string& at) {
  std::vector<Judgment> out;
  const auto ids = p.criterion_ids();
  auto index = [&](const std::string& id) {
    const auto it = std::find(ids.begin(), ids.end(), id);
    if (it == ids.end()) throw Error(ErrorCode::Reference, "unknown criterion '" + id + "'", at);
    return static_cast<std::size_t>(it - ids.begin());
  };
  for (const auto& e : entries) out.push_back({index(e.row), index(e.col), e.label, e.reciprocal});
  return out;
}

std::vector<FuzzyPairwiseMatrix> expert_matrices(const Project& p) {
  if (p.criteria.size() < 2) throw Error(ErrorCode::MustRecompute, "at least two criteria are needed for weighting");
  if (p.judgments.empty()) throw Error(ErrorCode::MustRecompute, "no judgment sets recorded");
  std::vector<FuzzyPairwiseMatrix> out;
  for (const auto& [expert, entries] : p.judgments) {
    try {
      out.push_back(build_matrix(p.criterion_ids(), to_indexed(p, entries, "/judgments/" + expert)));
    } catch (const Error& e) {
      throw Error(e.code(), "expert '" + expert + "': " + e.what(), "/judgments/" + expert);
    }
  }
  return out;
}

}  // namespace

const char* to_string(ExpertRole role) { return role == ExpertRole::Academic ? "academic" : "practitioner"; }

ExpertRole parse_expert_role(const std::string& text) {
  if (text == "academic") return ExpertRole::Academic;
  if (text == "practitioner") return ExpertRole::Practitioner;
  throw Error(ErrorCode::Validation, "role must be 'academic' or 'practitioner', got '" + text + "'");
}

const CriterionEntry* Project::find_criterion(const std::string& id) const {
  for (const auto& c : criteria)
    if (c.id == id) return &c;
  return nullptr;
}

const AlternativeEntry* Project::find_alternative(const std::string& id) const {
  for (const auto& a : alternatives)
    if (a.id == id) return &a;
  return nullptr;
}

const Expert* Project::find_expert(const std::string& id) const {
  for (const auto& e : experts)
    if (e.id == id) return &e;
  return nullptr;
}

std::vector<std::string> Project::criterion_ids() const {
  std::vector<std::string> out;
  for (const auto& c : criteria) out.push_back(c.id);
  return out;
}

std::vector<std::string> Project::alternative_ids() const {
  std::vector<std::string> out;
  for (const auto& a : alternatives) out.push_back(a.id);
  return out;
}

std::string utc_timestamp() {
  const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

std::string slugify(const std::string& text) {
  std::string out;
  bool gap = false;
  for (unsigned char ch : text) {
    if (std::isalnum(ch)) {
      if (gap && !out.empty()) out += '_';
      out += static_cast<char>(std::tolower(ch));
      gap = false;
    } else {
      gap = true;
    }
  }
  return out;
}

Project new_project(const std::string& name, const std::string& timestamp) {
  Project p;
  p.metadata.name = name;
  p.metadata.created = timestamp;
  p.metadata.modified = timestamp;
  return p;
}

void commit(Project& p, const std::string& timestamp) {
  ++p.revision;
  p.metadata.modified = timestamp;
}

Json project_to_json(const Project& p) {
  Json j = Json::object();
  j["metadata"] = {{"name", p.metadata.name},
                   {"created", p.metadata.created},
                   {"modified", p.metadata.modified},
                   {"schema_version", p.metadata.schema_version}};
  j["revision"] = p.revision;
  j["settings"] = settings_to_json(p.settings);
  Json experts = Json::array();
  for (const auto& e : p.experts) experts.push_back({{"id", e.id}, {"name", e.name}, {"role", to_string(e.role)}});
  j["experts"] = std::move(experts);
  Json criteria = Json::array();
  for (const auto& c : p.criteria) {
    criteria.push_back({{"id", c.id}, {"name", c.name}, {"direction", to_string(c.direction)}});
  }
  j["criteria"] = std::move(criteria);
  Json alts = Json::array();
  for (const auto& a : p.alternatives) alts.push_back({{"id", a.id}, {"name", a.name}});
  j["alternatives"] = std::move(alts);
  Json screening = Json::array();
  for (const auto& s : p.screening) {
    screening.push_back({{"item", s.item}, {"kind", to_string(s.kind)}, {"scores", s.scores}});
  }
  j["screening"] = std::move(screening);
  Json judgments = Json::object();
  for (const auto& [expert, entries] : p.judgments) {
    Json list = Json::array();
    for (const auto& e : entries) {
      list.push_back({{"row", e.row}, {"col", e.col}, {"label", label_key(e.label)}, {"reciprocal", e.reciprocal}});
    }
    judgments[expert] = std::move(list);
  }
  j["judgments"] = std::move(judgments);
  j["scores"] = p.scores;
  Json cache = Json::object();
  for (const auto& [key, entry] : p.cache) cache[key] = {{"input_hash", entry.input_hash}, {"value", entry.value}};
  j["cache"] = std::move(cache);
  return j;
}

Project project_from_json(const Json& j) {
  if (!j.is_object()) throw Error(ErrorCode::Validation, "project must be a JSON object", "/");
  Project p;
  const Json meta = j.contains("metadata") ? j.at("metadata") : Json();
  p.metadata.schema_version = field<std::string>(meta, "schema_version", "/metadata");
  if (major_of(p.metadata.schema_version) != major_of(kSchemaVersion)) {
    throw Error(ErrorCode::MigrationNeeded,
                "schema " + p.metadata.schema_version + " needs migration to " + kSchemaVersion,
                "/metadata/schema_version");
  }
  p.metadata.name = field<std::string>(meta, "name", "/metadata");
  p.metadata.created = meta.value("created", "");
  p.metadata.modified = meta.value("modified", "");
  p.revision = j.value("revision", std::uint64_t{0});
  p.settings = settings_from_json(j.value("settings", Json()));

  const Json experts = j.value("experts", Json::array());
  for (std::size_t k = 0; k < experts.size(); ++k) {
    const std::string at = "/experts/" + std::to_string(k);
    Expert e{field<std::string>(experts[k], "id", at), experts[k].value("name", ""), ExpertRole::Academic};
    try {
      e.role = parse_expert_role(field<std::string>(experts[k], "role", at));
    } catch (const Error& err) {
      throw Error(err.code(), err.what(), at + "/role");
    }
    p.experts.push_back(std::move(e));
  }
  const Json criteria = j.value("criteria", Json::array());
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    const std::string at = "/criteria/" + std::to_string(k);
    CriterionEntry c{field<std::string>(criteria[k], "id", at), criteria[k].value("name", ""), Direction::Benefit};
    try {
      c.direction = parse_direction(field<std::string>(criteria[k], "direction", at));
    } catch (const Error& err) {
      throw Error(err.code(), err.what(), at + "/direction");
    }
    p.criteria.push_back(std::move(c));
  }
  const Json alts = j.value("alternatives", Json::array());
  for (std::size_t k = 0; k < alts.size(); ++k) {
    const std::string at = "/alternatives/" + std::to_string(k);
    p.alternatives.push_back({field<std::string>(alts[k], "id", at), alts[k].value("name", "")});
  }
  const Json screening = j.value("screening", Json::array());
  for (std::size_t k = 0; k < screening.size(); ++k) {
    const std::string at = "/screening/" + std::to_string(k);
    ScreeningEntry s;
    s.item = field<std::string>(screening[k], "item", at);
    try {
      s.kind = parse_item_kind(field<std::string>(screening[k], "kind", at));
    } catch (const Error& err) {
      throw Error(ErrorCode::Validation, err.what(), at + "/kind");
    }
    s.scores = field<std::map<std::string, int>>(screening[k], "scores", at);
    p.screening.push_back(std::move(s));
  }
  const Json judgments = j.value("judgments", Json::object());
  if (!judgments.is_object()) throw Error(ErrorCode::Validation, "judgments must be an object", "/judgments");
  for (const auto& [expert, list] : judgments.items()) {
    auto& out = p.judgments[expert];
    for (std::size_t k = 0; k < list.size(); ++k) {
      const std::string at = path_of({"judgments", expert, std::to_string(k)});
      JudgmentEntry e;
      e.row = field<std::string>(list[k], "row", at);
      e.col = field<std::string>(list[k], "col", at);
      const auto label = try_parse_label(field<std::string>(list[k], "label", at));
      if (!label) throw Error(ErrorCode::Validation, "unknown linguistic label", at + "/label");
      e.label = *label;
      e.reciprocal = list[k].value("reciprocal", false);
      out.push_back(std::move(e));
    }
  }
  const Json scores = j.value("scores", Json::object());
  for (const auto& [expert, by_alt] : scores.items()) {
    for (const auto& [alt, by_crit] : by_alt.items()) {
      for (const auto& [crit, value] : by_crit.items()) {
        if (!value.is_number()) {
          throw Error(ErrorCode::Validation, "score must be a number", path_of({"scores", expert, alt, crit}));
        }
        p.scores[expert][alt][crit] = value.get<double>();
      }
    }
  }
  const Json cache = j.value("cache", Json::object());
  for (const auto& [key, entry] : cache.items()) {
    const std::string at = "/cache/" + key;
    p.cache[key] = {field<std::string>(entry, "input_hash", at), entry.value("value", Json())};
  }
  validate_project(p);
  return p;
}

void validate_project(const Project& p) {
  auto unique = [](const auto& list, const char* what, const std::string& base) {
    std::set<std::string> seen;
    for (std::size_t k = 0; k < list.size(); ++k) {
      const std::string& id = list[k].id;
      const std::string at = base + "/" + std::to_string(k) + "/id";
      if (id.empty()) throw Error(ErrorCode::Validation, std::string(what) + " id must not be empty", at);
      if (!seen.insert(id).second) {
        throw Error(ErrorCode::Validation, std::string("duplicate ") + what + " id '" + id + "'", at);
      }
    }
  };
  unique(p.experts, "expert", "/experts");
  unique(p.criteria, "criterion", "/criteria");
  unique(p.alternatives, "alternative", "/alternatives");
  if (p.criteria.size() > 10) {
    throw Error(ErrorCode::Validation, "at most 10 criteria are supported", "/criteria");
  }

  for (const auto& [expert, entries] : p.judgments) {
    const std::string base = "/judgments/" + expert;
    if (!p.find_expert(expert)) throw Error(ErrorCode::Validation, "judgments by unknown expert '" + expert + "'", base);
    for (std::size_t k = 0; k < entries.size(); ++k) {
      const std::string at = base + "/" + std::to_string(k);
      for (const auto* id : {&entries[k].row, &entries[k].col}) {
        if (!p.find_criterion(*id)) throw Error(ErrorCode::Validation, "judgment names unknown criterion '" + *id + "'", at);
      }
      if (entries[k].row == entries[k].col) throw Error(ErrorCode::Validation, "judgment compares a criterion with itself", at);
    }
  }
  for (const auto& [expert, by_alt] : p.scores) {
    if (expert != kConsensusExpert && !p.find_expert(expert)) {
      throw Error(ErrorCode::Validation, "scores by unknown expert '" + expert + "'", "/scores/" + expert);
    }
    for (const auto& [alt, by_crit] : by_alt) {
      if (!p.find_alternative(alt)) {
        throw Error(ErrorCode::Validation, "scores name unknown alternative '" + alt + "'", path_of({"scores", expert, alt}));
      }
      for (const auto& [crit, value] : by_crit) {
        const std::string at = path_of({"scores", expert, alt, crit});
        if (!p.find_criterion(crit)) throw Error(ErrorCode::Validation, "scores name unknown criterion '" + crit + "'", at);
        if (!std::isfinite(value) || value < 0.0) throw Error(ErrorCode::Validation, "scores must be non-negative", at);
      }
    }
  }
  for (std::size_t k = 0; k < p.screening.size(); ++k) {
    for (const auto& [expert, score] : p.screening[k].scores) {
      const std::string at = path_of({"screening", std::to_string(k), "scores", expert});
      if (!p.find_expert(expert)) throw Error(ErrorCode::Validation, "screening score by unknown expert '" + expert + "'", at);
      if (score < 1 || score > 5) throw Error(ErrorCode::Validation, "Likert scores must be within 1..5", at);
    }
  }
}

void save_project(const Project& p, const std::filesystem::path& path) {
  validate_project(p);
  const auto tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorCode::Io, "cannot write project file", path.string());
    out << project_to_json(p).dump(2) << '\n';
    if (!out) throw Error(ErrorCode::Io, "short write on project file", path.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) throw Error(ErrorCode::Io, "cannot replace project file: " + ec.message(), path.string());
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::Io, "cannot read file", path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Project load_project(const std::filesystem::path& path) {
  const std::string text = read_text_file(path);
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorCode::Parse, std::string("project file is not valid JSON: ") + e.what(), path.string());
  }
  return project_from_json(j);
}

std::string input_hash(const Json& j) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char ch : j.dump()) {
    h ^= ch;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

Json weight_inputs(const Project& p) {
  Json criteria = Json::array();
  for (const auto& c : p.criteria) criteria.push_back({{"id", c.id}, {"direction", to_string(c.direction)}});
  Json full = project_to_json(p);
  return {{"criteria", std::move(criteria)},
          {"judgments", full["judgments"]},
          {"cr_threshold", p.settings.cr_threshold},
          {"cr_method", to_json(p.settings.cr_method)}};
}

Json ranking_inputs(const Project& p) {
  return {{"weights", weight_inputs(p)}, {"alternatives", p.alternative_ids()}, {"scores", p.scores}};
}

const char* to_string(Freshness f) {
  switch (f) {
    case Freshness::Missing: return "missing";
    case Freshness::Stale: return "stale";
    case Freshness::Fresh: return "fresh";
  }
  return "missing";
}

Freshness cache_state(const Project& p, const std::string& key) {
  const auto it = p.cache.find(key);
  if (it == p.cache.end()) return Freshness::Missing;
  const Json inputs = key == "weights" ? weight_inputs(p) : ranking_inputs(p);
  return it->second.input_hash == input_hash(inputs) ? Freshness::Fresh : Freshness::Stale;
}

void set_judgments(Project& p, const std::string& expert, std::vector<JudgmentEntry> entries) {
  if (!p.find_expert(expert)) throw Error(ErrorCode::Reference, "unknown expert '" + expert + "'");
  to_indexed(p, entries, "/judgments/" + expert);
  p.judgments[expert] = std::move(entries);
  validate_project(p);
  commit(p);
}

void set_scores(Project& p, const std::string& expert,
                const std::map<std::string, std::map<std::string, double>>& scores) {
  if (expert != kConsensusExpert && !p.find_expert(expert)) {
    throw Error(ErrorCode::Reference, "unknown expert '" + expert + "'");
  }
  Project next = p;
  for (const auto& [alt, by_crit] : scores) {
    if (!next.find_alternative(alt)) throw Error(ErrorCode::Reference, "unknown alternative '" + alt + "'", alt);
    for (const auto& [crit, value] : by_crit) {
      if (!next.find_criterion(crit)) throw Error(ErrorCode::Reference, "unknown criterion '" + crit + "'", alt + "/" + crit);
      next.scores[expert][alt][crit] = value;
    }
  }
  validate_project(next);
  commit(next);
  p = std::move(next);
}

FahpResult compute_weights(const Project& p) {
  const auto matrices = expert_matrices(p);
  std::vector<Direction> dirs;
  for (const auto& c : p.criteria) dirs.push_back(c.direction);
  return fahp_pipeline(matrices, dirs, FahpOptions{p.settings.cr_threshold, p.settings.cr_method});
}

std::map<std::string, std::optional<double>> expert_consistency(const Project& p) {
  std::map<std::string, std::optional<double>> out;
  for (const auto& [expert, entries] : p.judgments) {
    try {
      const auto m = build_matrix(p.criterion_ids(), to_indexed(p, entries, "/judgments/" + expert));
      out[expert] = consistency_ratio(m, p.settings.cr_method);
    } catch (const Error&) {
      out[expert] = std::nullopt;
    }
  }
  return out;
}

void store_weights(Project& p, const FahpResult& result) {
  p.cache["weights"] = {input_hash(weight_inputs(p)), to_json(result)};
  commit(p);
}

CriterionWeightVector fresh_weights(const Project& p) {
  switch (cache_state(p, "weights")) {
    case Freshness::Missing: throw Error(ErrorCode::MustRecompute, "weights have not been computed", "/cache/weights");
    case Freshness::Stale: throw Error(ErrorCode::MustRecompute, "weights are stale; judgments changed", "/cache/weights");
    case Freshness::Fresh: break;
  }
  const Json& value = p.cache.at("weights").value;
  if (!value.value("accepted", false) || value.at("weights").is_null()) {
    throw Error(ErrorCode::MustRecompute,
                "weights were rejected by the consistency gate (CR " + std::to_string(value.value("cr", 0.0)) + ")",
                "/cache/weights");
  }
  return weights_from_json(value.at("weights"));
}

CriterionWeightVector resolve_weights(const Project& p) {
  if (cache_state(p, "weights") == Freshness::Fresh) {
    const Json& value = p.cache.at("weights").value;
    if (value.value("accepted", false) && !value.at("weights").is_null()) return weights_from_json(value.at("weights"));
  }
  auto result = compute_weights(p);
  if (!result.accepted) {
    throw Error(ErrorCode::ConsistencyGate, "consistency ratio " + std::to_string(result.cr) + " is not below " +
                                                std::to_string(result.cr_threshold));
  }
  return std::move(*result.weights);
}

DecisionMatrix project_decision_matrix(const Project& p) {
  if (p.criteria.empty()) throw Error(ErrorCode::MustRecompute, "no criteria defined");
  if (p.alternatives.size() < 2) throw Error(ErrorCode::MustRecompute, "at least two alternatives are needed");
  if (p.scores.empty()) throw Error(ErrorCode::MustRecompute, "no decision scores recorded");
  std::vector<Grid> grids;
  std::vector<std::string> pending;
  for (const auto& [expert, by_alt] : p.scores) {
    Grid g(p.alternatives.size(), p.criteria.size());
    for (std::size_t i = 0; i < p.alternatives.size(); ++i) {
      for (std::size_t k = 0; k < p.criteria.size(); ++k) {
        const auto a = by_alt.find(p.alternatives[i].id);
        if (a != by_alt.end()) {
          if (const auto c = a->second.find(p.criteria[k].id); c != a->second.end()) {
            g(i, k) = c->second;
            continue;
          }
        }
        pending.push_back(expert + "/" + p.alternatives[i].id + "/" + p.criteria[k].id);
      }
    }
    grids.push_back(std::move(g));
  }
  if (!pending.empty()) {
    throw Error(ErrorCode::MustRecompute, "decision scores pending: " + join_pending(pending), "/scores/" + pending.front());
  }
  std::vector<std::string> names;
  for (const auto& a : p.alternatives) names.push_back(a.name.empty() ? a.id : a.name);
  std::vector<Criterion> crit;
  for (const auto& c : p.criteria) crit.push_back({c.id, c.direction});
  return {names, crit, mean_scores(grids)};
}

TopsisOptions ranking_options(const Project& p, std::optional<int> rounding_override) {
  TopsisOptions o;
  o.rounding = rounding_override ? rounding_override : p.settings.rounding;
  return o;
}

RankingResult compute_ranking(const Project& p, const TopsisOptions& options) {
  const auto weights = resolve_weights(p);
  return topsis_pipeline(project_decision_matrix(p), weights, options);
}

RoadmapTiers compute_tiers(const Project& p, const RankingResult& ranking, const std::vector<int>& band_override) {
  const auto& bands = band_override.empty() ? p.settings.band_sizes : band_override;
  if (bands.empty()) return roadmap_tiers(ranking);
  return roadmap_tiers(ranking, bands);
}

Json to_json(const StabilityParams& s) {
  return {{"oat_deltas", s.oat_deltas}, {"mc_samples", s.mc_samples}, {"seed", s.seed}};
}

StabilityRun compute_stability(const Project& p, const StabilityParams& params, const TopsisOptions& options) {
  const auto weights = resolve_weights(p);
  const auto d = project_decision_matrix(p);
  StabilityRun run;
  if (!params.oat_deltas.empty()) run.oat = oat_weight_perturbation(d, weights.crisp_weights, params.oat_deltas, options);
  if (params.mc_samples > 0) run.monte_carlo = monte_carlo_weights(d, params.mc_samples, params.seed, weights.crisp_weights);
  return run;
}

Json stability_json(const Project& p, const StabilityParams& params, const StabilityRun& run) {
  const auto ids = p.criterion_ids();
  Json out = {{"params", to_json(params)}};
  out["oat"] = run.oat ? to_json(*run.oat, ids) : Json(nullptr);
  // Per-sample scenarios would dwarf the summary; only counts and frequencies are kept.
  out["monte_carlo"] = run.monte_carlo ? to_json(*run.monte_carlo, ids, {false}) : Json(nullptr);
  return out;
}

void store_stability(Project& p, Json value) {
  p.cache["stability"] = {input_hash(ranking_inputs(p)), std::move(value)};
  commit(p);
}

ScreeningOutcome apply_screening(Project& p) {
  std::vector<LikertAssessment> assessments;
  for (const auto& s : p.screening) {
    LikertAssessment a{s.item, s.kind, {}};
    for (const auto& [expert, score] : s.scores) a.scores.push_back(score);
    assessments.push_back(std::move(a));
  }
  const auto outcome = screen_items(assessments, p.settings.screening);
  Project next = p;
  bool changed = false;
  for (const auto& item : outcome.eliminated) {
    if (item.kind == ItemKind::Criterion) {
      const auto before = next.criteria.size();
      std::erase_if(next.criteria, [&](const CriterionEntry& c) { return c.id == item.item_id; });
      if (before == next.criteria.size()) continue;
      for (auto& [expert, entries] : next.judgments) {
        std::erase_if(entries, [&](const JudgmentEntry& e) { return e.row == item.item_id || e.col == item.item_id; });
      }
      for (auto& [expert, by_alt] : next.scores)
        for (auto& [alt, by_crit] : by_alt) by_crit.erase(item.item_id);
    } else {
      const auto before = next.alternatives.size();
      std::erase_if(next.alternatives, [&](const AlternativeEntry& a) { return a.id == item.item_id; });
      if (before == next.alternatives.size()) continue;
      for (auto& [expert, by_alt] : next.scores) by_alt.erase(item.item_id);
    }
    changed = true;
  }
  if (changed) {
    commit(next);
    p = std::move(next);
  }
  return outcome;
}

}  // namespace mcdm
