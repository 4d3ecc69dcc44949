#include "mcdm/serialize.hpp"

#include "mcdm/error.hpp"

namespace mcdm {

Json to_json(const Tfn& t) { return Json::array({t.l, t.m, t.u}); }

Tfn tfn_from_json(const Json& j, const std::string& location) {
  if (!j.is_array() || j.size() != 3 || !j[0].is_number() || !j[1].is_number() || !j[2].is_number()) {
    throw Error(ErrorCode::Validation, "fuzzy number must be [l, m, u]", location);
  }
  Tfn t{j[0].get<double>(), j[1].get<double>(), j[2].get<double>()};
  if (!t.ordered()) throw Error(ErrorCode::Validation, "fuzzy number must satisfy l <= m <= u", location);
  return t;
}

const char* to_string(Direction d) { return d == Direction::Benefit ? "benefit" : "cost"; }

Direction parse_direction(const std::string& text) {
  if (text == "benefit" || text == "+") return Direction::Benefit;
  if (text == "cost" || text == "-") return Direction::Cost;
  throw Error(ErrorCode::Validation, "direction must be 'benefit' or 'cost', got '" + text + "'");
}

Json to_json(const FuzzyPairwiseMatrix& m) {
  Json cells = Json::array();
  for (const auto& row : m.cells()) {
    Json r = Json::array();
    for (const auto& t : row) r.push_back(to_json(t));
    cells.push_back(std::move(r));
  }
  return {{"criteria", m.criterion_ids()}, {"cells", std::move(cells)}};
}

FuzzyPairwiseMatrix matrix_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("criteria") || !j.contains("cells")) {
    throw Error(ErrorCode::Validation, "matrix needs 'criteria' and 'cells'");
  }
  const auto ids = j.at("criteria").get<std::vector<std::string>>();
  const Json& cells = j.at("cells");
  if (!cells.is_array()) throw Error(ErrorCode::Validation, "cells must be an array", "/cells");
  std::vector<std::vector<Tfn>> grid;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    std::vector<Tfn> row;
    for (std::size_t k = 0; k < cells[i].size(); ++k) {
      row.push_back(tfn_from_json(cells[i][k], "/cells/" + std::to_string(i) + "/" + std::to_string(k)));
    }
    grid.push_back(std::move(row));
  }
  return {ids, std::move(grid)};
}

Json to_json(const CriterionWeightVector& w) {
  Json out = Json::object();
  out["criteria"] = w.criterion_ids;
  Json dirs = Json::array();
  for (auto d : w.directions) dirs.push_back(to_string(d));
  out["directions"] = std::move(dirs);
  Json fuzzy = Json::array();
  for (const auto& t : w.fuzzy_weights) fuzzy.push_back(to_json(t));
  out["fuzzy_weights"] = std::move(fuzzy);
  out["crisp_weights"] = w.crisp_weights;
  out["cr"] = w.cr;
  return out;
}

CriterionWeightVector weights_from_json(const Json& j) {
  CriterionWeightVector w;
  try {
    w.criterion_ids = j.at("criteria").get<std::vector<std::string>>();
    for (const auto& d : j.at("directions")) w.directions.push_back(parse_direction(d.get<std::string>()));
    for (std::size_t k = 0; k < j.at("fuzzy_weights").size(); ++k) {
      w.fuzzy_weights.push_back(tfn_from_json(j.at("fuzzy_weights")[k], "/fuzzy_weights/" + std::to_string(k)));
    }
    w.crisp_weights = j.at("crisp_weights").get<std::vector<double>>();
    w.cr = j.at("cr").get<double>();
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::Validation, std::string("malformed weight vector: ") + e.what());
  }
  return w;
}

Json to_json(const CrMethod& method) {
  if (const auto* cut = std::get_if<AlphaCutDefuzz>(&method)) {
    return {{"kind", "alpha_cut"}, {"alpha", cut->alpha}, {"optimism", cut->optimism}};
  }
  return {{"kind", "centroid"}};
}

CrMethod cr_method_from_json(const Json& j) {
  const std::string kind = j.value("kind", "centroid");
  if (kind == "centroid") return CentroidDefuzz{};
  if (kind == "alpha_cut") return AlphaCutDefuzz{j.value("alpha", 0.5), j.value("optimism", 0.5)};
  throw Error(ErrorCode::Validation, "unknown consistency method '" + kind + "'", "/settings/cr_method/kind");
}

Json to_json(const InconsistentTriad& t, const std::vector<std::string>& ids) {
  auto name = [&](std::size_t k) { return k < ids.size() ? ids[k] : std::to_string(k); };
  return {{"triad", Json::array({name(t.i), name(t.j), name(t.k)})}, {"deviation", t.deviation}};
}

Json to_json(const FahpResult& r) {
  Json out = Json::object();
  out["accepted"] = r.accepted;
  out["cr"] = r.cr;
  out["cr_threshold"] = r.cr_threshold;
  out["expert_crs"] = r.expert_crs;
  Json triads = Json::array();
  for (const auto& t : r.triads) triads.push_back(to_json(t, r.aggregate.criterion_ids()));
  out["inconsistent_triads"] = std::move(triads);
  out["aggregate"] = to_json(r.aggregate);
  out["weights"] = r.weights ? to_json(*r.weights) : Json(nullptr);
  return out;
}

Json to_json(const RankingResult& r, const std::vector<std::string>& criterion_ids) {
  Json alts = Json::array();
  for (const auto& a : r.alternatives) {
    alts.push_back({{"alternative", a.alternative},
                    {"d_plus", a.d_plus},
                    {"d_minus", a.d_minus},
                    {"cc", a.cc},
                    {"rank", a.rank},
                    {"tied", a.tied},
                    {"degenerate", a.degenerate}});
  }
  Json weighted = Json::array();
  for (std::size_t i = 0; i < r.weighted.rows; ++i) {
    const auto row = r.weighted.row(i);
    weighted.push_back(std::vector<double>(row.begin(), row.end()));
  }
  Json out = {{"alternatives", std::move(alts)},
              {"ideals", {{"positive", r.ideals.positive}, {"negative", r.ideals.negative}}},
              {"weighted", std::move(weighted)},
              {"rounding", r.rounding ? Json(*r.rounding) : Json(nullptr)}};
  if (!criterion_ids.empty()) out["criteria"] = criterion_ids;
  return out;
}

Json to_json(const StabilityReport& r, const std::vector<std::string>& criterion_ids,
             const StabilityJsonOptions& options) {
  Json out = Json::object();
  out["base"] = to_json(r.base, criterion_ids);
  out["base_weights"] = r.base_weights;
  out["scenario_count"] = r.scenarios.size();
  out["evaluated"] = r.evaluated;
  out["rank_reversal_count"] = r.rank_reversal_count;
  Json freq = Json::object();
  for (std::size_t a = 0; a < r.rank_frequency.size(); ++a) {
    freq[r.base.alternatives[a].alternative] = r.rank_frequency[a];
  }
  out["rank_frequency"] = std::move(freq);
  Json critical = Json::array();
  for (std::size_t j = 0; j < r.critical_delta.size(); ++j) {
    const std::string id = j < criterion_ids.size() ? criterion_ids[j] : std::to_string(j);
    critical.push_back({{"criterion", id},
                        {"critical_delta", r.critical_delta[j] ? Json(*r.critical_delta[j]) : Json(nullptr)}});
  }
  out["critical_delta"] = std::move(critical);
  if (options.include_scenarios) {
    Json scenarios = Json::array();
    for (const auto& s : r.scenarios) {
      Json sj = {{"delta", s.delta}, {"skipped", s.skipped}, {"weights", s.weights}};
      if (s.criterion) {
        sj["criterion"] = *s.criterion < criterion_ids.size() ? Json(criterion_ids[*s.criterion]) : Json(*s.criterion);
      }
      if (!s.skipped) {
        sj["cc"] = s.cc;
        sj["ranks"] = s.ranks;
        sj["top"] = r.base.alternatives[s.top].alternative;
        sj["reversal"] = s.reversal;
      }
      scenarios.push_back(std::move(sj));
    }
    out["scenarios"] = std::move(scenarios);
  }
  return out;
}

Json to_json(const RoadmapTiers& t) {
  Json tiers = Json::array();
  for (std::size_t k = 0; k < t.tiers.size(); ++k) {
    tiers.push_back({{"tier", tier_name(k)}, {"alternatives", t.tiers[k]}});
  }
  return {{"tiers", std::move(tiers)}, {"band_sizes", t.band_sizes}};
}

Json to_json(const ScreeningOutcome& o) {
  auto items = [](const std::vector<ScreenedItem>& list) {
    Json arr = Json::array();
    for (const auto& s : list) {
      Json failed = Json::array();
      for (auto rule : s.failed) failed.push_back(to_string(rule));
      arr.push_back({{"item", s.item_id}, {"kind", to_string(s.kind)}, {"mean", s.mean}, {"sd", s.sd},
                     {"failed", std::move(failed)}});
    }
    return arr;
  };
  return {{"retained", items(o.retained)}, {"eliminated", items(o.eliminated)}};
}

}  // namespace mcdm
