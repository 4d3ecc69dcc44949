#include "cli.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "mcdm/api_service.hpp"
#include "mcdm/error.hpp"
#include "mcdm/report.hpp"
#include "mcdm/workspace.hpp"

namespace mcdm::cli {

namespace {

namespace fs = std::filesystem;

struct Globals {
  std::string project;
  int round = -1;
  double cr_threshold = 0.0;
  bool json = false;
  CLI::Option* round_opt = nullptr;
  CLI::Option* cr_opt = nullptr;

  std::optional<int> rounding() const {
    if (round_opt && round_opt->count()) return round;
    return std::nullopt;
  }
  std::optional<double> threshold() const {
    if (cr_opt && cr_opt->count()) return cr_threshold;
    return std::nullopt;
  }
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string fixed(double x, int places = 3) {
  std::ostringstream s;
  s << std::fixed << std::setprecision(places) << x;
  return s.str();
}

fs::path require_project(const Globals& g) {
  if (g.project.empty()) throw UsageError("--project is required for this command");
  return g.project;
}

void write_json(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

std::string display_name(const Project& p, const std::string& criterion) {
  const auto* c = p.find_criterion(criterion);
  return c && !c->name.empty() ? c->name : criterion;
}

// Fixed-width text table; first column left aligned, the rest right aligned.
class Table {
 public:
  explicit Table(std::vector<std::string> head) : rows_{std::move(head)} {}
  void add(std::vector<std::string> row) { rows_.push_back(std::move(row)); }
  void print(std::ostream& out) const {
    std::vector<std::size_t> width;
    for (const auto& r : rows_) {
      width.resize(std::max(width.size(), r.size()));
      for (std::size_t k = 0; k < r.size(); ++k) width[k] = std::max(width[k], r[k].size());
    }
    for (const auto& r : rows_) {
      std::string line;
      for (std::size_t k = 0; k < r.size(); ++k) {
        const std::string pad(width[k] - r[k].size(), ' ');
        line += k == 0 ? r[k] + pad : "  " + pad + r[k];
      }
      while (!line.empty() && line.back() == ' ') line.pop_back();
      out << line << '\n';
    }
  }

 private:
  std::vector<std::vector<std::string>> rows_;
};

void print_triads(std::ostream& out, const Project& p, const std::vector<InconsistentTriad>& triads,
                  const std::vector<std::string>& ids) {
  if (triads.empty()) return;
  out << "Most inconsistent triads:\n";
  for (const auto& t : triads) {
    out << "  " << display_name(p, ids[t.i]) << " / " << display_name(p, ids[t.j]) << " / "
        << display_name(p, ids[t.k]) << "  deviation " << fixed(t.deviation) << '\n';
  }
}

Json triads_json(const std::vector<InconsistentTriad>& triads, const std::vector<std::string>& ids) {
  Json arr = Json::array();
  for (const auto& t : triads) arr.push_back(to_json(t, ids));
  return arr;
}

// ---- new -----------------------------------------------------------------

struct NewArgs {
  std::string name;
  std::string decision_csv;
  std::vector<std::string> experts;
  bool force = false;
};

Expert parse_expert_arg(const std::string& text) {
  std::stringstream ss(text);
  std::string id, role, name;
  std::getline(ss, id, ':');
  std::getline(ss, role, ':');
  std::getline(ss, name);
  if (id.empty() || role.empty()) throw UsageError("--expert takes id:role[:name], got '" + text + "'");
  return {id, name.empty() ? id : name, parse_expert_role(role)};
}

int cmd_new(const Globals& g, const NewArgs& a, std::ostream& out) {
  const fs::path path = require_project(g);
  if (fs::exists(path) && !a.force) {
    throw Error(ErrorCode::Conflict, "project file exists; pass --force to overwrite", path.string());
  }
  std::string name = a.name;
  if (name.empty()) {
    name = path.filename().string();
    if (name.ends_with(kProjectSuffix)) name.resize(name.size() - std::string(kProjectSuffix).size());
  }
  Project p = new_project(name);
  if (auto t = g.threshold()) p.settings.cr_threshold = *t;
  if (auto r = g.rounding()) p.settings.rounding = *r;
  for (const auto& e : a.experts) p.experts.push_back(parse_expert_arg(e));
  validate_project(p);
  if (!a.decision_csv.empty()) import_decision_csv(p, read_text_file(a.decision_csv));
  save_project(p, path);
  if (g.json) {
    write_json(out, {{"project", path.string()}, {"revision", p.revision}, {"criteria", p.criteria.size()},
                     {"alternatives", p.alternatives.size()}, {"experts", p.experts.size()}});
  } else {
    out << "Created " << path.string() << " (revision " << p.revision << "): " << p.criteria.size() << " criteria, "
        << p.alternatives.size() << " alternatives, " << p.experts.size() << " experts\n";
  }
  return 0;
}

// ---- screen / scores -------------------------------------------------------

int cmd_screen(const Globals& g, const std::string& csv, std::ostream& out) {
  const fs::path path = require_project(g);
  Project p = load_project(path);
  import_likert_csv(p, read_text_file(csv));
  const auto outcome = apply_screening(p);
  save_project(p, path);
  if (g.json) {
    Json j = to_json(outcome);
    j["revision"] = p.revision;
    write_json(out, j);
    return 0;
  }
  Table t({"Item", "Kind", "Mean", "SD", "Status"});
  auto add = [&](const ScreenedItem& s) {
    std::string status = "retained";
    if (!s.failed.empty()) {
      status = "eliminated (";
      for (std::size_t k = 0; k < s.failed.size(); ++k) status += (k ? ", " : "") + std::string(to_string(s.failed[k]));
      status += ")";
    }
    t.add({s.item_id, to_string(s.kind), fixed(s.mean), fixed(s.sd), status});
  };
  for (const auto& s : outcome.retained) add(s);
  for (const auto& s : outcome.eliminated) add(s);
  t.print(out);
  out << outcome.retained.size() << " retained, " << outcome.eliminated.size() << " eliminated\n";
  return 0;
}

int cmd_scores(const Globals& g, const std::string& csv, const std::string& expert, std::ostream& out) {
  const fs::path path = require_project(g);
  Project p = load_project(path);
  import_decision_csv(p, read_text_file(csv), expert);
  save_project(p, path);
  if (g.json) {
    write_json(out, {{"revision", p.revision}, {"alternatives", p.alternatives.size()}, {"criteria", p.criteria.size()}});
  } else {
    out << "Imported scores for " << p.alternatives.size() << " alternatives (revision " << p.revision << ")\n";
  }
  return 0;
}

// ---- judge -----------------------------------------------------------------

struct JudgeArgs {
  std::string file;
  std::string expert;
  std::string role;
  std::string name;
};

bool next_line(std::istream& in, std::string& line) {
  if (!std::getline(in, line)) return false;
  while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
  line.erase(0, line.find_first_not_of(' ') == std::string::npos ? line.size() : line.find_first_not_of(' '));
  return true;
}

// Menu entries 1-9 by intensity.
constexpr std::array<LinguisticLabel, 9> kMenu = {
    LinguisticLabel::Equal,           LinguisticLabel::EqualToModerate,    LinguisticLabel::Moderate,
    LinguisticLabel::ModerateToStrong, LinguisticLabel::Strong,            LinguisticLabel::StrongToVeryStrong,
    LinguisticLabel::VeryStrong,      LinguisticLabel::VeryStrongToExtreme, LinguisticLabel::Extreme,
};

std::vector<JudgmentEntry> interactive_judgments(const Project& p, std::istream& in, std::ostream& out) {
  std::vector<JudgmentEntry> entries;
  const std::size_t n = p.criteria.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const std::string a = display_name(p, p.criteria[i].id), b = display_name(p, p.criteria[j].id);
      out << "\nCompare \"" << a << "\" with \"" << b << "\":\n";
      for (std::size_t k = 0; k < kMenu.size(); ++k) {
        const Tfn t = linguistic_to_tfn(kMenu[k]);
        out << "  " << k + 1 << ". " << label_phrase(kMenu[k]) << " (" << t.l << ", " << t.m << ", " << t.u
            << ")\n";
      }
      std::optional<LinguisticLabel> label;
      std::string line;
      while (!label) {
        out << "Intensity [1-9]: " << std::flush;
        if (!next_line(in, line)) throw Error(ErrorCode::Input, "input ended before all pairs were judged");
        if (line.size() == 1 && line[0] >= '1' && line[0] <= '9') {
          label = kMenu[static_cast<std::size_t>(line[0] - '1')];
        } else {
          label = try_parse_label(line);
        }
        if (!label) out << "Not a menu entry: '" << line << "'. Enter a number from 1 to 9.\n";
      }
      bool reciprocal = false;
      if (*label != LinguisticLabel::Equal) {
        while (true) {
          out << "More important: 1. " << a << "  2. " << b << " [1-2]: " << std::flush;
          if (!next_line(in, line)) throw Error(ErrorCode::Input, "input ended before all pairs were judged");
          if (line == "1" || line == "2") {
            reciprocal = line == "2";
            break;
          }
          out << "Enter 1 or 2.\n";
        }
      }
      entries.push_back({p.criteria[i].id, p.criteria[j].id, *label, reciprocal});
    }
  }
  return entries;
}

std::map<std::string, std::vector<JudgmentEntry>> judgments_from_file(Project& p, const std::string& file) {
  Json j;
  try {
    j = Json::parse(read_text_file(file));
  } catch (const Json::parse_error& e) {
    throw Error(ErrorCode::Parse, std::string("judgments file is not valid JSON: ") + e.what(), file);
  }
  for (std::size_t k = 0; k < j.value("experts", Json::array()).size(); ++k) {
    const Json& e = j.at("experts")[k];
    const std::string id = e.at("id").get<std::string>();
    if (p.find_expert(id)) continue;
    try {
      p.experts.push_back({id, e.value("name", id), parse_expert_role(e.value("role", ""))});
    } catch (const Error& err) {
      throw Error(err.code(), err.what(), "/experts/" + std::to_string(k) + "/role");
    }
  }
  if (!j.contains("judgments") || !j.at("judgments").is_object()) {
    throw Error(ErrorCode::Validation, "judgments file needs a 'judgments' object keyed by expert", "/judgments");
  }
  std::map<std::string, std::vector<JudgmentEntry>> out;
  for (const auto& [expert, list] : j.at("judgments").items()) {
    for (std::size_t k = 0; k < list.size(); ++k) {
      const std::string at = "/judgments/" + expert + "/" + std::to_string(k);
      const Json& e = list[k];
      if (!e.contains("row") || !e.contains("col") || !e.contains("label")) {
        throw Error(ErrorCode::Validation, "judgment needs row, col and label", at);
      }
      const auto label = try_parse_label(e.at("label").get<std::string>());
      if (!label) throw Error(ErrorCode::Validation, "unknown linguistic label", at + "/label");
      out[expert].push_back({e.at("row").get<std::string>(), e.at("col").get<std::string>(), *label,
                             e.value("reciprocal", false)});
    }
  }
  return out;
}

int cmd_judge(const Globals& g, const JudgeArgs& a, std::istream& in, std::ostream& out, std::ostream& err) {
  const fs::path path = require_project(g);
  if (a.file.empty() && a.expert.empty()) throw UsageError("judge needs --file or --expert");
  Project p = load_project(path);
  if (auto t = g.threshold()) p.settings.cr_threshold = *t;
  std::vector<std::string> touched;
  if (!a.file.empty()) {
    for (auto& [expert, entries] : judgments_from_file(p, a.file)) {
      set_judgments(p, expert, std::move(entries));
      touched.push_back(expert);
    }
  } else {
    if (!p.find_expert(a.expert)) {
      if (a.role.empty()) throw Error(ErrorCode::Reference, "unknown expert '" + a.expert + "'; pass --role to add", a.expert);
      p.experts.push_back({a.expert, a.name.empty() ? a.expert : a.name, parse_expert_role(a.role)});
    }
    if (p.criteria.size() < 2) throw Error(ErrorCode::Input, "at least two criteria are needed for pairwise judgments");
    set_judgments(p, a.expert, interactive_judgments(p, in, g.json ? err : out));
    touched.push_back(a.expert);
  }
  save_project(p, path);

  const auto crs = expert_consistency(p);
  Json j = {{"revision", p.revision}, {"cr_threshold", p.settings.cr_threshold}};
  Json experts = Json::object();
  if (!g.json) out << '\n';
  for (const auto& expert : touched) {
    const auto cr = crs.at(expert);
    Json ej = {{"cr", cr ? Json(*cr) : Json(nullptr)}};
    if (!g.json) out << "Expert " << expert << ": CR " << (cr ? fixed(*cr) : std::string("incomplete")) << '\n';
    if (cr && *cr >= p.settings.cr_threshold) {
      std::vector<JudgmentEntry> entries = p.judgments.at(expert);
      Project single = p;
      single.judgments = {{expert, entries}};
      const auto m = compute_weights(single).aggregate;
      const auto triads = inconsistent_triads(m, 3, p.settings.cr_method);
      ej["inconsistent_triads"] = triads_json(triads, m.criterion_ids());
      if (!g.json) print_triads(out, p, triads, m.criterion_ids());
    }
    experts[expert] = std::move(ej);
  }
  j["experts"] = std::move(experts);
  try {
    const auto result = compute_weights(p);
    j["aggregate"] = {{"cr", result.cr}, {"accepted", result.accepted},
                      {"inconsistent_triads", triads_json(result.accepted ? std::vector<InconsistentTriad>{} : result.triads,
                                                          result.aggregate.criterion_ids())}};
    if (!g.json) {
      out << "Aggregate CR " << fixed(result.cr) << " (threshold " << fixed(result.cr_threshold) << "): "
          << (result.accepted ? "accepted" : "rejected") << '\n';
      if (!result.accepted) print_triads(out, p, result.triads, result.aggregate.criterion_ids());
    }
  } catch (const Error& e) {
    j["aggregate"] = nullptr;
    if (!g.json) out << "Aggregate pending: " << e.what() << '\n';
  }
  if (g.json) write_json(out, j);
  return 0;
}

// ---- weights / rank ----------------------------------------------------------

int cmd_weights(const Globals& g, std::ostream& out, std::ostream& err) {
  const fs::path path = require_project(g);
  Project p = load_project(path);
  if (auto t = g.threshold()) p.settings.cr_threshold = *t;
  const auto result = compute_weights(p);
  store_weights(p, result);
  save_project(p, path);
  const auto ids = result.aggregate.criterion_ids();
  if (g.json) {
    Json j = to_json(result);
    j["revision"] = p.revision;
    write_json(out, j);
  } else {
    if (result.weights) {
      Table t({"Criterion", "Direction", "l", "m", "u", "Weight"});
      for (std::size_t k = 0; k < ids.size(); ++k) {
        const Tfn& w = result.weights->fuzzy_weights[k];
        t.add({display_name(p, ids[k]), to_string(result.weights->directions[k]), fixed(w.l), fixed(w.m), fixed(w.u),
               fixed(result.weights->crisp_weights[k])});
      }
      t.print(out);
    }
    out << "CR " << fixed(result.cr) << " (threshold " << fixed(result.cr_threshold) << "): "
        << (result.accepted ? "accepted" : "rejected") << '\n';
    if (!result.accepted) print_triads(out, p, result.triads, ids);
  }
  if (!result.accepted) {
    err << "error: "
        << Error(ErrorCode::ConsistencyGate,
                 "CR " + fixed(result.cr) + " is not below the threshold " + fixed(result.cr_threshold))
               .describe()
        << '\n';
    return 1;
  }
  return 0;
}

int cmd_rank(const Globals& g, std::ostream& out) {
  const Project p = load_project(require_project(g));
  const auto ranking = compute_ranking(p, ranking_options(p, g.rounding()));
  if (g.json) {
    write_json(out, to_json(ranking, p.criterion_ids()));
    return 0;
  }
  Table t({"Alternative", "d+", "d-", "CC", "Rank"});
  for (const auto& a : ranking.alternatives) {
    std::string rank = std::to_string(a.rank);
    if (a.tied) rank += "*";
    t.add({a.alternative, fixed(a.d_plus), fixed(a.d_minus), fixed(a.cc), rank});
  }
  t.print(out);
  for (const auto& a : ranking.alternatives) {
    if (a.tied) {
      out << "* tied closeness coefficient\n";
      break;
    }
  }
  return 0;
}

// ---- sensitivity / tiers -----------------------------------------------------

struct SensitivityArgs {
  std::vector<double> oat;
  std::size_t mc = 0;
  std::uint64_t seed = 0;
  bool save = false;
};

void print_oat(std::ostream& out, const Project& p, const StabilityReport& r) {
  const auto ids = p.criterion_ids();
  out << "One-at-a-time weight perturbation\n";
  Table t({"Criterion", "Delta", "Top alternative", "Reversal"});
  for (const auto& s : r.scenarios) {
    const std::string crit = s.criterion ? display_name(p, ids[*s.criterion]) : "";
    if (s.skipped) {
      t.add({crit, fixed(s.delta), "skipped", ""});
    } else {
      t.add({crit, fixed(s.delta), r.base.alternatives[s.top].alternative, s.reversal ? "yes" : "no"});
    }
  }
  t.print(out);
  out << r.evaluated << " scenarios evaluated, " << r.rank_reversal_count << " with a rank reversal\n";
  for (std::size_t j = 0; j < r.critical_delta.size(); ++j) {
    if (r.critical_delta[j]) {
      out << "Critical delta for " << display_name(p, ids[j]) << ": " << fixed(*r.critical_delta[j]) << '\n';
    }
  }
}

void print_mc(std::ostream& out, const StabilityReport& r, const SensitivityArgs& a) {
  out << "Monte Carlo weight sampling (" << a.mc << " draws, seed " << a.seed << ")\n";
  std::vector<std::string> head{"Alternative"};
  for (std::size_t k = 0; k < r.rank_frequency.size(); ++k) head.push_back("Rank " + std::to_string(k + 1));
  Table t(head);
  for (std::size_t i = 0; i < r.rank_frequency.size(); ++i) {
    std::vector<std::string> row{r.base.alternatives[i].alternative};
    for (auto n : r.rank_frequency[i]) row.push_back(std::to_string(n));
    t.add(row);
  }
  t.print(out);
  out << r.rank_reversal_count << " of " << r.evaluated << " draws change the base ranking\n";
}

int cmd_sensitivity(const Globals& g, const SensitivityArgs& a, std::ostream& out) {
  const fs::path path = require_project(g);
  if (a.oat.empty() && a.mc == 0) throw UsageError("sensitivity needs --oat or --mc");
  Project p = load_project(path);
  const StabilityParams params{a.oat, a.mc, a.seed};
  const auto run = compute_stability(p, params, ranking_options(p, g.rounding()));
  const Json j = stability_json(p, params, run);
  if (a.save) {
    store_stability(p, j);
    save_project(p, path);
  }
  if (g.json) {
    write_json(out, j);
    return 0;
  }
  if (run.oat) print_oat(out, p, *run.oat);
  if (run.oat && run.monte_carlo) out << '\n';
  if (run.monte_carlo) print_mc(out, *run.monte_carlo, a);
  return 0;
}

std::vector<int> parse_bands(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(part, &used));
      if (used != part.size()) throw std::invalid_argument(part);
    } catch (const std::exception&) {
      throw UsageError("--bands takes comma-separated integers, got '" + text + "'");
    }
  }
  return out;
}

int cmd_tiers(const Globals& g, const std::string& bands, std::ostream& out) {
  const Project p = load_project(require_project(g));
  const auto ranking = compute_ranking(p, ranking_options(p, g.rounding()));
  const auto tiers = compute_tiers(p, ranking, bands.empty() ? std::vector<int>{} : parse_bands(bands));
  if (g.json) {
    write_json(out, to_json(tiers));
    return 0;
  }
  for (std::size_t k = 0; k < tiers.tiers.size(); ++k) {
    out << tier_name(k) << ':';
    for (std::size_t i = 0; i < tiers.tiers[k].size(); ++i) out << (i ? ", " : " ") << tiers.tiers[k][i];
    out << '\n';
  }
  return 0;
}

// ---- report / serve ----------------------------------------------------------

int cmd_report(const Globals& g, const std::string& format, const std::string& dest, std::ostream& out) {
  const Project p = load_project(require_project(g));
  const ReportFormat f = parse_report_format(format);
  const auto files = emit_report(p, f, ranking_options(p, g.rounding()));
  if (dest.empty()) {
    if (f != ReportFormat::Markdown) throw UsageError("--out is required for csv and svg reports");
    out << files.front().content;
    return 0;
  }
  std::vector<fs::path> written;
  if (f == ReportFormat::Markdown && fs::path(dest).extension() == ".md") {
    written.push_back(dest);
  } else {
    fs::create_directories(dest);
    for (const auto& file : files) written.push_back(fs::path(dest) / file.name);
  }
  for (std::size_t k = 0; k < files.size(); ++k) {
    std::ofstream o(written[k], std::ios::binary | std::ios::trunc);
    if (!o) throw Error(ErrorCode::Io, "cannot write report file", written[k].string());
    o << files[k].content;
  }
  if (g.json) {
    Json list = Json::array();
    for (const auto& w : written) list.push_back(w.string());
    write_json(out, {{"files", list}});
  } else {
    for (const auto& w : written) out << "Wrote " << w.string() << '\n';
  }
  return 0;
}

struct ServeArgs {
  int port = 8080;
  std::string host = "127.0.0.1";
  std::string root;
  std::string ui;
};

int cmd_serve(const Globals& g, const ServeArgs& a, std::ostream& out) {
  ServiceOptions o;
  o.root = !a.root.empty() ? fs::path(a.root) : !g.project.empty() ? fs::path(g.project).parent_path() : fs::path(".");
  if (o.root.empty()) o.root = ".";
  o.host = a.host;
  o.port = a.port;
  o.ui_dir = a.ui;
  ApiService service(o);
  const int port = service.bind();
  if (g.json) {
    write_json(out, {{"host", o.host}, {"port", port}, {"root", o.root.string()}});
  } else {
    out << "Serving " << o.root.string() << " on http://" << o.host << ':' << port << '\n';
  }
  out.flush();
  service.listen();
  return 0;
}

}  // namespace

int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Fuzzy AHP and TOPSIS decision support", "mcdm"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--project", g.project, "Project file (.mcdm.json)");
  g.round_opt = app.add_option("--round", g.round, "Round intermediate TOPSIS values to this many decimals")
                    ->check(CLI::Range(0, 12));
  g.cr_opt = app.add_option("--cr-threshold", g.cr_threshold, "Consistency ratio threshold")
                 ->check(CLI::PositiveNumber);
  app.add_flag("--json", g.json, "Machine-readable JSON output");

  NewArgs new_args;
  auto* c_new = app.add_subcommand("new", "Create a project");
  c_new->add_option("--name", new_args.name, "Project name");
  c_new->add_option("--decision-csv", new_args.decision_csv, "Seed criteria, alternatives and scores from a CSV")
      ->check(CLI::ExistingFile);
  c_new->add_option("--expert", new_args.experts, "Panel member as id:role[:name] (role academic|practitioner)");
  c_new->add_flag("--force", new_args.force, "Overwrite an existing file");

  std::string screen_csv;
  auto* c_screen = app.add_subcommand("screen", "Import Likert assessments and apply screening");
  c_screen->add_option("--csv", screen_csv, "Likert CSV")->required()->check(CLI::ExistingFile);

  std::string scores_csv, scores_expert = kConsensusExpert;
  auto* c_scores = app.add_subcommand("scores", "Import decision-matrix scores from CSV");
  c_scores->add_option("--csv", scores_csv, "Decision CSV")->required()->check(CLI::ExistingFile);
  c_scores->add_option("--expert", scores_expert, "Panel member the scores belong to");

  JudgeArgs judge_args;
  auto* c_judge = app.add_subcommand("judge", "Record pairwise judgments from a file or interactively");
  auto* judge_file = c_judge->add_option("--file", judge_args.file, "Judgments JSON file")->check(CLI::ExistingFile);
  auto* judge_expert = c_judge->add_option("--expert", judge_args.expert, "Expert to prompt for");
  judge_file->excludes(judge_expert);
  c_judge->add_option("--role", judge_args.role, "Role when adding a new expert");
  c_judge->add_option("--name", judge_args.name, "Name when adding a new expert");

  auto* c_weights = app.add_subcommand("weights", "Derive criterion weights and check consistency");
  auto* c_rank = app.add_subcommand("rank", "Rank alternatives");

  SensitivityArgs sens;
  auto* c_sens = app.add_subcommand("sensitivity", "Weight sensitivity analysis");
  c_sens->add_option("--oat", sens.oat, "Comma-separated weight deltas")->delimiter(',')->allow_extra_args(false);
  c_sens->add_option("--mc", sens.mc, "Monte Carlo weight draws");
  c_sens->add_option("--seed", sens.seed, "Random seed");
  c_sens->add_flag("--save", sens.save, "Store the result in the project cache");

  std::string bands;
  auto* c_tiers = app.add_subcommand("tiers", "Adoption roadmap tiers");
  c_tiers->add_option("--bands", bands, "Comma-separated band sizes");

  std::string report_format = "markdown", report_out;
  auto* c_report = app.add_subcommand("report", "Emit a report");
  c_report->add_option("--format", report_format, "markdown, csv or svg");
  c_report->add_option("--out", report_out, "Output file (.md) or directory");

  ServeArgs serve;
  auto* c_serve = app.add_subcommand("serve", "Start the HTTP service");
  c_serve->add_option("--port", serve.port, "Port (0 picks a free one)")->check(CLI::Range(0, 65535));
  c_serve->add_option("--host", serve.host, "Bind address");
  c_serve->add_option("--root", serve.root, "Directory holding project files");
  c_serve->add_option("--ui", serve.ui, "Directory holding the UI bundle");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    std::string msg = e.what();
    std::replace(msg.begin(), msg.end(), '\n', ' ');
    err << "error: usage: " << msg << '\n';
    return 2;
  }

  try {
    if (c_new->parsed()) return cmd_new(g, new_args, out);
    if (c_screen->parsed()) return cmd_screen(g, screen_csv, out);
    if (c_scores->parsed()) return cmd_scores(g, scores_csv, scores_expert, out);
    if (c_judge->parsed()) return cmd_judge(g, judge_args, in, out, err);
    if (c_weights->parsed()) return cmd_weights(g, out, err);
    if (c_rank->parsed()) return cmd_rank(g, out);
    if (c_sens->parsed()) return cmd_sensitivity(g, sens, out);
    if (c_tiers->parsed()) return cmd_tiers(g, bands, out);
    if (c_report->parsed()) return cmd_report(g, report_format, report_out, out);
    if (c_serve->parsed()) return cmd_serve(g, serve, out);
  } catch (const UsageError& e) {
    err << "error: usage: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    std::string msg = e.describe();
    std::replace(msg.begin(), msg.end(), '\n', ' ');
    err << "error: " << msg << '\n';
    return 1;
  } catch (const std::exception& e) {
    err << "error: internal: " << e.what() << '\n';
    return 1;
  }
  err << "error: usage: no subcommand\n";
  return 2;
}

}  // namespace mcdm::cli
