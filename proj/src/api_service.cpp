#include "mcdm/api_service.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <regex>
#include <sstream>

#include "httplib.h"
#include "mcdm/report.hpp"
#include "mcdm/workspace.hpp"

namespace mcdm {

int http_status(const Error& e) {
  switch (e.code()) {
    case ErrorCode::NotFound: return 404;
    case ErrorCode::StaleRevision:
    case ErrorCode::Conflict: return 409;
    case ErrorCode::ConsistencyGate:
    case ErrorCode::MustRecompute:
    case ErrorCode::TieBoundary: return 422;
    case ErrorCode::Io: return 500;
    default: return 400;
  }
}

namespace {

const char* kIndexPage = R"(<!doctype html>
<html><head><meta charset="utf-8"><title>MCDM panel service</title></head>
<body><h1>MCDM panel service</h1>
<p>No UI bundle is installed. The JSON API is available under <code>/projects</code>.</p>
</body></html>
)";

Json error_body(const Error& e) {
  Json j = {{"code", to_string(e.code())}, {"message", e.what()}};
  if (!e.location().empty()) j["location"] = e.location();
  return j;
}

void send_json(httplib::Response& res, const Json& body, int status = 200) {
  res.status = status;
  res.set_content(body.dump(), "application/json");
}

Json parse_body(const httplib::Request& req) {
  if (req.body.empty()) return Json::object();
  try {
    return Json::parse(req.body);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorCode::Parse, std::string("request body is not valid JSON: ") + e.what());
  }
}

std::optional<int> round_param(const httplib::Request& req) {
  if (!req.has_param("round")) return std::nullopt;
  const std::string v = req.get_param_value("round");
  try {
    std::size_t used = 0;
    const int r = std::stoi(v, &used);
    if (used != v.size() || r < 0 || r > 12) throw std::invalid_argument(v);
    return r;
  } catch (const std::exception&) {
    throw Error(ErrorCode::Input, "round must be an integer within 0..12", "round");
  }
}

std::vector<int> bands_param(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) {
    try {
      out.push_back(std::stoi(part));
    } catch (const std::exception&) {
      throw Error(ErrorCode::Input, "bands must be a comma-separated list of integers", "bands");
    }
  }
  return out;
}

void check_revision(const Json& body, const Project& p) {
  if (!body.contains("revision")) return;
  if (!body.at("revision").is_number_unsigned() || body.at("revision").get<std::uint64_t>() != p.revision) {
    throw Error(ErrorCode::StaleRevision,
                "revision token does not match current revision " + std::to_string(p.revision), "/revision");
  }
}

Json freshness(const Project& p) {
  return {{"weights", to_string(cache_state(p, "weights"))}, {"stability", to_string(cache_state(p, "stability"))}};
}

std::vector<JudgmentEntry> judgment_entries(const Json& list) {
  if (!list.is_array()) throw Error(ErrorCode::Validation, "judgments must be an array", "/judgments");
  std::vector<JudgmentEntry> out;
  for (std::size_t k = 0; k < list.size(); ++k) {
    const std::string at = "/judgments/" + std::to_string(k);
    const Json& e = list[k];
    if (!e.is_object() || !e.contains("row") || !e.contains("col") || !e.contains("label")) {
      throw Error(ErrorCode::Validation, "judgment needs row, col and label", at);
    }
    const auto label = try_parse_label(e.at("label").get<std::string>());
    if (!label) throw Error(ErrorCode::Validation, "unknown linguistic label", at + "/label");
    out.push_back({e.at("row").get<std::string>(), e.at("col").get<std::string>(), *label, e.value("reciprocal", false)});
  }
  return out;
}

}  // namespace

struct ApiService::Impl {
  ServiceOptions options;
  httplib::Server server;
  int port = -1;

  std::mutex locks_guard;
  std::map<std::string, std::unique_ptr<std::mutex>> locks;

  std::mutex& lock_for(const std::string& id) {
    std::lock_guard<std::mutex> g(locks_guard);
    auto& m = locks[id];
    if (!m) m = std::make_unique<std::mutex>();
    return *m;
  }

  std::filesystem::path path_for(const std::string& id) const { return options.root / (id + kProjectSuffix); }

  Project load(const std::string& id) {
    const auto path = path_for(id);
    if (!std::filesystem::exists(path)) throw Error(ErrorCode::NotFound, "unknown project '" + id + "'", id);
    return load_project(path);
  }

  using Handler = std::function<void(const httplib::Request&, httplib::Response&)>;

  static Handler guarded(Handler fn) {
    return [fn = std::move(fn)](const httplib::Request& req, httplib::Response& res) {
      try {
        fn(req, res);
      } catch (const Error& e) {
        send_json(res, error_body(e), http_status(e));
      } catch (const Json::exception& e) {
        send_json(res, {{"code", "validation"}, {"message", e.what()}}, 400);
      } catch (const std::exception& e) {
        send_json(res, {{"code", "internal"}, {"message", e.what()}}, 500);
      }
    };
  }

  void routes() {
    const std::string id = R"(/projects/([a-z0-9][a-z0-9_\-]*))";

    server.Get("/projects", guarded([this](const httplib::Request&, httplib::Response& res) {
      Json list = Json::array();
      std::vector<std::filesystem::path> files;
      if (std::filesystem::is_directory(options.root)) {
        for (const auto& entry : std::filesystem::directory_iterator(options.root)) {
          const std::string name = entry.path().filename().string();
          if (name.size() > std::string(kProjectSuffix).size() && name.ends_with(kProjectSuffix)) files.push_back(entry.path());
        }
      }
      std::sort(files.begin(), files.end());
      for (const auto& f : files) {
        const std::string name = f.filename().string();
        const std::string pid = name.substr(0, name.size() - std::string(kProjectSuffix).size());
        try {
          std::lock_guard<std::mutex> g(lock_for(pid));
          const Project p = load_project(f);
          list.push_back({{"id", pid}, {"name", p.metadata.name}, {"revision", p.revision}});
        } catch (const Error& e) {
          list.push_back({{"id", pid}, {"error", error_body(e)}});
        }
      }
      send_json(res, list);
    }));

    server.Post("/projects", guarded([this](const httplib::Request& req, httplib::Response& res) {
      const Json body = parse_body(req);
      Project p = body.contains("project") ? project_from_json(body.at("project"))
                                           : new_project(body.value("name", std::string("untitled")));
      if (!body.contains("project") && body.contains("name")) p.metadata.name = body.at("name").get<std::string>();
      const std::string pid = body.contains("id") ? body.at("id").get<std::string>() : slugify(p.metadata.name);
      if (!std::regex_match(pid, std::regex(R"([a-z0-9][a-z0-9_\-]*)"))) {
        throw Error(ErrorCode::Validation, "project id must be lower-case letters, digits, '_' or '-'", "/id");
      }
      std::lock_guard<std::mutex> g(lock_for(pid));
      if (std::filesystem::exists(path_for(pid))) throw Error(ErrorCode::Conflict, "project '" + pid + "' exists", pid);
      save_project(p, path_for(pid));
      send_json(res, {{"id", pid}, {"revision", p.revision}, {"project", project_to_json(p)}}, 201);
    }));

    server.Get(id, guarded([this](const httplib::Request& req, httplib::Response& res) {
      const std::string pid = req.matches[1];
      std::lock_guard<std::mutex> g(lock_for(pid));
      const Project p = load(pid);
      send_json(res, {{"id", pid}, {"revision", p.revision}, {"freshness", freshness(p)}, {"project", project_to_json(p)}});
    }));

    server.Put(id, guarded([this](const httplib::Request& req, httplib::Response& res) {
      const std::string pid = req.matches[1];
      const Json body = parse_body(req);
      if (!body.contains("revision")) throw Error(ErrorCode::Validation, "PUT requires a revision token", "/revision");
      if (!body.contains("project")) throw Error(ErrorCode::Validation, "PUT requires a project body", "/project");
      std::lock_guard<std::mutex> g(lock_for(pid));
      const Project current = load(pid);
      check_revision(body, current);
      Project next = project_from_json(body.at("project"));
      next.revision = current.revision;
      next.metadata.created = current.metadata.created;
      commit(next);
      save_project(next, path_for(pid));
      send_json(res, {{"id", pid}, {"revision", next.revision}, {"freshness", freshness(next)}});
    }));

    server.Post(id + "/judgments", guarded([this](const httplib::Request& req, httplib::Response& res) {
      const std::string pid = req.matches[1];
      const Json body = parse_body(req);
      std::lock_guard<std::mutex> g(lock_for(pid));
      Project p = load(pid);
      check_revision(body, p);
      const std::string expert = body.at("expert").get<std::string>();
      if (!p.find_expert(expert)) {
        if (!body.contains("expert_info")) throw Error(ErrorCode::Reference, "unknown expert '" + expert + "'", "/expert");
        const Json& info = body.at("expert_info");
        p.experts.push_back({expert, info.value("name", expert), parse_expert_role(info.value("role", ""))});
      }
      set_judgments(p, expert, judgment_entries(body.at("judgments")));

      Json out = Json::object();
      Json crs = Json::object();
      for (const auto& [e, cr] : expert_consistency(p)) crs[e] = cr ? Json(*cr) : Json(nullptr);
      out["expert_crs"] = std::move(crs);
      try {
        const FahpResult result = compute_weights(p);
        store_weights(p, result);
        out["aggregate"] = to_json(result);
      } catch (const Error& e) {
        // Another panel member has not finished yet; the aggregate waits.
        out["aggregate"] = nullptr;
        out["pending"] = error_body(e);
      }
      save_project(p, path_for(pid));
      out["revision"] = p.revision;
      send_json(res, out);
    }));

    server.Post(id + "/scores", guarded([this](const httplib::Request& req, httplib::Response& res) {
      const std::string pid = req.matches[1];
      const Json body = parse_body(req);
      std::lock_guard<std::mutex> g(lock_for(pid));
      Project p = load(pid);
      check_revision(body, p);
      const std::string expert = body.value("expert", std::string(kConsensusExpert));
      if (body.contains("csv")) {
        import_decision_csv(p, body.at("csv").get<std::string>(), expert);
      } else {
        set_scores(p, expert, body.at("scores").get<std::map<std::string, std::map<std::string, double>>>());
      }
      save_project(p, path_for(pid));
      send_json(res, {{"revision", p.revision}, {"freshness", freshness(p)}});
    }));

    server.Get(id + "/weights", guarded([this](const httplib::Request& req, httplib::Response& res) {
      const std::string pid = req.matches[1];
      std::lock_guard<std::mutex> g(lock_for(pid));
      const Project p = load(pid);
      const bool cached = cache_state(p, "weights") == Freshness::Fresh;
      Json result = cached ? p.cache.at("weights").value : to_json(compute_weights(p));
      result["cached"] = cached;
      if (!result.value("accepted", false)) {
        result["code"] = to_string(ErrorCode::ConsistencyGate);
        result["message"] = "consistency ratio is not below the threshold";
        send_json(res, result, 422);
        return;
      }
      send_json(res, result);
    }));

    server.Get(id + "/ranking", guarded([this](const httplib::Request& req, httplib::Response& res) {
      const std::string pid = req.matches[1];
      std::lock_guard<std::mutex> g(lock_for(pid));
      const Project p = load(pid);
      send_json(res, to_json(compute_ranking(p, ranking_options(p, round_param(req))), p.criterion_ids()));
    }));

    server.Post(id + "/whatif", guarded([this](const httplib::Request& req, httplib::Response& res) {
      const std::string pid = req.matches[1];
      const Json body = parse_body(req);
      Project p;
      {
        std::lock_guard<std::mutex> g(lock_for(pid));
        p = load(pid);
      }
      const auto weights = body.at("weights").get<std::vector<double>>();
      for (double w : weights) {
        if (!std::isfinite(w) || w < 0.0) throw Error(ErrorCode::Validation, "weights must be non-negative", "/weights");
      }
      std::optional<int> round;
      if (body.contains("round") && !body.at("round").is_null()) round = body.at("round").get<int>();
      const auto ranking = topsis_pipeline(project_decision_matrix(p), weights, ranking_options(p, round));
      send_json(res, to_json(ranking, p.criterion_ids()));
    }));

    server.Post(id + "/sensitivity", guarded([this](const httplib::Request& req, httplib::Response& res) {
      const std::string pid = req.matches[1];
      const Json body = parse_body(req);
      std::lock_guard<std::mutex> g(lock_for(pid));
      Project p = load(pid);
      StabilityParams params;
      params.oat_deltas = body.value("oat", std::vector<double>{});
      params.mc_samples = body.value("mc", std::size_t{0});
      params.seed = body.value("seed", std::uint64_t{0});
      if (params.oat_deltas.empty() && params.mc_samples == 0) {
        throw Error(ErrorCode::Input, "request needs 'oat' deltas or an 'mc' sample count");
      }
      std::optional<int> round;
      if (body.contains("round") && !body.at("round").is_null()) round = body.at("round").get<int>();
      const auto run = compute_stability(p, params, ranking_options(p, round));
      Json out = stability_json(p, params, run);
      if (body.value("save", false)) {
        check_revision(body, p);
        store_stability(p, out);
        save_project(p, path_for(pid));
      }
      out["revision"] = p.revision;
      send_json(res, out);
    }));

    server.Get(id + "/tiers", guarded([this](const httplib::Request& req, httplib::Response& res) {
      const std::string pid = req.matches[1];
      std::lock_guard<std::mutex> g(lock_for(pid));
      const Project p = load(pid);
      const auto ranking = compute_ranking(p, ranking_options(p, round_param(req)));
      const auto bands = req.has_param("bands") ? bands_param(req.get_param_value("bands")) : std::vector<int>{};
      send_json(res, to_json(compute_tiers(p, ranking, bands)));
    }));

    server.Get(id + R"(/report\.md)", guarded([this](const httplib::Request& req, httplib::Response& res) {
      const std::string pid = req.matches[1];
      std::lock_guard<std::mutex> g(lock_for(pid));
      const Project p = load(pid);
      const auto files = emit_report(p, ReportFormat::Markdown, ranking_options(p, round_param(req)));
      res.set_content(files.front().content, "text/markdown; charset=utf-8");
    }));

    server.Get(id + R"(/report\.svg)", guarded([this](const httplib::Request& req, httplib::Response& res) {
      const std::string pid = req.matches[1];
      std::lock_guard<std::mutex> g(lock_for(pid));
      const Project p = load(pid);
      const std::string chart = req.has_param("chart") ? req.get_param_value("chart") : "closeness";
      res.set_content(render_svg_chart(p, chart, ranking_options(p, round_param(req))), "image/svg+xml");
    }));

    const bool has_ui = !options.ui_dir.empty() && std::filesystem::is_directory(options.ui_dir);
    if (has_ui) {
      server.set_mount_point("/", options.ui_dir.string());
    } else {
      server.Get("/", [](const httplib::Request&, httplib::Response& res) {
        res.set_content(kIndexPage, "text/html; charset=utf-8");
      });
    }
  }
};

ApiService::ApiService(ServiceOptions options) : impl_(std::make_unique<Impl>()) {
  impl_->options = std::move(options);
  impl_->routes();
}

ApiService::~ApiService() { stop(); }

int ApiService::bind() {
  auto& s = impl_->server;
  if (impl_->options.port == 0) {
    impl_->port = s.bind_to_any_port(impl_->options.host);
  } else {
    impl_->port = s.bind_to_port(impl_->options.host, impl_->options.port) ? impl_->options.port : -1;
  }
  if (impl_->port < 0) {
    throw Error(ErrorCode::Io, "cannot bind " + impl_->options.host + ":" + std::to_string(impl_->options.port));
  }
  return impl_->port;
}

void ApiService::listen() {
  if (impl_->port < 0) throw Error(ErrorCode::Io, "service is not bound");
  impl_->server.listen_after_bind();
}

void ApiService::stop() {
  if (impl_ && impl_->server.is_running()) impl_->server.stop();
}

bool ApiService::running() const { return impl_->server.is_running(); }

}  // namespace mcdm
