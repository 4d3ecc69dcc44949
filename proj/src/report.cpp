#include "mcdm/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "mcdm/error.hpp"

namespace mcdm {

namespace {

std::string fixed(double x, int places = 3) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", places, x);
  std::string s = buf;
  if (s == "-0.000" || s == "-0.000000") s.erase(0, 1);
  return s;
}

std::string score_text(double x) {
  if (x == std::floor(x) && std::abs(x) < 1e12) return std::to_string(static_cast<long long>(x));
  return fixed(x);
}

std::string xml_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
  return out + "\"";
}

std::string md_cell(const std::string& s) {
  std::string out;
  for (char c : s) out += c == '|' ? std::string("\\|") : std::string(1, c);
  return out;
}

// Everything a rendering needs, computed once from the snapshot.
struct Snapshot {
  const Project& project;
  CriterionWeightVector weights;
  DecisionMatrix matrix;
  RankingResult ranking;
  std::optional<RoadmapTiers> tiers;
  std::string tier_error;
  std::vector<std::string> criterion_names;

  Snapshot(const Project& p, const TopsisOptions& options)
      : project(p), weights(fresh_weights(p)), matrix(project_decision_matrix(p)),
        ranking(topsis_pipeline(matrix, weights, options)) {
    try {
      tiers = compute_tiers(p, ranking);
    } catch (const Error& e) {
      tier_error = e.describe();
    }
    for (const auto& c : p.criteria) criterion_names.push_back(c.name.empty() ? c.id : c.name);
  }
};

void md_table_header(std::ostringstream& out, const std::vector<std::string>& heads) {
  out << '|';
  for (const auto& h : heads) out << ' ' << md_cell(h) << " |";
  out << "\n|";
  for (std::size_t k = 0; k < heads.size(); ++k) out << (k == 0 ? " --- |" : " ---: |");
  out << '\n';
}

void md_row(std::ostringstream& out, const std::vector<std::string>& cells) {
  out << '|';
  for (const auto& c : cells) out << ' ' << md_cell(c) << " |";
  out << '\n';
}

void md_grid(std::ostringstream& out, const Snapshot& s, const Grid& g, bool scores) {
  std::vector<std::string> heads{"Alternative"};
  heads.insert(heads.end(), s.criterion_names.begin(), s.criterion_names.end());
  md_table_header(out, heads);
  for (std::size_t i = 0; i < g.rows; ++i) {
    std::vector<std::string> cells{s.matrix.alternatives()[i]};
    for (std::size_t j = 0; j < g.cols; ++j) cells.push_back(scores ? score_text(g(i, j)) : fixed(g(i, j)));
    md_row(out, cells);
  }
}

void md_stability(std::ostringstream& out, const Snapshot& s) {
  if (cache_state(s.project, "stability") != Freshness::Fresh) return;
  const Json& v = s.project.cache.at("stability").value;
  out << "\n## Weight sensitivity\n\n";
  const Json& params = v.at("params");
  if (!v.at("oat").is_null()) {
    const Json& oat = v.at("oat");
    out << "One-at-a-time perturbation over deltas";
    for (const auto& d : params.at("oat_deltas")) out << ' ' << fixed(d.get<double>());
    out << ": " << oat.at("evaluated").get<std::size_t>() << " scenarios evaluated, "
        << oat.at("rank_reversal_count").get<std::size_t>() << " with a rank reversal.\n\n";
    md_table_header(out, {"Criterion", "Smallest delta changing the top alternative"});
    for (std::size_t j = 0; j < oat.at("critical_delta").size(); ++j) {
      const Json& c = oat.at("critical_delta")[j];
      const std::string name = j < s.criterion_names.size() ? s.criterion_names[j] : c.at("criterion").get<std::string>();
      md_row(out, {name, c.at("critical_delta").is_null() ? "none" : fixed(c.at("critical_delta").get<double>())});
    }
    out << '\n';
  }
  if (!v.at("monte_carlo").is_null()) {
    const Json& mc = v.at("monte_carlo");
    out << "Monte Carlo: " << params.at("mc_samples").get<std::size_t>() << " weight draws, seed "
        << params.at("seed").get<std::uint64_t>() << ", " << mc.at("rank_reversal_count").get<std::size_t>()
        << " with a rank reversal.\n\n";
    const std::size_t m = s.matrix.alternative_count();
    std::vector<std::string> heads{"Alternative"};
    for (std::size_t r = 0; r < m; ++r) heads.push_back("Rank " + std::to_string(r + 1));
    md_table_header(out, heads);
    const double total = std::max<double>(1.0, static_cast<double>(mc.at("evaluated").get<std::size_t>()));
    for (const auto& alt : s.matrix.alternatives()) {
      std::vector<std::string> cells{alt};
      for (const auto& n : mc.at("rank_frequency").at(alt)) cells.push_back(fixed(n.get<double>() / total));
      md_row(out, cells);
    }
  }
}

std::string markdown(const Snapshot& s) {
  const Project& p = s.project;
  std::ostringstream out;
  out << "# " << p.metadata.name << "\n\n";
  out << "Project revision " << p.revision << ", last modified " << p.metadata.modified << ".\n";
  if (s.ranking.rounding) {
    out << "Intermediate values rounded to " << *s.ranking.rounding << " decimals before ranking.\n";
  }

  out << "\n## Criterion weights\n\n";
  md_table_header(out, {"Criterion", "Direction", "Fuzzy weight (l, m, u)", "Weight"});
  for (std::size_t j = 0; j < p.criteria.size(); ++j) {
    const Tfn& w = s.weights.fuzzy_weights[j];
    md_row(out, {s.criterion_names[j], to_string(p.criteria[j].direction),
                 "(" + fixed(w.l) + ", " + fixed(w.m) + ", " + fixed(w.u) + ")", fixed(s.weights.crisp_weights[j])});
  }
  out << "\nConsistency ratio: " << fixed(s.weights.cr) << " (threshold " << fixed(p.settings.cr_threshold) << ")\n";

  out << "\n## Decision matrix\n\n";
  md_grid(out, s, s.matrix.scores(), true);
  out << "\n## Weighted normalized matrix\n\n";
  md_grid(out, s, s.ranking.weighted, false);

  out << "\n## Ideal solutions\n\n";
  std::vector<std::string> heads{"Ideal"};
  heads.insert(heads.end(), s.criterion_names.begin(), s.criterion_names.end());
  md_table_header(out, heads);
  std::vector<std::string> pos{"A+"}, neg{"A-"};
  for (std::size_t j = 0; j < p.criteria.size(); ++j) {
    pos.push_back(fixed(s.ranking.ideals.positive[j]));
    neg.push_back(fixed(s.ranking.ideals.negative[j]));
  }
  md_row(out, pos);
  md_row(out, neg);

  out << "\n## Separation and closeness\n\n";
  md_table_header(out, {"Alternative", "d+", "d-", "CC", "Rank"});
  for (const auto& a : s.ranking.alternatives) {
    std::string rank = std::to_string(a.rank);
    if (a.tied) rank += " (tied)";
    if (a.degenerate) rank += " (degenerate)";
    md_row(out, {a.alternative, fixed(a.d_plus), fixed(a.d_minus), fixed(a.cc), rank});
  }

  out << "\n## Adoption roadmap\n\n";
  if (s.tiers) {
    md_table_header(out, {"Tier", "Alternatives"});
    for (std::size_t k = 0; k < s.tiers->tiers.size(); ++k) {
      std::string names;
      for (const auto& n : s.tiers->tiers[k]) names += (names.empty() ? "" : ", ") + n;
      md_row(out, {tier_name(k), names});
    }
  } else {
    out << "Tiers unavailable: " << s.tier_error << "\n";
  }
  md_stability(out, s);
  return out.str();
}

std::vector<ReportFile> csv_bundle(const Snapshot& s) {
  const Project& p = s.project;
  std::vector<ReportFile> files;
  std::ostringstream w;
  w << "criterion,direction,l,m,u,weight\n";
  for (std::size_t j = 0; j < p.criteria.size(); ++j) {
    const Tfn& f = s.weights.fuzzy_weights[j];
    w << csv_field(p.criteria[j].id) << ',' << to_string(p.criteria[j].direction) << ',' << fixed(f.l, 6) << ','
      << fixed(f.m, 6) << ',' << fixed(f.u, 6) << ',' << fixed(s.weights.crisp_weights[j], 6) << '\n';
  }
  files.push_back({"weights.csv", w.str()});

  std::ostringstream g;
  g << "alternative";
  for (const auto& c : p.criteria) g << ',' << csv_field(c.id);
  g << '\n';
  for (std::size_t i = 0; i < s.ranking.weighted.rows; ++i) {
    g << csv_field(s.matrix.alternatives()[i]);
    for (std::size_t j = 0; j < s.ranking.weighted.cols; ++j) g << ',' << fixed(s.ranking.weighted(i, j), 6);
    g << '\n';
  }
  files.push_back({"weighted_matrix.csv", g.str()});

  std::ostringstream id;
  id << "criterion,positive,negative\n";
  for (std::size_t j = 0; j < p.criteria.size(); ++j) {
    id << csv_field(p.criteria[j].id) << ',' << fixed(s.ranking.ideals.positive[j], 6) << ','
       << fixed(s.ranking.ideals.negative[j], 6) << '\n';
  }
  files.push_back({"ideals.csv", id.str()});

  std::ostringstream r;
  r << "alternative,d_plus,d_minus,cc,rank\n";
  for (const auto& a : s.ranking.alternatives) {
    r << csv_field(a.alternative) << ',' << fixed(a.d_plus, 6) << ',' << fixed(a.d_minus, 6) << ','
      << fixed(a.cc, 6) << ',' << a.rank << '\n';
  }
  files.push_back({"ranking.csv", r.str()});

  std::ostringstream t;
  t << "tier,alternative\n";
  if (s.tiers) {
    for (std::size_t k = 0; k < s.tiers->tiers.size(); ++k)
      for (const auto& n : s.tiers->tiers[k]) t << tier_name(k) << ',' << csv_field(n) << '\n';
  }
  files.push_back({"roadmap.csv", t.str()});
  return files;
}

std::string bar_chart(const std::string& title, const std::vector<std::string>& labels,
                      const std::vector<double>& values) {
  const int label_w = 230, bar_w = 360, row_h = 28, top = 44;
  const int height = top + row_h * static_cast<int>(labels.size()) + 16;
  const double peak = values.empty() ? 1.0 : std::max(1e-12, *std::max_element(values.begin(), values.end()));
  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << label_w + bar_w + 80 << "\" height=\"" << height
      << "\" font-family=\"sans-serif\" font-size=\"13\">\n";
  out << "<text x=\"10\" y=\"24\" font-size=\"16\" font-weight=\"bold\">" << xml_escape(title) << "</text>\n";
  for (std::size_t k = 0; k < labels.size(); ++k) {
    const int y = top + row_h * static_cast<int>(k);
    const int w = static_cast<int>(std::lround(bar_w * values[k] / peak));
    out << "<text x=\"" << label_w - 8 << "\" y=\"" << y + 17 << "\" text-anchor=\"end\">" << xml_escape(labels[k])
        << "</text>\n";
    out << "<rect x=\"" << label_w << "\" y=\"" << y + 4 << "\" width=\"" << w << "\" height=\"" << row_h - 8
        << "\" fill=\"#3b6ea5\"/>\n";
    out << "<text x=\"" << label_w + w + 6 << "\" y=\"" << y + 17 << "\">" << fixed(values[k]) << "</text>\n";
  }
  out << "</svg>\n";
  return out.str();
}

std::string weights_svg(const Snapshot& s) {
  return bar_chart("Normalized criterion weights", s.criterion_names, s.weights.crisp_weights);
}

std::string closeness_svg(const Snapshot& s) {
  std::vector<std::string> labels;
  std::vector<double> cc;
  for (const auto& a : s.ranking.alternatives) {
    labels.push_back(a.alternative);
    cc.push_back(a.cc);
  }
  return bar_chart("Closeness coefficients", labels, cc);
}

std::string roadmap_svg(const Snapshot& s) {
  const int col_w = 230, box_h = 34, top = 70;
  std::ostringstream out;
  if (!s.tiers) {
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"600\" height=\"60\" font-family=\"sans-serif\">\n"
        << "<text x=\"10\" y=\"34\">" << xml_escape("Tiers unavailable: " + s.tier_error) << "</text>\n</svg>\n";
    return out.str();
  }
  const auto& tiers = s.tiers->tiers;
  std::size_t tallest = 0;
  for (const auto& t : tiers) tallest = std::max(tallest, t.size());
  const int width = 20 + col_w * static_cast<int>(tiers.size());
  const int height = top + (box_h + 8) * static_cast<int>(tallest) + 20;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
      << "\" font-family=\"sans-serif\" font-size=\"13\">\n";
  out << "<text x=\"10\" y=\"24\" font-size=\"16\" font-weight=\"bold\">Adoption roadmap</text>\n";
  for (std::size_t k = 0; k < tiers.size(); ++k) {
    const int x = 10 + col_w * static_cast<int>(k);
    std::string head = tier_name(k);
    std::replace(head.begin(), head.end(), '_', ' ');
    out << "<text x=\"" << x + 4 << "\" y=\"56\" font-weight=\"bold\">" << xml_escape(head) << "</text>\n";
    for (std::size_t r = 0; r < tiers[k].size(); ++r) {
      const int y = top + (box_h + 8) * static_cast<int>(r);
      out << "<rect x=\"" << x << "\" y=\"" << y << "\" width=\"" << col_w - 14 << "\" height=\"" << box_h
          << "\" rx=\"4\" fill=\"#e8eef6\" stroke=\"#3b6ea5\"/>\n";
      out << "<text x=\"" << x + 8 << "\" y=\"" << y + 22 << "\">" << xml_escape(tiers[k][r]) << "</text>\n";
    }
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace

ReportFormat parse_report_format(const std::string& text) {
  if (text == "markdown" || text == "md") return ReportFormat::Markdown;
  if (text == "csv" || text == "csv_bundle") return ReportFormat::CsvBundle;
  if (text == "svg" || text == "svg_charts") return ReportFormat::SvgCharts;
  throw Error(ErrorCode::Input, "report format must be markdown, csv or svg, got '" + text + "'");
}

std::vector<ReportFile> emit_report(const Project& p, ReportFormat format, const TopsisOptions& options) {
  const Snapshot s(p, options);
  switch (format) {
    case ReportFormat::Markdown: return {{"report.md", markdown(s)}};
    case ReportFormat::CsvBundle: return csv_bundle(s);
    case ReportFormat::SvgCharts:
      return {{"weights.svg", weights_svg(s)}, {"closeness.svg", closeness_svg(s)}, {"roadmap.svg", roadmap_svg(s)}};
  }
  return {};
}

std::string render_svg_chart(const Project& p, const std::string& chart, const TopsisOptions& options) {
  const Snapshot s(p, options);
  if (chart == "weights") return weights_svg(s);
  if (chart == "closeness") return closeness_svg(s);
  if (chart == "roadmap") return roadmap_svg(s);
  throw Error(ErrorCode::Input, "unknown chart '" + chart + "'");
}

}  // namespace mcdm
