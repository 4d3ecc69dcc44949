#pragma once

// Rendered outputs of a project: markdown summary, CSV tables and SVG charts.
// Output depends only on the project snapshot and the ranking options.

#include <string>
#include <vector>

#include "mcdm/workspace.hpp"

namespace mcdm {

enum class ReportFormat { Markdown, CsvBundle, SvgCharts };
ReportFormat parse_report_format(const std::string& text);

struct ReportFile {
  std::string name;
  std::string content;
};

// Needs fresh accepted weights and complete scores (MustRecompute otherwise).
std::vector<ReportFile> emit_report(const Project& p, ReportFormat format, const TopsisOptions& options);

// One chart: "weights", "closeness" or "roadmap".
std::string render_svg_chart(const Project& p, const std::string& chart, const TopsisOptions& options);

}  // namespace mcdm
