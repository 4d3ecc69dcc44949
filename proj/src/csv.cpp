#include <algorithm>
#include <cctype>
#include <charconv>
#include <set>

#include "mcdm/error.hpp"
#include "mcdm/workspace.hpp"

namespace mcdm {

namespace {

struct Row {
  std::size_t line = 0;
  std::vector<std::string> cells;
};

std::string trim(std::string s) {
  const auto keep = [](unsigned char c) { return !std::isspace(c); };
  s.erase(s.begin(), std::find_if(s.begin(), s.end(), keep));
  s.erase(std::find_if(s.rbegin(), s.rend(), keep).base(), s.end());
  return s;
}

std::string lower(std::string s) {
  for (auto& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return s;
}

std::string at_line(std::size_t line) { return "line " + std::to_string(line); }

std::vector<Row> parse_rows(const std::string& text) {
  std::vector<Row> rows;
  std::size_t pos = (text.rfind("\xEF\xBB\xBF", 0) == 0) ? 3 : 0;
  std::size_t line = 1;
  Row row{line, {}};
  std::string cell;
  bool quoted = false, any = false;
  auto end_row = [&] {
    row.cells.push_back(trim(cell));
    cell.clear();
    const bool blank = row.cells.size() == 1 && row.cells[0].empty() && !any;
    if (!blank) rows.push_back(std::move(row));
    row = Row{line, {}};
    any = false;
  };
  while (pos < text.size()) {
    const char ch = text[pos++];
    if (quoted) {
      if (ch == '"') {
        if (pos < text.size() && text[pos] == '"') {
          cell += '"';
          ++pos;
        } else {
          quoted = false;
        }
      } else {
        if (ch == '\n') ++line;
        cell += ch;
      }
      continue;
    }
    switch (ch) {
      case '"':
        quoted = true;
        any = true;
        break;
      case ',':
        row.cells.push_back(trim(cell));
        cell.clear();
        any = true;
        break;
      case '\r':
        break;
      case '\n':
        ++line;
        end_row();
        break;
      default:
        cell += ch;
    }
  }
  if (quoted) throw Error(ErrorCode::Parse, "unterminated quoted field", at_line(row.line));
  if (!cell.empty() || !row.cells.empty() || any) end_row();
  return rows;
}

double parse_number(const std::string& s, std::size_t line, const std::string& column) {
  double v = 0.0;
  const auto* first = s.data();
  const auto* last = s.data() + s.size();
  if (!s.empty() && *first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, v);
  if (s.empty() || ec != std::errc() || ptr != last) {
    throw Error(ErrorCode::Parse, "'" + s + "' is not a number in column '" + column + "'", at_line(line));
  }
  return v;
}

}  // namespace

std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
  std::vector<std::vector<std::string>> out;
  for (auto& r : parse_rows(text)) out.push_back(std::move(r.cells));
  return out;
}

void import_decision_csv(Project& p, const std::string& text, const std::string& expert) {
  const auto rows = parse_rows(text);
  if (rows.empty()) throw Error(ErrorCode::Input, "decision CSV is empty");
  const Row& header = rows.front();
  if (header.cells.size() < 2 || lower(header.cells[0]) != "alternative") {
    throw Error(ErrorCode::Parse, "header must start with 'alternative' followed by criteria", at_line(header.line));
  }
  if (rows.size() < 2) throw Error(ErrorCode::Input, "decision CSV has no data rows");

  Project next = p;
  const bool create_criteria = next.criteria.empty();
  const bool create_alternatives = next.alternatives.empty();
  if (expert != kConsensusExpert && !next.find_expert(expert)) {
    throw Error(ErrorCode::Reference, "unknown expert '" + expert + "'");
  }

  std::vector<std::string> columns;
  for (std::size_t k = 1; k < header.cells.size(); ++k) {
    std::string h = header.cells[k];
    const char suffix = h.empty() ? '\0' : h.back();
    if (suffix != '+' && suffix != '-') {
      throw Error(ErrorCode::Parse, "criterion column '" + h + "' needs a '+' or '-' suffix", at_line(header.line));
    }
    h = trim(h.substr(0, h.size() - 1));
    const Direction dir = suffix == '+' ? Direction::Benefit : Direction::Cost;
    const CriterionEntry* match = nullptr;
    for (const auto& c : next.criteria) {
      if (c.id == h || c.name == h || c.id == slugify(h)) match = &c;
    }
    if (!match) {
      if (!create_criteria) throw Error(ErrorCode::Reference, "unknown criterion '" + h + "'", at_line(header.line));
      if (slugify(h).empty()) throw Error(ErrorCode::Parse, "empty criterion name", at_line(header.line));
      next.criteria.push_back({slugify(h), h, dir});
      match = &next.criteria.back();
    } else if (match->direction != dir) {
      throw Error(ErrorCode::Validation, "direction of '" + h + "' disagrees with the project", at_line(header.line));
    }
    if (std::find(columns.begin(), columns.end(), match->id) != columns.end()) {
      throw Error(ErrorCode::Validation, "criterion '" + h + "' appears twice", at_line(header.line));
    }
    columns.push_back(match->id);
  }

  std::map<std::string, std::map<std::string, double>> scores;
  for (std::size_t r = 1; r < rows.size(); ++r) {
    const Row& row = rows[r];
    if (row.cells.size() != header.cells.size()) {
      throw Error(ErrorCode::Parse,
                  "expected " + std::to_string(header.cells.size()) + " fields, got " + std::to_string(row.cells.size()),
                  at_line(row.line));
    }
    const std::string& name = row.cells[0];
    const AlternativeEntry* match = nullptr;
    for (const auto& a : next.alternatives) {
      if (a.id == name || a.name == name || a.id == slugify(name)) match = &a;
    }
    if (!match) {
      if (!create_alternatives) throw Error(ErrorCode::Reference, "unknown alternative '" + name + "'", at_line(row.line));
      if (slugify(name).empty()) throw Error(ErrorCode::Parse, "empty alternative name", at_line(row.line));
      next.alternatives.push_back({slugify(name), name});
      match = &next.alternatives.back();
    }
    if (scores.count(match->id)) throw Error(ErrorCode::Validation, "alternative '" + name + "' appears twice", at_line(row.line));
    auto& out = scores[match->id];
    for (std::size_t k = 0; k < columns.size(); ++k) {
      const double v = parse_number(row.cells[k + 1], row.line, columns[k]);
      if (!(v >= 0.0)) {
        throw Error(ErrorCode::Validation, "score for '" + columns[k] + "' must be non-negative", at_line(row.line));
      }
      out[columns[k]] = v;
    }
  }
  validate_project(next);
  for (const auto& [alt, by_crit] : scores)
    for (const auto& [crit, v] : by_crit) next.scores[expert][alt][crit] = v;
  validate_project(next);
  commit(next);
  p = std::move(next);
}

void import_likert_csv(Project& p, const std::string& text) {
  const auto rows = parse_rows(text);
  if (rows.empty()) throw Error(ErrorCode::Input, "Likert CSV is empty");
  const Row& header = rows.front();
  if (header.cells.size() < 3 || lower(header.cells[0]) != "item" || lower(header.cells[1]) != "kind") {
    throw Error(ErrorCode::Parse, "header must be 'item,kind,<expert>,...'", at_line(header.line));
  }
  if (rows.size() < 2) throw Error(ErrorCode::Input, "Likert CSV has no data rows");
  std::vector<std::string> experts(header.cells.begin() + 2, header.cells.end());
  for (const auto& e : experts) {
    if (!p.find_expert(e)) throw Error(ErrorCode::Reference, "unknown expert '" + e + "'", at_line(header.line));
  }

  Project next = p;
  std::set<std::pair<std::string, int>> seen;
  for (std::size_t r = 1; r < rows.size(); ++r) {
    const Row& row = rows[r];
    if (row.cells.size() != header.cells.size()) {
      throw Error(ErrorCode::Parse,
                  "expected " + std::to_string(header.cells.size()) + " fields, got " + std::to_string(row.cells.size()),
                  at_line(row.line));
    }
    ScreeningEntry entry;
    entry.item = row.cells[0];
    if (entry.item.empty()) throw Error(ErrorCode::Parse, "empty item id", at_line(row.line));
    try {
      entry.kind = parse_item_kind(row.cells[1]);
    } catch (const Error& e) {
      throw Error(ErrorCode::Parse, e.what(), at_line(row.line));
    }
    if (!seen.insert({entry.item, static_cast<int>(entry.kind)}).second) {
      throw Error(ErrorCode::Validation, "item '" + entry.item + "' appears twice", at_line(row.line));
    }
    for (std::size_t k = 0; k < experts.size(); ++k) {
      const std::string& cell = row.cells[k + 2];
      if (cell.empty()) continue;
      int v = 0;
      const auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), v);
      if (ec != std::errc() || ptr != cell.data() + cell.size()) {
        throw Error(ErrorCode::Parse, "'" + cell + "' is not an integer score", at_line(row.line));
      }
      if (v < 1 || v > 5) throw Error(ErrorCode::Validation, "Likert scores must be within 1..5", at_line(row.line));
      entry.scores[experts[k]] = v;
    }
    if (entry.scores.empty()) throw Error(ErrorCode::Validation, "item '" + entry.item + "' has no scores", at_line(row.line));
    std::erase_if(next.screening, [&](const ScreeningEntry& s) { return s.item == entry.item && s.kind == entry.kind; });
    next.screening.push_back(std::move(entry));
  }
  validate_project(next);
  commit(next);
  p = std::move(next);
}

}  // namespace mcdm
