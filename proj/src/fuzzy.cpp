#include "mcdm/fuzzy.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <string>

#include "mcdm/error.hpp"

namespace mcdm {

Tfn tfn_add(const Tfn& a, const Tfn& b) { return {a.l + b.l, a.m + b.m, a.u + b.u}; }

Tfn tfn_mul(const Tfn& a, const Tfn& b) { return {a.l * b.l, a.m * b.m, a.u * b.u}; }

Tfn tfn_invert(const Tfn& a) {
  if (!(a.l > 0.0)) {
    throw Error(ErrorCode::Domain, "cannot invert a fuzzy number with non-positive lower bound");
  }
  return {1.0 / a.u, 1.0 / a.m, 1.0 / a.l};
}

Tfn tfn_nth_root(const Tfn& a, unsigned n) {
  if (n == 0) throw Error(ErrorCode::Domain, "root order must be positive");
  if (!(a.l > 0.0)) {
    throw Error(ErrorCode::Domain, "root of a fuzzy number with non-positive components");
  }
  if (n == 1) return a;
  const double e = 1.0 / static_cast<double>(n);
  return {std::pow(a.l, e), std::pow(a.m, e), std::pow(a.u, e)};
}

double defuzzify_centroid(const Tfn& a) { return (a.l + a.m + a.u) / 3.0; }

namespace {

struct LabelInfo {
  LinguisticLabel label;
  std::string_view key;
  std::string_view phrase;
  Tfn value;
};

constexpr LabelInfo kScale[] = {
    {LinguisticLabel::Equal, "equal", "Equally important", {1, 1, 1}},
    {LinguisticLabel::Moderate, "moderate", "Moderate important", {2, 3, 4}},
    {LinguisticLabel::Strong, "strong", "Strong important", {4, 5, 6}},
    {LinguisticLabel::VeryStrong, "very_strong", "Very strong important", {6, 7, 8}},
    {LinguisticLabel::Extreme, "extreme", "Extremely important", {9, 9, 9}},
    {LinguisticLabel::EqualToModerate, "equal_moderate",
     "Equally important to moderately more important", {1, 2, 3}},
    {LinguisticLabel::ModerateToStrong, "moderate_strong",
     "Moderately more important to strongly more important", {3, 4, 5}},
    {LinguisticLabel::StrongToVeryStrong, "strong_very_strong",
     "Strongly to very strongly more important", {5, 6, 7}},
    {LinguisticLabel::VeryStrongToExtreme, "very_strong_extreme",
     "Very strongly to extremely more important", {7, 8, 9}},
};

const LabelInfo& info(LinguisticLabel label) {
  for (const auto& entry : kScale) {
    if (entry.label == label) return entry;
  }
  throw Error(ErrorCode::Input, "unknown linguistic label");
}

std::string fold(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    const auto uc = static_cast<unsigned char>(c);
    if (std::isalnum(uc)) {
      out.push_back(static_cast<char>(std::tolower(uc)));
    } else if (!out.empty() && out.back() != '_') {
      out.push_back('_');
    }
  }
  while (!out.empty() && out.back() == '_') out.pop_back();
  return out;
}

}  // namespace

Tfn linguistic_to_tfn(LinguisticLabel label, bool reciprocal) {
  const Tfn& t = info(label).value;
  return reciprocal ? tfn_invert(t) : t;
}

std::string_view label_key(LinguisticLabel label) { return info(label).key; }

std::string_view label_phrase(LinguisticLabel label) { return info(label).phrase; }

std::optional<LinguisticLabel> try_parse_label(std::string_view text) {
  const std::string folded = fold(text);
  for (const auto& entry : kScale) {
    if (folded == entry.key || folded == fold(entry.phrase)) return entry.label;
  }
  return std::nullopt;
}

LinguisticLabel parse_label(std::string_view text) {
  if (auto label = try_parse_label(text)) return *label;
  throw Error(ErrorCode::Input, "unknown linguistic label '" + std::string(text) + "'");
}

}  // namespace mcdm
