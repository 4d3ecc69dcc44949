#include "mcdm/screening.hpp"

#include <cmath>

#include "mcdm/error.hpp"

namespace mcdm {

const char* to_string(ScreeningRule rule) {
  return rule == ScreeningRule::LowImportance ? "low_importance" : "low_consensus";
}

const char* to_string(ItemKind kind) { return kind == ItemKind::Criterion ? "criterion" : "use_case"; }

ItemKind parse_item_kind(const std::string& text) {
  if (text == "criterion") return ItemKind::Criterion;
  if (text == "use_case" || text == "use-case" || text == "alternative") return ItemKind::UseCase;
  throw Error(ErrorCode::Input, "item kind must be 'criterion' or 'use_case', got '" + text + "'");
}

ScreeningOutcome screen_items(std::span<const LikertAssessment> assessments,
                              const ScreeningThresholds& thresholds) {
  if (assessments.empty()) throw Error(ErrorCode::Input, "no assessments to screen");
  if (!(thresholds.mean > 0.0) || !(thresholds.dispersion > 0.0)) {
    throw Error(ErrorCode::Input, "screening thresholds must be positive");
  }
  ScreeningOutcome outcome;
  for (std::size_t k = 0; k < assessments.size(); ++k) {
    const LikertAssessment& a = assessments[k];
    if (a.scores.empty()) throw Error(ErrorCode::Input, "item has no expert scores", a.item_id);
    // Integer moments keep the statistics independent of expert order.
    long long sum = 0;
    long long sum_sq = 0;
    for (int s : a.scores) {
      if (s < 1 || s > 5) {
        throw Error(ErrorCode::Validation, "Likert scores must be in 1..5", a.item_id);
      }
      sum += s;
      sum_sq += static_cast<long long>(s) * s;
    }
    const auto count = static_cast<long long>(a.scores.size());
    const double mean = static_cast<double>(sum) / static_cast<double>(count);
    const double sd = std::sqrt(static_cast<double>(count * sum_sq - sum * sum)) / static_cast<double>(count);

    ScreenedItem item{a.item_id, a.kind, mean, sd, {}};
    if (mean < thresholds.mean) item.failed.push_back(ScreeningRule::LowImportance);
    if (sd > thresholds.dispersion) item.failed.push_back(ScreeningRule::LowConsensus);
    (item.failed.empty() ? outcome.retained : outcome.eliminated).push_back(std::move(item));
  }
  return outcome;
}

}  // namespace mcdm
