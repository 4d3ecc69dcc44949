#pragma once

// Likert screening of candidate criteria and use-cases ahead of weighting.

#include <span>
#include <string>
#include <vector>

namespace mcdm {

enum class ItemKind { Criterion, UseCase };

struct LikertAssessment {
  std::string item_id;
  ItemKind kind = ItemKind::Criterion;
  std::vector<int> scores;  // one per expert, 1..5
};

enum class ScreeningRule { LowImportance, LowConsensus };

struct ScreenedItem {
  std::string item_id;
  ItemKind kind = ItemKind::Criterion;
  double mean = 0.0;
  double sd = 0.0;  // population standard deviation
  std::vector<ScreeningRule> failed;
};

struct ScreeningOutcome {
  std::vector<ScreenedItem> retained;
  std::vector<ScreenedItem> eliminated;
};

struct ScreeningThresholds {
  double mean = 3.5;
  double dispersion = 1.0;
};

// Retains an item iff mean >= thresholds.mean and sd <= thresholds.dispersion.
ScreeningOutcome screen_items(std::span<const LikertAssessment> assessments,
                              const ScreeningThresholds& thresholds = {});

const char* to_string(ScreeningRule rule);
const char* to_string(ItemKind kind);
ItemKind parse_item_kind(const std::string& text);

}  // namespace mcdm
