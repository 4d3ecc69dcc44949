#include <algorithm>
#include <random>

#include "doctest.h"
#include "mcdm/error.hpp"
#include "mcdm/screening.hpp"

using namespace mcdm;

namespace {

ScreeningOutcome screen_one(std::vector<int> scores, ScreeningThresholds t = {}) {
  const std::vector<LikertAssessment> items{{"item", ItemKind::Criterion, std::move(scores)}};
  return screen_items(items, t);
}

bool retained(const ScreeningOutcome& o, const std::string& id) {
  return std::any_of(o.retained.begin(), o.retained.end(), [&](const ScreenedItem& s) { return s.item_id == id; });
}

}  // namespace

TEST_CASE("screening rules") {
  const auto keep = screen_one({5, 4, 5, 4, 5});
  REQUIRE(keep.retained.size() == 1);
  CHECK(keep.retained[0].mean == doctest::Approx(4.6));
  CHECK(std::abs(keep.retained[0].sd - 0.49) < 0.005);

  const auto low = screen_one({1, 2, 1, 2, 1});
  REQUIRE(low.eliminated.size() == 1);
  CHECK(low.eliminated[0].mean == doctest::Approx(1.4));
  CHECK(low.eliminated[0].failed == std::vector<ScreeningRule>{ScreeningRule::LowImportance});

  const auto split = screen_one({5, 1, 5, 1, 5});
  REQUIRE(split.eliminated.size() == 1);
  CHECK(split.eliminated[0].mean == doctest::Approx(3.4));
  CHECK(std::abs(split.eliminated[0].sd - 1.96) < 0.005);
  CHECK(split.eliminated[0].failed ==
        std::vector<ScreeningRule>{ScreeningRule::LowImportance, ScreeningRule::LowConsensus});
}

TEST_CASE("screening errors") {
  CHECK_THROWS_AS(screen_items(std::span<const LikertAssessment>{}), Error);
  CHECK_THROWS_AS(screen_one({}), Error);
  CHECK_THROWS_AS(screen_one({6, 4}), Error);
  CHECK_THROWS_AS(screen_one({0, 4}), Error);
  CHECK_THROWS_AS(screen_one({4, 4}, {0.0, 1.0}), Error);
  CHECK(parse_item_kind("use_case") == ItemKind::UseCase);
  CHECK_THROWS_AS(parse_item_kind("thing"), Error);
}

TEST_CASE("screening properties") {
  std::mt19937_64 gen(55);
  std::uniform_int_distribution<int> likert(1, 5);
  std::uniform_real_distribution<double> thr(1.01, 4.99);
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<LikertAssessment> items;
    for (int k = 0; k < 8; ++k) {
      LikertAssessment a{"i" + std::to_string(k), ItemKind::UseCase, {}};
      const int experts = 1 + static_cast<int>(gen() % 7);
      for (int e = 0; e < experts; ++e) a.scores.push_back(likert(gen));
      items.push_back(a);
    }
    const ScreeningThresholds t{thr(gen), 0.1 + static_cast<double>(gen() % 20) / 10.0};
    const auto base = screen_items(items, t);

    auto shuffled = items;
    for (auto& a : shuffled) std::shuffle(a.scores.begin(), a.scores.end(), gen);
    const auto again = screen_items(shuffled, t);
    CHECK(base.retained.size() == again.retained.size());
    for (const auto& s : base.retained) CHECK(retained(again, s.item_id));

    ScreeningThresholds stricter = t;
    stricter.mean = std::min(5.0, t.mean + 0.5);
    const auto strict = screen_items(items, stricter);
    for (const auto& s : strict.retained) CHECK(retained(base, s.item_id));

    CHECK(screen_one({5, 5, 5, 5}, {thr(gen), t.dispersion}).retained.size() == 1);
    CHECK(screen_one({1, 1, 1}, {thr(gen), t.dispersion}).eliminated.size() == 1);
  }
}
