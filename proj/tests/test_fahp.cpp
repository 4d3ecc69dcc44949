#include <algorithm>
#include <numeric>
#include <random>

#include "doctest.h"
#include "mcdm/error.hpp"
#include "mcdm/fahp.hpp"
#include "oracles.hpp"

using namespace mcdm;

namespace {

FuzzyPairwiseMatrix from_rows(const oracle::FuzzyRows& a) {
  std::vector<std::string> ids;
  std::vector<std::vector<Tfn>> cells(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    ids.push_back("c" + std::to_string(i));
    for (const auto& t : a[i]) cells[i].push_back({t[0], t[1], t[2]});
  }
  return {ids, cells};
}

FuzzyPairwiseMatrix crisp_matrix(const std::vector<std::vector<double>>& a) {
  std::vector<std::vector<Tfn>> cells(a.size());
  std::vector<std::string> ids;
  for (std::size_t i = 0; i < a.size(); ++i) {
    ids.push_back("c" + std::to_string(i));
    for (double x : a[i]) cells[i].push_back(Tfn::crisp(x));
  }
  return {ids, cells};
}

bool reciprocal(const FuzzyPairwiseMatrix& m) {
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < m.size(); ++j) {
      const Tfn inv = tfn_invert(m.at(i, j));
      const Tfn& b = m.at(j, i);
      if (std::abs(inv.l - b.l) > 1e-12 || std::abs(inv.m - b.m) > 1e-12 || std::abs(inv.u - b.u) > 1e-12) {
        return false;
      }
    }
  }
  return true;
}

// (0,1) strong, (0,2) very strong to extreme, (1,2) extreme: CR about 0.30.
std::vector<Judgment> inconsistent_judgments() {
  return {{0, 1, LinguisticLabel::Strong, false},
          {0, 2, LinguisticLabel::VeryStrongToExtreme, false},
          {1, 2, LinguisticLabel::Extreme, false}};
}

const std::vector<Direction> kBenefit3(3, Direction::Benefit);

}  // namespace

TEST_CASE("build_matrix") {
  SUBCASE("equal judgments") {
    const std::vector<Judgment> j{{0, 1, LinguisticLabel::Equal, false}};
    const auto m = build_matrix(2, j);
    for (std::size_t r = 0; r < 2; ++r)
      for (std::size_t c = 0; c < 2; ++c) CHECK(m.at(r, c) == Tfn{1, 1, 1});
  }
  SUBCASE("moderate with inverse") {
    const std::vector<Judgment> j{{0, 1, LinguisticLabel::Moderate, false}};
    const auto m = build_matrix(2, j);
    CHECK(m.at(0, 1) == Tfn{2, 3, 4});
    CHECK(m.at(1, 0).l == doctest::Approx(0.25));
    CHECK(m.at(1, 0).m == doctest::Approx(1.0 / 3.0));
    CHECK(m.at(1, 0).u == doctest::Approx(0.5));
  }
  SUBCASE("three criteria") {
    const std::vector<Judgment> j{{0, 1, LinguisticLabel::Moderate, false},
                                  {0, 2, LinguisticLabel::Strong, false},
                                  {1, 2, LinguisticLabel::Moderate, false}};
    const auto m = build_matrix(3, j);
    CHECK(m.at(0, 2) == Tfn{4, 5, 6});
    CHECK(m.at(2, 0) == tfn_invert({4, 5, 6}));
    CHECK(reciprocal(m));
  }
  SUBCASE("lower-triangle statement is the inverse") {
    const std::vector<Judgment> j{{1, 0, LinguisticLabel::Moderate, false}};
    const auto m = build_matrix(2, j);
    CHECK(m.at(1, 0) == Tfn{2, 3, 4});
    CHECK(m.at(0, 1) == tfn_invert({2, 3, 4}));
  }
  SUBCASE("missing pairs are listed") {
    const std::vector<Judgment> j{{0, 1, LinguisticLabel::Moderate, false}};
    try {
      build_matrix(3, j);
      FAIL("expected incomplete judgment error");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::IncompleteJudgment);
      CHECK(std::string(e.what()).find("(0,2)") != std::string::npos);
      CHECK(std::string(e.what()).find("(1,2)") != std::string::npos);
    }
  }
  SUBCASE("duplicates conflict") {
    const std::vector<Judgment> j{{0, 1, LinguisticLabel::Moderate, false}, {1, 0, LinguisticLabel::Equal, false}};
    try {
      build_matrix(2, j);
      FAIL("expected conflict");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::Conflict);
    }
  }
  SUBCASE("range and size checks") {
    const std::vector<Judgment> j{{0, 5, LinguisticLabel::Moderate, false}};
    CHECK_THROWS_AS(build_matrix(2, j), Error);
    CHECK_THROWS_AS(build_matrix(1, std::span<const Judgment>{}), Error);
  }
}

TEST_CASE("matrix validation") {
  CHECK_THROWS_AS(crisp_matrix({{1, 2}, {0.4, 1}}), Error);
  CHECK_THROWS_AS(crisp_matrix({{2, 2}, {0.5, 1}}), Error);
  CHECK_NOTHROW(crisp_matrix({{1, 2}, {0.5, 1}}));
}

TEST_CASE("aggregate_expert_matrices") {
  const std::vector<Judgment> a{{0, 1, LinguisticLabel::Moderate, false}};
  const std::vector<Judgment> b{{0, 1, LinguisticLabel::Strong, false}};
  const std::vector<FuzzyPairwiseMatrix> one{build_matrix(2, a)};
  CHECK(aggregate_expert_matrices(one).cells() == one.front().cells());

  const std::vector<FuzzyPairwiseMatrix> two{build_matrix(2, a), build_matrix(2, b)};
  const auto agg = aggregate_expert_matrices(two);
  CHECK(agg.at(0, 1).l == doctest::Approx(std::sqrt(8.0)).epsilon(1e-12));
  CHECK(agg.at(0, 1).m == doctest::Approx(std::sqrt(15.0)).epsilon(1e-12));
  CHECK(agg.at(0, 1).u == doctest::Approx(std::sqrt(24.0)).epsilon(1e-12));
  CHECK(std::abs(agg.at(0, 1).l - 2.828) < 1e-3);
  CHECK(std::abs(agg.at(0, 1).m - 3.873) < 1e-3);
  CHECK(std::abs(agg.at(0, 1).u - 4.899) < 1e-3);
  CHECK(reciprocal(agg));

  CHECK_THROWS_AS(aggregate_expert_matrices(std::span<const FuzzyPairwiseMatrix>{}), Error);
  const std::vector<FuzzyPairwiseMatrix> mismatch{build_matrix(2, a), FuzzyPairwiseMatrix::identity({"x", "y"})};
  CHECK_THROWS_AS(aggregate_expert_matrices(mismatch), Error);
}

TEST_CASE("aggregation preserves reciprocity for random panels") {
  std::mt19937_64 gen(7);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 2 + static_cast<std::size_t>(trial % 8);
    const std::size_t experts = 1 + static_cast<std::size_t>(trial % 6);
    std::vector<FuzzyPairwiseMatrix> panel;
    for (std::size_t e = 0; e < experts; ++e) panel.push_back(from_rows(oracle::random_reciprocal(n, gen)));
    const auto agg = aggregate_expert_matrices(panel);
    CHECK(reciprocal(agg));
    for (std::size_t i = 0; i < n; ++i) CHECK(agg.at(i, i) == Tfn{1, 1, 1});
  }
}

TEST_CASE("consistency_ratio") {
  SUBCASE("identity") {
    for (std::size_t n = 2; n <= 10; ++n) {
      std::vector<std::string> ids(n);
      for (std::size_t i = 0; i < n; ++i) ids[i] = "c" + std::to_string(i);
      CHECK(std::abs(consistency_ratio(FuzzyPairwiseMatrix::identity(ids))) <= 1e-9);
    }
  }
  SUBCASE("transitive matrix") {
    CHECK(std::abs(consistency_ratio(crisp_matrix({{1, 2, 4}, {0.5, 1, 2}, {0.25, 0.5, 1}}))) <= 1e-9);
  }
  SUBCASE("inconsistent 3x3 against characteristic polynomial") {
    const auto m = crisp_matrix({{1, 2, 0.5}, {0.5, 1, 4}, {2, 0.25, 1}});
    const double lambda = oracle::max_eigenvalue_3x3({{{1, 2, 0.5}, {0.5, 1, 4}, {2, 0.25, 1}}});
    const double expected = ((lambda - 3.0) / 2.0) / 0.58;
    CHECK(consistency_ratio(m) == doctest::Approx(expected).epsilon(1e-6));
    CHECK(std::abs(consistency_ratio(m) - expected) < 1e-6);
    CHECK(consistency_ratio(m) > 0.1);
  }
  SUBCASE("random 3x3 fuzzy matrices against characteristic polynomial") {
    std::mt19937_64 gen(99);
    for (int t = 0; t < 50; ++t) {
      const auto rows = oracle::random_reciprocal(3, gen);
      std::array<std::array<double, 3>, 3> crisp{};
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) crisp[i][j] = (rows[i][j][0] + rows[i][j][1] + rows[i][j][2]) / 3.0;
      const double expected = ((oracle::max_eigenvalue_3x3(crisp) - 3.0) / 2.0) / 0.58;
      CHECK(std::abs(consistency_ratio(from_rows(rows)) - expected) < 1e-6);
    }
  }
  SUBCASE("alpha cut") {
    const auto m = build_matrix(3, inconsistent_judgments());
    const double centroid = consistency_ratio(m);
    const double cut = consistency_ratio(m, AlphaCutDefuzz{0.5, 0.5});
    CHECK(cut > 0.1);
    CHECK(cut != centroid);
    // alpha = 1 collapses every cell to its mode.
    const double modal = consistency_ratio(m, AlphaCutDefuzz{1.0, 0.3});
    const double lambda = oracle::max_eigenvalue_3x3({{{1, 5, 8}, {0.2, 1, 9}, {0.125, 1.0 / 9.0, 1}}});
    CHECK(std::abs(modal - ((lambda - 3.0) / 2.0) / 0.58) < 1e-6);
    CHECK_THROWS_AS(consistency_ratio(m, AlphaCutDefuzz{1.5, 0.5}), Error);
  }
  SUBCASE("size limits") {
    std::vector<std::string> ids(11);
    for (std::size_t i = 0; i < 11; ++i) ids[i] = "c" + std::to_string(i);
    try {
      consistency_ratio(FuzzyPairwiseMatrix::identity(ids));
      FAIL("expected unsupported size");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::UnsupportedSize);
    }
    CHECK(consistency_ratio(FuzzyPairwiseMatrix::identity({"a", "b"})) == 0.0);
    CHECK(random_index(5) == 1.12);
  }
}

TEST_CASE("fuzzy_geometric_means and weights on the two-criterion example") {
  const std::vector<Judgment> j{{0, 1, LinguisticLabel::Moderate, false}};
  const auto r = fuzzy_geometric_means(build_matrix(2, j));
  REQUIRE(r.size() == 2);
  CHECK(std::abs(r[0].l - 1.4142) < 1e-4);
  CHECK(std::abs(r[0].m - 1.7321) < 1e-4);
  CHECK(std::abs(r[0].u - 2.0) < 1e-12);
  CHECK(std::abs(r[1].l - 0.5) < 1e-12);
  CHECK(std::abs(r[1].m - 0.5774) < 1e-4);
  CHECK(std::abs(r[1].u - 0.7071) < 1e-4);

  const auto w = fuzzy_weights(r);
  CHECK(std::abs(w[0].l - 0.5224) < 1e-4);
  CHECK(std::abs(w[0].m - 0.75) < 1e-12);
  CHECK(std::abs(w[0].u - 1.0448) < 1e-4);
  CHECK(std::abs(w[1].l - 0.1847) < 1e-4);
  CHECK(std::abs(w[1].m - 0.25) < 1e-12);
  CHECK(std::abs(w[1].u - 0.3694) < 1e-4);
  CHECK(w[0].u > 1.0);

  const auto crisp = crisp_normalized_weights(w);
  CHECK(std::abs(crisp[0] - 0.7424) < 1e-4);
  CHECK(std::abs(crisp[1] - 0.2576) < 1e-4);
  CHECK(std::abs(crisp[0] + crisp[1] - 1.0) < 1e-12);
}

TEST_CASE("weights edge cases") {
  const std::vector<Tfn> single{{1, 1, 1}};
  CHECK(fuzzy_weights(single).front() == Tfn{1, 1, 1});
  const std::vector<Tfn> bad{{0, 1, 2}};
  CHECK_THROWS_AS(fuzzy_weights(bad), Error);
  CHECK_THROWS_AS(fuzzy_weights(std::span<const Tfn>{}), Error);
  const std::vector<Tfn> zero{{0, 0, 0}, {0, 0, 0}};
  try {
    crisp_normalized_weights(zero);
    FAIL("expected degenerate");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::Degenerate);
  }
  const std::vector<Tfn> same(4, Tfn{0.1, 0.25, 0.4});
  for (double x : crisp_normalized_weights(same)) CHECK(std::abs(x - 0.25) < 1e-15);
}

TEST_CASE("weights match the direct oracle and are permutation equivariant") {
  std::mt19937_64 gen(12345);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = trial % 2 == 0 ? 3 : 4;
    const auto rows = oracle::random_reciprocal(n, gen);
    const auto m = from_rows(rows);
    const auto crisp = crisp_normalized_weights(fuzzy_weights(fuzzy_geometric_means(m)));
    const auto expected = oracle::fahp_crisp_weights(rows);
    double total = 0;
    for (std::size_t i = 0; i < n; ++i) {
      CHECK(std::abs(crisp[i] - expected[i]) < 1e-9);
      CHECK(crisp[i] > 0.0);
      total += crisp[i];
    }
    CHECK(std::abs(total - 1.0) < 1e-9);

    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    std::shuffle(perm.begin(), perm.end(), gen);
    const auto pw = crisp_normalized_weights(fuzzy_weights(fuzzy_geometric_means(m.permuted(perm))));
    for (std::size_t i = 0; i < n; ++i) CHECK(std::abs(pw[i] - crisp[perm[i]]) <= 1e-12);
  }
}

TEST_CASE("inconsistent triads") {
  const auto m = crisp_matrix({{1, 2, 4, 8}, {0.5, 1, 2, 4}, {0.25, 0.5, 1, 2}, {0.125, 0.25, 0.5, 1}});
  for (const auto& t : inconsistent_triads(m)) CHECK(t.deviation < 1e-12);
  // Break the (0,1,3) and (1,2,3) transitivity by inflating a13.
  const auto bent = crisp_matrix({{1, 2, 4, 8}, {0.5, 1, 2, 16}, {0.25, 0.5, 1, 2}, {0.125, 1.0 / 16, 0.5, 1}});
  const auto triads = inconsistent_triads(bent, 3);
  REQUIRE(triads.size() == 3);
  CHECK(triads[0].deviation >= triads[1].deviation);
  CHECK(triads[1].deviation >= triads[2].deviation);
  CHECK(triads[0].j == 1);
  CHECK(triads[0].k == 3);
  CHECK(triads[2].deviation < 1e-12);
}

TEST_CASE("fahp_pipeline gate") {
  SUBCASE("consistent panel is accepted") {
    const std::vector<Judgment> j{{0, 1, LinguisticLabel::Moderate, false},
                                  {0, 2, LinguisticLabel::Strong, false},
                                  {1, 2, LinguisticLabel::EqualToModerate, false}};
    const std::vector<FuzzyPairwiseMatrix> panel{build_matrix(3, j)};
    const auto result = fahp_pipeline(panel, kBenefit3);
    CHECK(result.accepted);
    REQUIRE(result.weights.has_value());
    CHECK(result.weights->cr < 0.1);
    double sum = 0;
    for (double w : result.weights->crisp_weights) sum += w;
    CHECK(std::abs(sum - 1.0) < 1e-12);
    CHECK(result.expert_crs.size() == 1);
  }
  SUBCASE("engineered inconsistent panel is rejected") {
    const std::vector<FuzzyPairwiseMatrix> panel{build_matrix(3, inconsistent_judgments())};
    const auto result = fahp_pipeline(panel, kBenefit3);
    CHECK_FALSE(result.accepted);
    CHECK_FALSE(result.weights.has_value());
    CHECK(result.cr == doctest::Approx(0.3036).epsilon(1e-3));
    CHECK(result.triads.size() == 1);
  }
  SUBCASE("crisp inconsistent matrix is rejected") {
    const std::vector<FuzzyPairwiseMatrix> panel{crisp_matrix({{1, 2, 0.5}, {0.5, 1, 4}, {2, 0.25, 1}})};
    const auto result = fahp_pipeline(panel, kBenefit3);
    CHECK_FALSE(result.accepted);
    CHECK(result.cr >= 0.1);
  }
  SUBCASE("threshold is configurable") {
    const std::vector<FuzzyPairwiseMatrix> panel{build_matrix(3, inconsistent_judgments())};
    FahpOptions loose;
    loose.cr_threshold = 0.5;
    CHECK(fahp_pipeline(panel, kBenefit3, loose).accepted);
  }
  SUBCASE("direction count mismatch") {
    const std::vector<FuzzyPairwiseMatrix> panel{FuzzyPairwiseMatrix::identity({"a", "b", "c"})};
    const std::vector<Direction> two(2, Direction::Benefit);
    CHECK_THROWS_AS(fahp_pipeline(panel, two), Error);
  }
}

TEST_CASE("identity matrices give uniform weights") {
  for (std::size_t n = 2; n <= 10; ++n) {
    std::vector<std::string> ids(n);
    for (std::size_t i = 0; i < n; ++i) ids[i] = "c" + std::to_string(i);
    const std::vector<FuzzyPairwiseMatrix> panel{FuzzyPairwiseMatrix::identity(ids)};
    const std::vector<Direction> dirs(n, Direction::Benefit);
    const auto result = fahp_pipeline(panel, dirs);
    REQUIRE(result.weights.has_value());
    CHECK(std::abs(result.cr) <= 1e-9);
    for (double w : result.weights->crisp_weights) CHECK(std::abs(w - 1.0 / static_cast<double>(n)) <= 1e-12);
  }
}
