#include <numeric>

#include "doctest.h"
#include "mcdm/error.hpp"
#include "mcdm/kernels.hpp"
#include "mcdm/sensitivity.hpp"
#include "oracles.hpp"
#include "case_study.hpp"

using namespace mcdm;

namespace {

std::vector<bool> case_benefit() {
  std::vector<bool> b;
  for (auto d : case_study::kDirections) b.push_back(d == Direction::Benefit);
  return b;
}

std::size_t argmax(const std::vector<double>& v) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < v.size(); ++i)
    if (v[i] > v[best]) best = i;
  return best;
}

// B beats A on every criterion: higher on benefit, lower on cost.
DecisionMatrix dominance_instance() {
  const std::vector<Criterion> crit{{"q", Direction::Benefit}, {"c", Direction::Cost}, {"s", Direction::Benefit}};
  return {{"A", "B", "C"}, crit, Grid::from_rows({{3, 7, 4}, {6, 2, 8}, {5, 5, 2}})};
}

}  // namespace

TEST_CASE("oat identity perturbation equals the base ranking") {
  const auto d = case_study::decision_matrix();
  const std::vector<double> deltas{0.0};
  const auto report = oat_weight_perturbation(d, case_study::kWeights, deltas);
  CHECK(report.rank_reversal_count == 0);
  CHECK(report.scenarios.size() == 5);
  for (const auto& s : report.scenarios) {
    REQUIRE_FALSE(s.skipped);
    for (std::size_t i = 0; i < 5; ++i) {
      CHECK(s.cc[i] == report.base.alternatives[i].cc);
      CHECK(s.ranks[i] == report.base.alternatives[i].rank);
    }
  }
  for (const auto& c : report.critical_delta) CHECK_FALSE(c.has_value());
}

TEST_CASE("oat on the case study agrees with scenario-by-scenario reruns") {
  const auto d = case_study::decision_matrix();
  const std::vector<double> deltas{-0.05, 0.05};
  const auto report = oat_weight_perturbation(d, case_study::kWeights, deltas);
  REQUIRE(report.scenarios.size() == 10);

  double total = 0;
  for (double w : case_study::kWeights) total += w;
  std::size_t k = 0;
  for (std::size_t j = 0; j < 5; ++j) {
    for (double delta : deltas) {
      const Scenario& s = report.scenarios[k++];
      std::vector<double> w;
      for (double x : case_study::kWeights) w.push_back(x / total);
      w[j] += delta;
      const bool valid = w[j] > 0.0 && w[j] < 1.0;
      CHECK(s.skipped == !valid);
      if (!valid) continue;
      double sum = 0;
      for (double x : w) sum += x;
      for (double& x : w) x /= sum;
      double got = 0;
      for (double x : s.weights) got += x;
      CHECK(std::abs(got - 1.0) < 1e-9);
      const auto cc = oracle::topsis_cc(case_study::kScores, w, case_benefit());
      CHECK(s.top == argmax(cc));
      for (std::size_t i = 0; i < 5; ++i) CHECK(std::abs(s.cc[i] - cc[i]) < 1e-9);
    }
  }
  // Scalability (0.057) minus 0.05 stays positive; nothing is skipped here.
  CHECK(report.evaluated == 10);
  for (const auto& row : report.rank_frequency) {
    CHECK(std::accumulate(row.begin(), row.end(), std::size_t{0}) == report.evaluated);
  }
}

TEST_CASE("oat skips deltas that leave the unit interval") {
  const auto d = case_study::decision_matrix();
  const std::vector<double> deltas{-0.2, 0.7};
  const auto report = oat_weight_perturbation(d, case_study::kWeights, deltas);
  std::size_t skipped = 0;
  for (const auto& s : report.scenarios) skipped += s.skipped ? 1 : 0;
  CHECK(skipped > 0);
  CHECK(report.evaluated + skipped == report.scenarios.size());
}

TEST_CASE("dominance survives every perturbation") {
  const auto d = dominance_instance();
  const std::vector<double> w{0.5, 0.3, 0.2};
  const std::vector<double> deltas{-0.15, -0.1, -0.05, 0.05, 0.1, 0.2, 0.4};
  const auto oat = oat_weight_perturbation(d, w, deltas);
  for (const auto& s : oat.scenarios) {
    if (s.skipped) continue;
    CHECK(s.ranks[1] < s.ranks[0]);
  }
  const auto mc = monte_carlo_weights(d, 2000, 77, w);
  CHECK(mc.rank_frequency[0][0] == 0);
  for (const auto& s : mc.scenarios) CHECK(s.ranks[1] < s.ranks[0]);
}

TEST_CASE("two-alternative dominance keeps the winner first") {
  const std::vector<Criterion> crit{{"a", Direction::Benefit}, {"b", Direction::Cost}};
  const DecisionMatrix d({"A", "B"}, crit, Grid::from_rows({{2, 6}, {5, 3}}));
  const std::vector<double> deltas{-0.3, -0.1, 0.0, 0.1, 0.3};
  const auto oat = oat_weight_perturbation(d, std::vector<double>{0.5, 0.5}, deltas);
  for (const auto& s : oat.scenarios)
    if (!s.skipped) CHECK(s.top == 1);
  const auto mc = monte_carlo_weights(d, 500, 3);
  CHECK(mc.rank_frequency[1][0] == 500);
}

TEST_CASE("simplex sampling") {
  const auto draws = simplex_samples(5, 1000, 42);
  for (const auto& w : draws) {
    double sum = 0;
    for (double x : w) {
      CHECK(x > 0.0);
      sum += x;
    }
    CHECK(std::abs(sum - 1.0) < 1e-9);
  }
  CHECK(simplex_samples(5, 10, 42) == simplex_samples(5, 10, 42));
  CHECK(simplex_samples(5, 10, 42) != simplex_samples(5, 10, 43));
}

TEST_CASE("monte carlo determinism and pipeline agreement") {
  const auto d = case_study::decision_matrix();
  const auto one = monte_carlo_weights(d, 1, 9);
  CHECK(one.scenarios.size() == 1);
  CHECK(one.evaluated == 1);

  const auto a = monte_carlo_weights(d, 10000, 2024, case_study::kWeights);
  const auto b = monte_carlo_weights(d, 10000, 2024, case_study::kWeights);
  REQUIRE(a.scenarios.size() == 10000);
  CHECK(a.rank_frequency == b.rank_frequency);
  CHECK(a.rank_reversal_count == b.rank_reversal_count);
  for (std::size_t s = 0; s < a.scenarios.size(); ++s) REQUIRE(a.scenarios[s].cc == b.scenarios[s].cc);

  std::size_t total = 0;
  for (const auto& row : a.rank_frequency) total += row[0];
  CHECK(total == 10000);

  // Each batched sample equals an independent pipeline run with its weights.
  for (std::size_t s = 0; s < 10000; s += 97) {
    const auto r = topsis_pipeline(d, a.scenarios[s].weights);
    for (std::size_t i = 0; i < 5; ++i) {
      CHECK(r.alternatives[i].cc == a.scenarios[s].cc[i]);
      CHECK(r.alternatives[i].rank == a.scenarios[s].ranks[i]);
    }
  }
}

TEST_CASE("monte carlo reports agree across kernel backends") {
  const auto d = case_study::decision_matrix();
  kernels::select(kernels::Backend::Scalar);
  const auto scalar = monte_carlo_weights(d, 3000, 5);
  kernels::select(kernels::Backend::Avx2);
  const auto vec = monte_carlo_weights(d, 3000, 5);
  kernels::select(kernels::Backend::Auto);
  CHECK(scalar.rank_frequency == vec.rank_frequency);
  for (std::size_t s = 0; s < 3000; ++s) REQUIRE(scalar.scenarios[s].cc == vec.scenarios[s].cc);
}

TEST_CASE("roadmap tiers") {
  TopsisOptions rounded;
  rounded.rounding = 2;
  const auto ranking = topsis_pipeline(case_study::decision_matrix(), case_study::kWeights, rounded);

  const auto tiers = roadmap_tiers(ranking);
  REQUIRE(tiers.tiers.size() == 3);
  CHECK(tiers.tiers[0] == std::vector<std::string>{"Posture Monitoring"});
  CHECK(tiers.tiers[1] == std::vector<std::string>{"Fatigue Prediction", "PPE Compliance Tracking"});
  CHECK(tiers.tiers[2] == std::vector<std::string>{"Health-Based Task Assignment", "Skill Training Simulation"});

  const int all[] = {5};
  CHECK(roadmap_tiers(ranking, all).tiers.size() == 1);
  CHECK(roadmap_tiers(ranking, all).tiers[0].size() == 5);

  const int rebanded[] = {2, 2, 1};
  const auto r2 = roadmap_tiers(ranking, rebanded);
  CHECK(r2.tiers[0] == std::vector<std::string>{"Posture Monitoring", "Fatigue Prediction"});
  CHECK(r2.tiers[1] == std::vector<std::string>{"PPE Compliance Tracking", "Health-Based Task Assignment"});
  CHECK(r2.tiers[2] == std::vector<std::string>{"Skill Training Simulation"});

  const int wrong[] = {1, 1};
  CHECK_THROWS_AS(roadmap_tiers(ranking, wrong), Error);
  const int nonpositive[] = {0, 5};
  CHECK_THROWS_AS(roadmap_tiers(ranking, nonpositive), Error);
}

TEST_CASE("roadmap rejects ties across a band edge") {
  const std::vector<Separation> dist{{0.1, 0.3}, {0.2, 0.2}, {0.2, 0.2}, {0.3, 0.1}};
  const auto ranking = closeness_and_rank(dist);
  const int split[] = {2, 2};
  try {
    roadmap_tiers(ranking, split);
    FAIL("expected tie boundary error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::TieBoundary);
  }
  const int around[] = {1, 2, 1};
  CHECK_NOTHROW(roadmap_tiers(ranking, around));
}
