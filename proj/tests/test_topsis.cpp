#include <algorithm>
#include <numeric>
#include <random>

#include "doctest.h"
#include "mcdm/error.hpp"
#include "mcdm/topsis.hpp"
#include "oracles.hpp"
#include "case_study.hpp"

using namespace mcdm;

namespace {

struct Instance {
  std::vector<std::vector<double>> x;
  std::vector<double> w;
  std::vector<bool> benefit;
};

Instance random_instance(std::mt19937_64& gen, std::size_t m, std::size_t n) {
  std::uniform_real_distribution<double> score(0.5, 9.0);
  std::uniform_real_distribution<double> weight(0.01, 1.0);
  Instance in;
  in.x.assign(m, std::vector<double>(n));
  for (auto& row : in.x)
    for (double& v : row) v = score(gen);
  double total = 0;
  for (std::size_t j = 0; j < n; ++j) {
    in.w.push_back(weight(gen));
    total += in.w.back();
    in.benefit.push_back(gen() % 2 == 0);
  }
  for (double& w : in.w) w /= total;
  return in;
}

DecisionMatrix to_matrix(const Instance& in) {
  std::vector<std::string> alts;
  for (std::size_t i = 0; i < in.x.size(); ++i) alts.push_back("a" + std::to_string(i));
  std::vector<Criterion> crit;
  for (std::size_t j = 0; j < in.w.size(); ++j) {
    crit.push_back({"c" + std::to_string(j), in.benefit[j] ? Direction::Benefit : Direction::Cost});
  }
  return {alts, crit, Grid::from_rows(in.x)};
}

}  // namespace

TEST_CASE("decision matrix invariants") {
  const std::vector<Criterion> one{{"c", Direction::Benefit}};
  CHECK_THROWS_AS(DecisionMatrix({"a"}, one, Grid::from_rows({{1}})), Error);
  CHECK_THROWS_AS(DecisionMatrix({"a", "b"}, one, Grid::from_rows({{-1}, {2}})), Error);
  try {
    DecisionMatrix({"a", "b"}, one, Grid::from_rows({{0}, {0}}));
    FAIL("expected degenerate column");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::Degenerate);
    CHECK(e.location() == "c");
  }
  CHECK_THROWS_AS(DecisionMatrix({"a", "b"}, one, Grid::from_rows({{1, 2}, {3, 4}})), Error);
}

TEST_CASE("normalize_matrix") {
  const auto r = normalize_matrix(case_study::decision_matrix());
  const double expected[] = {0.4666, 0.4082, 0.5249, 0.4666, 0.3500};
  for (std::size_t i = 0; i < 5; ++i) CHECK(std::abs(r(i, 0) - expected[i]) < 1e-4);
  CHECK(std::abs(std::sqrt(294.0) - 17.146) < 1e-3);
  for (std::size_t j = 0; j < 5; ++j) {
    double ss = 0;
    for (std::size_t i = 0; i < 5; ++i) ss += r(i, j) * r(i, j);
    CHECK(std::abs(ss - 1.0) < 1e-12);
  }
  // Scaling a column leaves it unchanged after normalization.
  auto scaled = case_study::kScores;
  for (auto& row : scaled) row[2] *= 13.7;
  std::vector<Criterion> crit;
  for (std::size_t j = 0; j < 5; ++j) crit.push_back({case_study::kCriteria[j], case_study::kDirections[j]});
  const auto r2 = normalize_matrix(DecisionMatrix(case_study::kAlternatives, crit, Grid::from_rows(scaled)));
  for (std::size_t i = 0; i < 5; ++i) CHECK(std::abs(r2(i, 2) - r(i, 2)) < 1e-12);
}

TEST_CASE("weight_matrix") {
  const auto r = normalize_matrix(case_study::decision_matrix());
  const auto v = weight_matrix(r, case_study::kWeights);
  CHECK(std::abs(v(0, 0) - 0.16) < 0.005);
  const std::vector<double> uniform(5, 0.2);
  const auto u = weight_matrix(r, uniform);
  for (std::size_t k = 0; k < u.data.size(); ++k) CHECK(std::abs(u.data[k] - r.data[k] / 5.0) < 1e-15);
  const std::vector<double> zero_first = {0.0, 0.25, 0.25, 0.25, 0.25};
  const auto z = weight_matrix(r, zero_first);
  for (std::size_t i = 0; i < 5; ++i) CHECK(z(i, 0) == 0.0);
  const std::vector<double> short_w = {0.5, 0.5};
  CHECK_THROWS_AS(weight_matrix(r, short_w), Error);
}

TEST_CASE("ideal solutions from the printed weighted matrix") {
  const auto v = Grid::from_rows(case_study::kWeighted);
  const auto ideals = ideal_solutions(v, case_study::kDirections);
  CHECK(ideals.positive == case_study::kIdealPositive);
  CHECK(ideals.negative == case_study::kIdealNegative);

  const auto same = Grid::from_rows({{0.2, 0.3}, {0.2, 0.3}});
  const std::vector<Direction> dirs{Direction::Benefit, Direction::Cost};
  const auto flat = ideal_solutions(same, dirs);
  CHECK(flat.positive == flat.negative);
}

TEST_CASE("separation distances") {
  const auto v = Grid::from_rows(case_study::kWeighted);
  const IdealSolutions ideals{case_study::kIdealPositive, case_study::kIdealNegative};
  const auto d = separation_distances(v, ideals);
  CHECK(std::abs(d[0].d_plus - 0.0346) < 1e-4);
  CHECK(std::abs(d[0].d_minus - 0.0616) < 1e-4);
  for (std::size_t i = 0; i < 5; ++i) {
    CAPTURE(i);
    CHECK(std::abs(d[i].d_plus - case_study::kDPlus[i]) <= 0.001);
    CHECK(std::abs(d[i].d_minus - case_study::kDMinus[i]) <= 0.001);
  }
  const auto at_best = Grid::from_rows({case_study::kIdealPositive});
  const auto self = separation_distances(at_best, ideals);
  CHECK(self[0].d_plus == 0.0);
  double gap = 0;
  for (std::size_t j = 0; j < 5; ++j) gap += std::pow(case_study::kIdealPositive[j] - case_study::kIdealNegative[j], 2);
  CHECK(self[0].d_minus == doctest::Approx(std::sqrt(gap)).epsilon(1e-14));
}

TEST_CASE("closeness_and_rank") {
  const std::vector<Separation> worked{{0.035, 0.062}};
  CHECK(std::abs(round_to(closeness_and_rank(worked).alternatives[0].cc, 3) - 0.639) < 1e-12);
  const std::vector<Separation> at_worst{{0.4, 0.0}, {0.1, 0.1}};
  CHECK(closeness_and_rank(at_worst).alternatives[0].cc == 0.0);

  std::vector<Separation> table7;
  for (std::size_t i = 0; i < 5; ++i) table7.push_back({case_study::kDPlus[i], case_study::kDMinus[i]});
  const auto r = closeness_and_rank(table7, case_study::kAlternatives);
  for (std::size_t i = 0; i < 5; ++i) {
    CHECK(std::abs(r.alternatives[i].cc - case_study::kCc[i]) <= 0.0005);
    CHECK(r.alternatives[i].rank == case_study::kRanks[i]);
  }

  SUBCASE("ties are stable and flagged") {
    const std::vector<Separation> tied{{0.1, 0.2}, {0.3, 0.1}, {0.1, 0.2}};
    const auto t = closeness_and_rank(tied);
    CHECK(t.alternatives[0].rank == 1);
    CHECK(t.alternatives[2].rank == 2);
    CHECK(t.alternatives[0].tied);
    CHECK(t.alternatives[2].tied);
    CHECK_FALSE(t.alternatives[1].tied);
  }
  SUBCASE("degenerate rows") {
    const std::vector<Separation> zero{{0.0, 0.0}, {0.1, 0.2}};
    const auto z = closeness_and_rank(zero);
    CHECK(z.alternatives[0].cc == 0.5);
    CHECK(z.alternatives[0].degenerate);
  }
  SUBCASE("negative distance") {
    const std::vector<Separation> bad{{-0.1, 0.2}, {0.1, 0.2}};
    CHECK_THROWS_AS(closeness_and_rank(bad), Error);
  }
}

TEST_CASE("topsis_pipeline on the case study") {
  const auto d = case_study::decision_matrix();
  TopsisOptions rounded;
  rounded.rounding = 2;
  const auto r = topsis_pipeline(d, case_study::kWeights, rounded);
  for (std::size_t i = 0; i < 5; ++i) {
    CAPTURE(i);
    CHECK(std::abs(r.alternatives[i].d_plus - case_study::kDPlus[i]) <= 0.001);
    CHECK(std::abs(r.alternatives[i].d_minus - case_study::kDMinus[i]) <= 0.001);
    CHECK(std::abs(r.alternatives[i].cc - case_study::kCc[i]) <= 0.001);
    CHECK(r.alternatives[i].rank == case_study::kRanks[i]);
  }
  CHECK(r.weighted == Grid::from_rows(case_study::kWeighted));

  const auto full = topsis_pipeline(d, case_study::kWeights);
  for (std::size_t i = 0; i < 5; ++i) CHECK(full.alternatives[i].rank == case_study::kRanks[i]);
  // Full-precision values from the direct oracle.
  std::vector<bool> benefit;
  for (auto dir : case_study::kDirections) benefit.push_back(dir == Direction::Benefit);
  const auto cc = oracle::topsis_cc(case_study::kScores, case_study::kWeights, benefit);
  for (std::size_t i = 0; i < 5; ++i) CHECK(std::abs(full.alternatives[i].cc - cc[i]) < 1e-12);
}

TEST_CASE("weight vector directions must agree") {
  CriterionWeightVector w;
  w.crisp_weights = case_study::kWeights;
  w.directions.assign(5, Direction::Benefit);
  CHECK_THROWS_AS(topsis_pipeline(case_study::decision_matrix(), w), Error);
  w.directions = case_study::kDirections;
  CHECK_NOTHROW(topsis_pipeline(case_study::decision_matrix(), w));
}

TEST_CASE("topsis properties over random instances") {
  std::mt19937_64 gen(424242);
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t m = 2 + gen() % 7;
    const std::size_t n = 1 + gen() % 6;
    const Instance in = random_instance(gen, m, n);
    const DecisionMatrix d = to_matrix(in);
    const auto base = topsis_pipeline(d, in.w);

    std::vector<int> ranks;
    for (const auto& a : base.alternatives) {
      CHECK(a.cc >= 0.0);
      CHECK(a.cc <= 1.0);
      if (a.d_plus + a.d_minus > 0) CHECK(std::abs(a.cc - a.d_minus / (a.d_plus + a.d_minus)) < 1e-12);
      ranks.push_back(a.rank);
    }
    std::vector<int> sorted = ranks;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t k = 0; k < m; ++k) CHECK(sorted[k] == static_cast<int>(k + 1));
    const auto order = base.order();
    for (std::size_t k = 1; k < m; ++k) CHECK(base.alternatives[order[k - 1]].cc >= base.alternatives[order[k]].cc);

    // Column scale invariance.
    Instance scaled = in;
    const std::size_t col = gen() % n;
    const double c = 0.1 + static_cast<double>(gen() % 1000) / 37.0;
    for (auto& row : scaled.x) row[col] *= c;
    const auto s = topsis_pipeline(to_matrix(scaled), in.w);
    for (std::size_t i = 0; i < m; ++i) {
      CHECK(std::abs(s.alternatives[i].cc - base.alternatives[i].cc) < 1e-9);
      CHECK(std::abs(s.alternatives[i].d_plus - base.alternatives[i].d_plus) < 1e-9);
    }

    // Row permutation equivariance.
    std::vector<std::size_t> perm(m);
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    std::shuffle(perm.begin(), perm.end(), gen);
    Instance shuffled = in;
    for (std::size_t i = 0; i < m; ++i) shuffled.x[i] = in.x[perm[i]];
    const auto p = topsis_pipeline(to_matrix(shuffled), in.w);
    for (std::size_t i = 0; i < m; ++i) CHECK(p.alternatives[i].cc == doctest::Approx(base.alternatives[perm[i]].cc).epsilon(1e-12));

    // Direction flip swaps the ideals for that column.
    Instance flipped = in;
    flipped.benefit[col] = !flipped.benefit[col];
    const auto f = topsis_pipeline(to_matrix(flipped), in.w);
    CHECK(f.ideals.positive[col] == base.ideals.negative[col]);
    CHECK(f.ideals.negative[col] == base.ideals.positive[col]);
  }
}

TEST_CASE("oracle equivalence on random 3x3 instances") {
  std::mt19937_64 gen(31337);
  for (int trial = 0; trial < 200; ++trial) {
    const Instance in = random_instance(gen, 3, 3);
    const auto r = topsis_pipeline(to_matrix(in), in.w);
    const auto cc = oracle::topsis_cc(in.x, in.w, in.benefit);
    for (std::size_t i = 0; i < 3; ++i) CHECK(std::abs(r.alternatives[i].cc - cc[i]) < 1e-9);
  }
}

TEST_CASE("mean scores") {
  const std::vector<Grid> grids{Grid::from_rows({{1, 2}, {3, 4}}), Grid::from_rows({{3, 4}, {5, 6}})};
  CHECK(mean_scores(grids) == Grid::from_rows({{2, 3}, {4, 5}}));
  const std::vector<Grid> bad{Grid::from_rows({{1, 2}}), Grid::from_rows({{1}})};
  CHECK_THROWS_AS(mean_scores(bad), Error);
}

TEST_CASE("round_to") {
  CHECK(round_to(0.16003, 2) == 0.16);
  CHECK(round_to(0.0346410, 3) == 0.035);
  CHECK(round_to(-0.125, 2) == -0.13);
}
