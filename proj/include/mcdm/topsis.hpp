#pragma once

// TOPSIS ranking of alternatives against weighted criteria.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mcdm/fahp.hpp"

namespace mcdm {

// Dense row-major m x n grid.
struct Grid {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<double> data;

  Grid() = default;
  Grid(std::size_t r, std::size_t c, double fill = 0.0) : rows(r), cols(c), data(r * c, fill) {}
  static Grid from_rows(const std::vector<std::vector<double>>& rows);

  double& operator()(std::size_t i, std::size_t j) { return data[i * cols + j]; }
  double operator()(std::size_t i, std::size_t j) const { return data[i * cols + j]; }
  std::span<const double> row(std::size_t i) const { return {data.data() + i * cols, cols}; }

  friend bool operator==(const Grid&, const Grid&) = default;
};

struct Criterion {
  std::string id;
  Direction direction = Direction::Benefit;
};

class DecisionMatrix {
 public:
  // Validates m >= 2, n >= 1, finite non-negative scores and no all-zero column.
  DecisionMatrix(std::vector<std::string> alternatives, std::vector<Criterion> criteria, Grid scores);

  std::size_t alternative_count() const noexcept { return alternatives_.size(); }
  std::size_t criterion_count() const noexcept { return criteria_.size(); }
  const std::vector<std::string>& alternatives() const noexcept { return alternatives_; }
  const std::vector<Criterion>& criteria() const noexcept { return criteria_; }
  std::vector<Direction> directions() const;
  const Grid& scores() const noexcept { return scores_; }

 private:
  std::vector<std::string> alternatives_;
  std::vector<Criterion> criteria_;
  Grid scores_;
};

// Arithmetic mean of several experts' score grids (same shape).
Grid mean_scores(std::span<const Grid> grids);

struct IdealSolutions {
  std::vector<double> positive;
  std::vector<double> negative;
};

struct AlternativeResult {
  std::string alternative;
  double d_plus = 0.0;
  double d_minus = 0.0;
  double cc = 0.0;
  int rank = 0;
  // Shares its CC exactly with another alternative.
  bool tied = false;
  // d+ + d- == 0; CC set to 0.5.
  bool degenerate = false;
};

struct RankingResult {
  std::vector<AlternativeResult> alternatives;  // input order
  IdealSolutions ideals;
  Grid weighted;
  std::optional<int> rounding;

  // Alternative indices ordered by rank (1 first).
  std::vector<std::size_t> order() const;
};

// Vector normalization r_ij = x_ij / sqrt(sum_i x_ij^2).
Grid normalize_matrix(const DecisionMatrix& d);
// v_ij = w_j * r_ij
Grid weight_matrix(const Grid& normalized, std::span<const double> weights);
IdealSolutions ideal_solutions(const Grid& weighted, std::span<const Direction> directions);
struct Separation {
  double d_plus = 0.0;
  double d_minus = 0.0;
};
std::vector<Separation> separation_distances(const Grid& weighted, const IdealSolutions& ideals);
// CC and ranks; ids optional (defaults to "A1".."Am").
RankingResult closeness_and_rank(std::span<const Separation> distances,
                                 std::vector<std::string> ids = {});

struct TopsisOptions {
  // When set, the weighted matrix is rounded to this many places and the
  // separation distances to one more before closeness is taken. This mirrors
  // arithmetic carried out on printed intermediate tables.
  std::optional<int> rounding;
};

RankingResult topsis_pipeline(const DecisionMatrix& d, std::span<const double> weights,
                              const TopsisOptions& options = {});
RankingResult topsis_pipeline(const DecisionMatrix& d, const CriterionWeightVector& weights,
                              const TopsisOptions& options = {});

// Half-away-from-zero rounding to `places` decimals.
double round_to(double x, int places);

}  // namespace mcdm
