#include "mcdm/topsis.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "mcdm/error.hpp"
#include "mcdm/kernels.hpp"

namespace mcdm {

Grid Grid::from_rows(const std::vector<std::vector<double>>& rows) {
  Grid g(rows.size(), rows.empty() ? 0 : rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != g.cols) {
      throw Error(ErrorCode::Input, "ragged score rows", "scores[" + std::to_string(i) + "]");
    }
    std::copy(rows[i].begin(), rows[i].end(), g.data.begin() + static_cast<std::ptrdiff_t>(i * g.cols));
  }
  return g;
}

DecisionMatrix::DecisionMatrix(std::vector<std::string> alternatives, std::vector<Criterion> criteria,
                               Grid scores)
    : alternatives_(std::move(alternatives)), criteria_(std::move(criteria)), scores_(std::move(scores)) {
  const std::size_t m = alternatives_.size();
  const std::size_t n = criteria_.size();
  if (m < 2) throw Error(ErrorCode::Input, "decision matrix needs at least two alternatives");
  if (n < 1) throw Error(ErrorCode::Input, "decision matrix needs at least one criterion");
  if (scores_.rows != m || scores_.cols != n || scores_.data.size() != m * n) {
    throw Error(ErrorCode::Input, "score grid shape does not match alternatives x criteria");
  }
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const double x = scores_(i, j);
      if (!std::isfinite(x) || x < 0.0) {
        throw Error(ErrorCode::Validation, "scores must be finite and non-negative",
                    "scores[" + std::to_string(i) + "][" + std::to_string(j) + "]");
      }
    }
  }
  for (std::size_t j = 0; j < n; ++j) {
    bool any = false;
    for (std::size_t i = 0; i < m && !any; ++i) any = scores_(i, j) != 0.0;
    if (!any) throw Error(ErrorCode::Degenerate, "criterion column is all zeros", criteria_[j].id);
  }
}

std::vector<Direction> DecisionMatrix::directions() const {
  std::vector<Direction> out;
  out.reserve(criteria_.size());
  for (const auto& c : criteria_) out.push_back(c.direction);
  return out;
}

Grid mean_scores(std::span<const Grid> grids) {
  if (grids.empty()) throw Error(ErrorCode::Input, "no score grids to combine");
  Grid out(grids.front().rows, grids.front().cols);
  for (std::size_t g = 0; g < grids.size(); ++g) {
    if (grids[g].rows != out.rows || grids[g].cols != out.cols) {
      throw Error(ErrorCode::Input, "score grids differ in shape", "scores[" + std::to_string(g) + "]");
    }
    for (std::size_t k = 0; k < out.data.size(); ++k) out.data[k] += grids[g].data[k];
  }
  const double count = static_cast<double>(grids.size());
  for (double& x : out.data) x /= count;
  return out;
}

std::vector<std::size_t> RankingResult::order() const {
  std::vector<std::size_t> idx(alternatives.size());
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  std::sort(idx.begin(), idx.end(),
            [this](std::size_t a, std::size_t b) { return alternatives[a].rank < alternatives[b].rank; });
  return idx;
}

double round_to(double x, int places) {
  const double scale = std::pow(10.0, places);
  return std::round(x * scale) / scale;
}

Grid normalize_matrix(const DecisionMatrix& d) {
  const Grid& x = d.scores();
  std::vector<double> ss(x.cols);
  kernels::active().column_sum_squares(x.data.data(), x.rows, x.cols, ss.data());
  Grid r(x.rows, x.cols);
  for (std::size_t j = 0; j < x.cols; ++j) {
    if (!(ss[j] > 0.0)) throw Error(ErrorCode::Degenerate, "criterion column is all zeros", d.criteria()[j].id);
    const double norm = std::sqrt(ss[j]);
    for (std::size_t i = 0; i < x.rows; ++i) r(i, j) = x(i, j) / norm;
  }
  return r;
}

Grid weight_matrix(const Grid& normalized, std::span<const double> weights) {
  if (weights.size() != normalized.cols) {
    throw Error(ErrorCode::Input, "weight count " + std::to_string(weights.size()) + " does not match " +
                                      std::to_string(normalized.cols) + " criteria");
  }
  Grid v(normalized.rows, normalized.cols);
  kernels::active().scale_columns(normalized.data.data(), normalized.rows, normalized.cols, weights.data(),
                                  v.data.data());
  return v;
}

IdealSolutions ideal_solutions(const Grid& weighted, std::span<const Direction> directions) {
  if (directions.size() != weighted.cols) throw Error(ErrorCode::Input, "direction count does not match criteria");
  IdealSolutions ideals;
  ideals.positive.resize(weighted.cols);
  ideals.negative.resize(weighted.cols);
  for (std::size_t j = 0; j < weighted.cols; ++j) {
    double lo = weighted(0, j);
    double hi = weighted(0, j);
    for (std::size_t i = 1; i < weighted.rows; ++i) {
      lo = std::min(lo, weighted(i, j));
      hi = std::max(hi, weighted(i, j));
    }
    const bool benefit = directions[j] == Direction::Benefit;
    ideals.positive[j] = benefit ? hi : lo;
    ideals.negative[j] = benefit ? lo : hi;
  }
  return ideals;
}

std::vector<Separation> separation_distances(const Grid& weighted, const IdealSolutions& ideals) {
  if (ideals.positive.size() != weighted.cols || ideals.negative.size() != weighted.cols) {
    throw Error(ErrorCode::Input, "ideal solution length does not match criteria");
  }
  const auto& k = kernels::active();
  std::vector<double> plus(weighted.rows);
  std::vector<double> minus(weighted.rows);
  k.row_distances(weighted.data.data(), weighted.rows, weighted.cols, ideals.positive.data(), plus.data());
  k.row_distances(weighted.data.data(), weighted.rows, weighted.cols, ideals.negative.data(), minus.data());
  std::vector<Separation> out(weighted.rows);
  for (std::size_t i = 0; i < weighted.rows; ++i) out[i] = {plus[i], minus[i]};
  return out;
}

RankingResult closeness_and_rank(std::span<const Separation> distances, std::vector<std::string> ids) {
  const std::size_t m = distances.size();
  if (ids.empty()) {
    for (std::size_t i = 0; i < m; ++i) ids.push_back("A" + std::to_string(i + 1));
  }
  if (ids.size() != m) throw Error(ErrorCode::Input, "alternative id count does not match distances");

  RankingResult result;
  result.alternatives.resize(m);
  for (std::size_t i = 0; i < m; ++i) {
    const Separation& s = distances[i];
    if (!(s.d_plus >= 0.0) || !(s.d_minus >= 0.0)) {
      throw Error(ErrorCode::Domain, "separation distances must be non-negative", ids[i]);
    }
    AlternativeResult& a = result.alternatives[i];
    a.alternative = std::move(ids[i]);
    a.d_plus = s.d_plus;
    a.d_minus = s.d_minus;
    const double total = s.d_plus + s.d_minus;
    if (total > 0.0) {
      a.cc = s.d_minus / total;
    } else {
      a.cc = 0.5;
      a.degenerate = true;
    }
  }

  std::vector<std::size_t> idx(m);
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t x, std::size_t y) {
    return result.alternatives[x].cc > result.alternatives[y].cc;
  });
  for (std::size_t r = 0; r < m; ++r) {
    result.alternatives[idx[r]].rank = static_cast<int>(r + 1);
    if (r > 0 && result.alternatives[idx[r]].cc == result.alternatives[idx[r - 1]].cc) {
      result.alternatives[idx[r]].tied = true;
      result.alternatives[idx[r - 1]].tied = true;
    }
  }
  return result;
}

RankingResult topsis_pipeline(const DecisionMatrix& d, std::span<const double> weights,
                              const TopsisOptions& options) {
  if (weights.size() != d.criterion_count()) {
    throw Error(ErrorCode::Input, "weight count does not match criteria");
  }
  for (std::size_t j = 0; j < weights.size(); ++j) {
    if (!std::isfinite(weights[j]) || weights[j] < 0.0) {
      throw Error(ErrorCode::Input, "weights must be finite and non-negative", "weights[" + std::to_string(j) + "]");
    }
  }

  Grid v = weight_matrix(normalize_matrix(d), weights);
  if (options.rounding) {
    for (double& x : v.data) x = round_to(x, *options.rounding);
  }
  const std::vector<Direction> dirs = d.directions();
  IdealSolutions ideals = ideal_solutions(v, dirs);
  std::vector<Separation> dist = separation_distances(v, ideals);
  if (options.rounding) {
    for (auto& s : dist) {
      s.d_plus = round_to(s.d_plus, *options.rounding + 1);
      s.d_minus = round_to(s.d_minus, *options.rounding + 1);
    }
  }
  RankingResult result = closeness_and_rank(dist, d.alternatives());
  result.ideals = std::move(ideals);
  result.weighted = std::move(v);
  result.rounding = options.rounding;
  return result;
}

RankingResult topsis_pipeline(const DecisionMatrix& d, const CriterionWeightVector& weights,
                              const TopsisOptions& options) {
  if (weights.directions.size() == d.criterion_count()) {
    for (std::size_t j = 0; j < d.criterion_count(); ++j) {
      if (weights.directions[j] != d.criteria()[j].direction) {
        throw Error(ErrorCode::Input, "weight vector direction disagrees with decision matrix", d.criteria()[j].id);
      }
    }
  }
  return topsis_pipeline(d, weights.crisp_weights, options);
}

}  // namespace mcdm
