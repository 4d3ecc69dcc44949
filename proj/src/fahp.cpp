#include "mcdm/fahp.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <sstream>

#include "mcdm/error.hpp"
#include "mcdm/kernels.hpp"

namespace mcdm {

namespace {

std::string cell_location(std::size_t i, std::size_t j) {
  return "cells[" + std::to_string(i) + "][" + std::to_string(j) + "]";
}

bool near(double a, double b, double tol) { return std::abs(a - b) <= tol * std::max(1.0, std::abs(a)); }

}  // namespace

FuzzyPairwiseMatrix::FuzzyPairwiseMatrix(std::vector<std::string> criterion_ids,
                                         std::vector<std::vector<Tfn>> cells)
    : ids_(std::move(criterion_ids)), cells_(std::move(cells)) {
  const std::size_t n = ids_.size();
  if (n < 2) throw Error(ErrorCode::Input, "pairwise matrix needs at least two criteria");
  if (cells_.size() != n) throw Error(ErrorCode::Input, "pairwise matrix row count does not match criteria");
  for (std::size_t i = 0; i < n; ++i) {
    if (cells_[i].size() != n) {
      throw Error(ErrorCode::Input, "pairwise matrix is not square", "cells[" + std::to_string(i) + "]");
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (!(cells_[i][i] == Tfn{1, 1, 1})) {
      throw Error(ErrorCode::Validation, "diagonal cell must be (1,1,1)", cell_location(i, i));
    }
    for (std::size_t j = 0; j < n; ++j) {
      const Tfn& a = cells_[i][j];
      if (!std::isfinite(a.l) || !std::isfinite(a.u) || !a.positive() || !a.ordered()) {
        throw Error(ErrorCode::Validation, "cell must satisfy 0 < l <= m <= u", cell_location(i, j));
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const Tfn inv = tfn_invert(cells_[i][j]);
      const Tfn& b = cells_[j][i];
      if (!near(inv.l, b.l, kReciprocityTolerance) || !near(inv.m, b.m, kReciprocityTolerance) ||
          !near(inv.u, b.u, kReciprocityTolerance)) {
        throw Error(ErrorCode::Validation, "matrix is not reciprocal", cell_location(j, i));
      }
    }
  }
}

FuzzyPairwiseMatrix FuzzyPairwiseMatrix::identity(std::vector<std::string> criterion_ids) {
  const std::size_t n = criterion_ids.size();
  return {std::move(criterion_ids), std::vector<std::vector<Tfn>>(n, std::vector<Tfn>(n, Tfn{1, 1, 1}))};
}

FuzzyPairwiseMatrix FuzzyPairwiseMatrix::permuted(std::span<const std::size_t> perm) const {
  const std::size_t n = size();
  if (perm.size() != n) throw Error(ErrorCode::Input, "permutation length mismatch");
  std::vector<std::string> ids(n);
  std::vector<std::vector<Tfn>> cells(n, std::vector<Tfn>(n));
  for (std::size_t i = 0; i < n; ++i) {
    ids[i] = ids_.at(perm[i]);
    for (std::size_t j = 0; j < n; ++j) cells[i][j] = cells_.at(perm[i]).at(perm[j]);
  }
  return {std::move(ids), std::move(cells)};
}

FuzzyPairwiseMatrix build_matrix(std::vector<std::string> criterion_ids,
                                 std::span<const Judgment> judgments) {
  const std::size_t n = criterion_ids.size();
  if (n < 2) throw Error(ErrorCode::Input, "pairwise matrix needs at least two criteria");
  std::vector<std::vector<Tfn>> cells(n, std::vector<Tfn>(n, Tfn{1, 1, 1}));
  std::vector<std::vector<bool>> seen(n, std::vector<bool>(n, false));

  for (std::size_t k = 0; k < judgments.size(); ++k) {
    const Judgment& jd = judgments[k];
    const std::string where = "judgments[" + std::to_string(k) + "]";
    if (jd.row >= n || jd.col >= n) throw Error(ErrorCode::Input, "judgment index out of range", where);
    if (jd.row == jd.col) throw Error(ErrorCode::Input, "self-comparison is implied", where);
    // Normalize to the upper triangle; a lower-triangle statement is the inverse.
    std::size_t i = jd.row;
    std::size_t j = jd.col;
    bool reciprocal = jd.reciprocal;
    if (i > j) {
      std::swap(i, j);
      reciprocal = !reciprocal;
    }
    if (seen[i][j]) {
      throw Error(ErrorCode::Conflict,
                  "duplicate judgment for pair (" + std::to_string(i) + "," + std::to_string(j) + ")", where);
    }
    seen[i][j] = true;
    cells[i][j] = linguistic_to_tfn(jd.label, reciprocal);
    cells[j][i] = tfn_invert(cells[i][j]);
  }

  std::ostringstream missing;
  std::size_t missing_count = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (!seen[i][j]) {
        missing << (missing_count++ ? " " : "") << "(" << i << "," << j << ")";
      }
    }
  }
  if (missing_count > 0) {
    throw Error(ErrorCode::IncompleteJudgment, "missing judgments for pairs " + missing.str());
  }
  return {std::move(criterion_ids), std::move(cells)};
}

FuzzyPairwiseMatrix build_matrix(std::size_t n, std::span<const Judgment> judgments) {
  std::vector<std::string> ids;
  for (std::size_t i = 0; i < n; ++i) ids.push_back("c" + std::to_string(i));
  return build_matrix(std::move(ids), judgments);
}

FuzzyPairwiseMatrix aggregate_expert_matrices(std::span<const FuzzyPairwiseMatrix> matrices) {
  if (matrices.empty()) throw Error(ErrorCode::Input, "no expert matrices to aggregate");
  const auto& ids = matrices.front().criterion_ids();
  for (std::size_t e = 1; e < matrices.size(); ++e) {
    if (matrices[e].criterion_ids() != ids) {
      throw Error(ErrorCode::Input, "expert matrices disagree on criteria", "matrices[" + std::to_string(e) + "]");
    }
  }
  if (matrices.size() == 1) return matrices.front();

  const std::size_t n = ids.size();
  const double k = static_cast<double>(matrices.size());
  std::vector<std::vector<Tfn>> cells(n, std::vector<Tfn>(n, Tfn{1, 1, 1}));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      double sl = 0.0, sm = 0.0, su = 0.0;
      for (const auto& mat : matrices) {
        const Tfn& a = mat.at(i, j);
        sl += std::log(a.l);
        sm += std::log(a.m);
        su += std::log(a.u);
      }
      cells[i][j] = {std::exp(sl / k), std::exp(sm / k), std::exp(su / k)};
    }
  }
  return {ids, std::move(cells)};
}

double defuzzify(const Tfn& a, const CrMethod& method) {
  if (const auto* cut = std::get_if<AlphaCutDefuzz>(&method)) {
    const double lower = a.l + cut->alpha * (a.m - a.l);
    const double upper = a.u - cut->alpha * (a.u - a.m);
    return cut->optimism * upper + (1.0 - cut->optimism) * lower;
  }
  return defuzzify_centroid(a);
}

std::vector<double> defuzzified_matrix(const FuzzyPairwiseMatrix& matrix, const CrMethod& method) {
  if (const auto* cut = std::get_if<AlphaCutDefuzz>(&method)) {
    if (cut->alpha < 0.0 || cut->alpha > 1.0 || cut->optimism < 0.0 || cut->optimism > 1.0) {
      throw Error(ErrorCode::Input, "alpha and optimism must lie in [0, 1]");
    }
  }
  const std::size_t n = matrix.size();
  std::vector<double> out(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) out[i * n + j] = defuzzify(matrix.at(i, j), method);
  }
  return out;
}

double random_index(std::size_t n) {
  static constexpr double kRi[] = {0.0, 0.0, 0.0, 0.58, 0.90, 1.12, 1.24, 1.32, 1.41, 1.45, 1.49};
  if (n == 0 || n > 10) {
    throw Error(ErrorCode::UnsupportedSize, "random index is tabulated for 1..10 criteria, got " + std::to_string(n));
  }
  return kRi[n];
}

double principal_eigenvalue(std::span<const double> a, std::size_t n, double tolerance, int max_iterations) {
  if (n == 0 || a.size() != n * n) throw Error(ErrorCode::Input, "eigenvalue input is not square");
  const auto& k = kernels::active();
  std::vector<double> x(n, 1.0 / static_cast<double>(n));
  std::vector<double> y(n);
  double lambda = 0.0;
  for (int it = 0; it < max_iterations; ++it) {
    k.matvec(a.data(), n, x.data(), y.data());
    // x is kept on the unit 1-norm, so sum(y) estimates the Perron root.
    const double sum = std::accumulate(y.begin(), y.end(), 0.0);
    if (!(sum > 0.0) || !std::isfinite(sum)) {
      throw Error(ErrorCode::Numeric, "power iteration requires a positive matrix");
    }
    double change = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double next = y[i] / sum;
      change = std::max(change, std::abs(next - x[i]));
      x[i] = next;
    }
    const double delta = std::abs(sum - lambda);
    lambda = sum;
    if (it > 0 && delta < tolerance && change < tolerance) return lambda;
  }
  throw Error(ErrorCode::Numeric, "power iteration did not converge");
}

double consistency_ratio(const FuzzyPairwiseMatrix& matrix, const CrMethod& method) {
  const std::size_t n = matrix.size();
  const double ri = random_index(n);
  const std::vector<double> crisp = defuzzified_matrix(matrix, method);
  if (n <= 2) return 0.0;
  const double lambda = principal_eigenvalue(crisp, n);
  const double ci = (lambda - static_cast<double>(n)) / static_cast<double>(n - 1);
  return ci / ri;
}

std::vector<Tfn> fuzzy_geometric_means(const FuzzyPairwiseMatrix& matrix) {
  const std::size_t n = matrix.size();
  std::vector<Tfn> r;
  r.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    Tfn product{1, 1, 1};
    for (std::size_t j = 0; j < n; ++j) product = tfn_mul(product, matrix.at(i, j));
    r.push_back(tfn_nth_root(product, static_cast<unsigned>(n)));
  }
  return r;
}

std::vector<Tfn> fuzzy_weights(std::span<const Tfn> r) {
  if (r.empty()) throw Error(ErrorCode::Input, "no geometric means to normalize");
  Tfn total{0, 0, 0};
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (!r[i].positive() || !r[i].ordered()) {
      throw Error(ErrorCode::Domain, "geometric means must be positive and ordered", "r[" + std::to_string(i) + "]");
    }
    total = tfn_add(total, r[i]);
  }
  std::vector<Tfn> w;
  w.reserve(r.size());
  for (const Tfn& ri : r) w.push_back({ri.l / total.u, ri.m / total.m, ri.u / total.l});
  return w;
}

std::vector<double> crisp_normalized_weights(std::span<const Tfn> w) {
  std::vector<double> crisp;
  crisp.reserve(w.size());
  double sum = 0.0;
  for (const Tfn& wi : w) {
    crisp.push_back(defuzzify_centroid(wi));
    sum += crisp.back();
  }
  if (!(sum > 0.0)) throw Error(ErrorCode::Degenerate, "fuzzy weights have no mass to normalize");
  for (double& c : crisp) c /= sum;
  return crisp;
}

std::vector<InconsistentTriad> inconsistent_triads(const FuzzyPairwiseMatrix& matrix, std::size_t count,
                                                   const CrMethod& method) {
  const std::size_t n = matrix.size();
  const std::vector<double> a = defuzzified_matrix(matrix, method);
  std::vector<InconsistentTriad> triads;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = j + 1; k < n; ++k) {
        const double ratio = a[i * n + j] * a[j * n + k] / a[i * n + k];
        triads.push_back({i, j, k, std::abs(std::log(ratio))});
      }
    }
  }
  std::stable_sort(triads.begin(), triads.end(),
                   [](const InconsistentTriad& x, const InconsistentTriad& y) { return x.deviation > y.deviation; });
  if (triads.size() > count) triads.resize(count);
  return triads;
}

FahpResult fahp_pipeline(std::span<const FuzzyPairwiseMatrix> matrices, std::span<const Direction> directions,
                         const FahpOptions& options) {
  FuzzyPairwiseMatrix aggregate = aggregate_expert_matrices(matrices);
  const std::size_t n = aggregate.size();
  if (directions.size() != n) throw Error(ErrorCode::Input, "direction count does not match criteria");

  std::vector<double> expert_crs;
  expert_crs.reserve(matrices.size());
  for (const auto& m : matrices) expert_crs.push_back(consistency_ratio(m, options.cr_method));
  const double cr = consistency_ratio(aggregate, options.cr_method);

  FahpResult result{
      .accepted = cr < options.cr_threshold,
      .cr = cr,
      .cr_threshold = options.cr_threshold,
      .expert_crs = std::move(expert_crs),
      .aggregate = aggregate,
      .triads = inconsistent_triads(aggregate, 3, options.cr_method),
      .weights = std::nullopt,
  };
  if (!result.accepted) return result;

  CriterionWeightVector weights;
  weights.criterion_ids = aggregate.criterion_ids();
  weights.directions.assign(directions.begin(), directions.end());
  weights.fuzzy_weights = fuzzy_weights(fuzzy_geometric_means(aggregate));
  weights.crisp_weights = crisp_normalized_weights(weights.fuzzy_weights);
  weights.cr = cr;
  result.weights = std::move(weights);
  return result;
}

}  // namespace mcdm
