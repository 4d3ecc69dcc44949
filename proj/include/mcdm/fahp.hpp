#pragma once

// Fuzzy AHP over expert pairwise matrices.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "mcdm/fuzzy.hpp"

namespace mcdm {

enum class Direction { Benefit, Cost };

// One expert statement: row criterion i compared with column criterion j.
// reciprocal == true means j dominates i with the given intensity.
struct Judgment {
  std::size_t row = 0;
  std::size_t col = 0;
  LinguisticLabel label = LinguisticLabel::Equal;
  bool reciprocal = false;
};

class FuzzyPairwiseMatrix {
 public:
  // Validates n >= 2, unit diagonal, positive ordered cells and reciprocity (1e-12).
  FuzzyPairwiseMatrix(std::vector<std::string> criterion_ids, std::vector<std::vector<Tfn>> cells);

  // All-(1,1,1) matrix.
  static FuzzyPairwiseMatrix identity(std::vector<std::string> criterion_ids);

  std::size_t size() const noexcept { return ids_.size(); }
  const std::vector<std::string>& criterion_ids() const noexcept { return ids_; }
  const Tfn& at(std::size_t i, std::size_t j) const { return cells_.at(i).at(j); }
  const std::vector<std::vector<Tfn>>& cells() const noexcept { return cells_; }

  // Reorders criteria: result(i, j) = this(perm[i], perm[j]).
  FuzzyPairwiseMatrix permuted(std::span<const std::size_t> perm) const;

  static constexpr double kReciprocityTolerance = 1e-12;

 private:
  std::vector<std::string> ids_;
  std::vector<std::vector<Tfn>> cells_;
};

// Upper-triangle judgments (any orientation accepted) -> reciprocal matrix.
// Throws IncompleteJudgment listing missing pairs, Conflict on duplicates.
FuzzyPairwiseMatrix build_matrix(std::vector<std::string> criterion_ids,
                                 std::span<const Judgment> judgments);
// Convenience overload with generated ids "c0", "c1", ...
FuzzyPairwiseMatrix build_matrix(std::size_t n, std::span<const Judgment> judgments);

// Cell-wise componentwise geometric mean across experts.
FuzzyPairwiseMatrix aggregate_expert_matrices(std::span<const FuzzyPairwiseMatrix> matrices);

struct CentroidDefuzz {};
struct AlphaCutDefuzz {
  double alpha = 0.5;
  double optimism = 0.5;
};
using CrMethod = std::variant<CentroidDefuzz, AlphaCutDefuzz>;

// Crisp view of a fuzzy cell under the chosen method.
double defuzzify(const Tfn& a, const CrMethod& method);
std::vector<double> defuzzified_matrix(const FuzzyPairwiseMatrix& matrix, const CrMethod& method);

// Saaty random index for orders 1..10.
double random_index(std::size_t n);

// Perron eigenvalue of a positive square matrix (row-major, order n) by power
// iteration. Throws Numeric when it does not converge.
double principal_eigenvalue(std::span<const double> a, std::size_t n, double tolerance = 1e-10,
                            int max_iterations = 10000);

// Consistency ratio of the defuzzified matrix; 0 for n <= 2.
double consistency_ratio(const FuzzyPairwiseMatrix& matrix, const CrMethod& method = CentroidDefuzz{});

// Row geometric means r_i.
std::vector<Tfn> fuzzy_geometric_means(const FuzzyPairwiseMatrix& matrix);
// w_i = (l_i / sum u, m_i / sum m, u_i / sum l).
std::vector<Tfn> fuzzy_weights(std::span<const Tfn> r);
// Centroids renormalized to sum to one.
std::vector<double> crisp_normalized_weights(std::span<const Tfn> w);

struct InconsistentTriad {
  std::size_t i = 0, j = 0, k = 0;
  // |ln(a_ij * a_jk / a_ik)| on the defuzzified matrix.
  double deviation = 0.0;
};

// The `count` triads (i < j < k) with the largest transitivity deviation.
std::vector<InconsistentTriad> inconsistent_triads(const FuzzyPairwiseMatrix& matrix,
                                                   std::size_t count = 3,
                                                   const CrMethod& method = CentroidDefuzz{});

struct CriterionWeightVector {
  std::vector<std::string> criterion_ids;
  std::vector<Direction> directions;
  std::vector<Tfn> fuzzy_weights;
  std::vector<double> crisp_weights;
  double cr = 0.0;
};

// Outcome of the weighting phase. A rejected run (CR at or above threshold)
// carries no weights; callers hand the triads back to the panel for revision.
struct FahpResult {
  bool accepted = false;
  double cr = 0.0;
  double cr_threshold = 0.1;
  std::vector<double> expert_crs;
  FuzzyPairwiseMatrix aggregate;
  std::vector<InconsistentTriad> triads;
  std::optional<CriterionWeightVector> weights;
};

struct FahpOptions {
  double cr_threshold = 0.1;
  CrMethod cr_method = CentroidDefuzz{};
};

FahpResult fahp_pipeline(std::span<const FuzzyPairwiseMatrix> matrices,
                         std::span<const Direction> directions, const FahpOptions& options = {});

}  // namespace mcdm
