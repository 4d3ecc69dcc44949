#pragma once

// Weight sensitivity and roadmap tiers.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mcdm/topsis.hpp"

namespace mcdm {

struct Scenario {
  // OAT scenarios name the perturbed criterion; Monte Carlo samples leave it empty.
  std::optional<std::size_t> criterion;
  double delta = 0.0;
  bool skipped = false;
  std::vector<double> weights;
  std::vector<double> cc;  // per alternative, input order
  std::vector<int> ranks;  // per alternative, input order
  std::size_t top = 0;     // index of the rank-1 alternative
  bool reversal = false;   // ranks differ from the base ranking
};

struct StabilityReport {
  RankingResult base;
  std::vector<double> base_weights;
  std::vector<Scenario> scenarios;
  std::size_t evaluated = 0;  // scenarios not skipped
  std::size_t rank_reversal_count = 0;
  // rank_frequency[a][r] = evaluated scenarios in which alternative a took rank r+1.
  std::vector<std::vector<std::size_t>> rank_frequency;
  // Per criterion: smallest tested |delta| that changes the top alternative (OAT only).
  std::vector<std::optional<double>> critical_delta;
};

// One-at-a-time: w_j += delta, then renormalize and rerank. Deltas pushing the weight
// outside (0, 1) are recorded as skipped.
StabilityReport oat_weight_perturbation(const DecisionMatrix& d, std::span<const double> weights,
                                        std::span<const double> deltas,
                                        const TopsisOptions& options = {});

// Flat-Dirichlet weight draws.
//
// The generator is std::mt19937_64 seeded with `seed`. Each weight component is
// drawn as -ln(u) with u = ((x >> 11) + 0.5) * 2^-53 from one 64-bit output x,
// components in criterion order, then the vector is divided by its sum.
StabilityReport monte_carlo_weights(const DecisionMatrix& d, std::size_t samples, std::uint64_t seed,
                                    std::span<const double> base_weights = {});

// Uniform simplex draws exactly as monte_carlo_weights consumes them.
std::vector<std::vector<double>> simplex_samples(std::size_t n, std::size_t samples, std::uint64_t seed);

struct RoadmapTiers {
  std::vector<std::vector<std::string>> tiers;  // short, medium, long, ...
  std::vector<int> band_sizes;
};

// Assigns alternatives to consecutive rank bands. Throws Input on a size
// mismatch and TieBoundary when exactly tied alternatives straddle a band edge.
RoadmapTiers roadmap_tiers(const RankingResult& ranking, std::span<const int> band_sizes);
RoadmapTiers roadmap_tiers(const RankingResult& ranking);

const char* tier_name(std::size_t index);

}  // namespace mcdm
