#include "mcdm/sensitivity.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "mcdm/error.hpp"
#include "mcdm/kernels.hpp"

namespace mcdm {

namespace {

std::vector<double> normalized(std::span<const double> w) {
  double sum = 0.0;
  for (double x : w) sum += x;
  if (!(sum > 0.0)) throw Error(ErrorCode::Input, "weights must have positive total");
  std::vector<double> out(w.begin(), w.end());
  for (double& x : out) x /= sum;
  return out;
}

std::vector<int> ranks_of(const RankingResult& r) {
  std::vector<int> out;
  out.reserve(r.alternatives.size());
  for (const auto& a : r.alternatives) out.push_back(a.rank);
  return out;
}

// Stable descending order of cc, matching closeness_and_rank.
std::vector<int> ranks_from_cc(std::span<const double> cc) {
  std::vector<std::size_t> idx(cc.size());
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return cc[a] > cc[b]; });
  std::vector<int> ranks(cc.size());
  for (std::size_t r = 0; r < idx.size(); ++r) ranks[idx[r]] = static_cast<int>(r + 1);
  return ranks;
}

std::size_t top_of(std::span<const int> ranks) {
  return static_cast<std::size_t>(std::find(ranks.begin(), ranks.end(), 1) - ranks.begin());
}

void tally(StabilityReport& report) {
  const std::size_t m = report.base.alternatives.size();
  report.rank_frequency.assign(m, std::vector<std::size_t>(m, 0));
  report.evaluated = 0;
  report.rank_reversal_count = 0;
  for (const Scenario& s : report.scenarios) {
    if (s.skipped) continue;
    ++report.evaluated;
    if (s.reversal) ++report.rank_reversal_count;
    for (std::size_t a = 0; a < m; ++a) ++report.rank_frequency[a][static_cast<std::size_t>(s.ranks[a] - 1)];
  }
}

}  // namespace

StabilityReport oat_weight_perturbation(const DecisionMatrix& d, std::span<const double> weights,
                                        std::span<const double> deltas, const TopsisOptions& options) {
  const std::size_t n = d.criterion_count();
  if (weights.size() != n) throw Error(ErrorCode::Input, "weight count does not match criteria");

  StabilityReport report;
  report.base_weights = normalized(weights);
  report.base = topsis_pipeline(d, report.base_weights, options);
  const std::vector<int> base_ranks = ranks_of(report.base);
  const std::size_t base_top = top_of(base_ranks);
  report.critical_delta.assign(n, std::nullopt);

  for (std::size_t j = 0; j < n; ++j) {
    for (double delta : deltas) {
      Scenario s;
      s.criterion = j;
      s.delta = delta;
      if (delta == 0.0) {
        // Identity scenario: reuse the base vector so the result is exact.
        s.weights = report.base_weights;
      } else {
        std::vector<double> w = report.base_weights;
        w[j] += delta;
        if (!(w[j] > 0.0) || !(w[j] < 1.0)) {
          s.skipped = true;
          s.weights = std::move(w);
          report.scenarios.push_back(std::move(s));
          continue;
        }
        s.weights = normalized(w);
      }
      const RankingResult r = topsis_pipeline(d, s.weights, options);
      for (const auto& a : r.alternatives) s.cc.push_back(a.cc);
      s.ranks = ranks_of(r);
      s.top = top_of(s.ranks);
      s.reversal = s.ranks != base_ranks;
      if (s.top != base_top) {
        const double mag = std::abs(delta);
        if (!report.critical_delta[j] || mag < *report.critical_delta[j]) report.critical_delta[j] = mag;
      }
      report.scenarios.push_back(std::move(s));
    }
  }
  tally(report);
  return report;
}

std::vector<std::vector<double>> simplex_samples(std::size_t n, std::size_t samples, std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  std::vector<std::vector<double>> out;
  out.reserve(samples);
  constexpr double kTwoPowMinus53 = 1.0 / 9007199254740992.0;
  for (std::size_t s = 0; s < samples; ++s) {
    std::vector<double> w(n);
    double sum = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      const std::uint64_t x = gen();
      const double u = (static_cast<double>(x >> 11) + 0.5) * kTwoPowMinus53;
      w[j] = -std::log(u);
      sum += w[j];
    }
    for (double& x : w) x /= sum;
    out.push_back(std::move(w));
  }
  return out;
}

StabilityReport monte_carlo_weights(const DecisionMatrix& d, std::size_t samples, std::uint64_t seed,
                                    std::span<const double> base_weights) {
  if (samples < 1) throw Error(ErrorCode::Input, "at least one Monte Carlo sample is required");
  const std::size_t n = d.criterion_count();
  const std::size_t m = d.alternative_count();

  StabilityReport report;
  report.base_weights = base_weights.empty() ? std::vector<double>(n, 1.0 / static_cast<double>(n))
                                             : normalized(base_weights);
  if (report.base_weights.size() != n) throw Error(ErrorCode::Input, "weight count does not match criteria");
  report.base = topsis_pipeline(d, report.base_weights);
  const std::vector<int> base_ranks = ranks_of(report.base);
  report.critical_delta.assign(n, std::nullopt);

  // Positive weights scale each column monotonically, so the weighted ideals are
  // the weights times the normalized column extremes.
  const Grid r = normalize_matrix(d);
  std::vector<double> best(n), worst(n);
  for (std::size_t j = 0; j < n; ++j) {
    double lo = r(0, j), hi = r(0, j);
    for (std::size_t i = 1; i < m; ++i) {
      lo = std::min(lo, r(i, j));
      hi = std::max(hi, r(i, j));
    }
    const bool benefit = d.criteria()[j].direction == Direction::Benefit;
    best[j] = benefit ? hi : lo;
    worst[j] = benefit ? lo : hi;
  }

  const auto draws = simplex_samples(n, samples, seed);
  const auto& k = kernels::active();
  constexpr std::size_t kChunk = 1024;
  std::vector<double> w_block;
  std::vector<double> cc_block;
  report.scenarios.reserve(samples);
  for (std::size_t start = 0; start < samples; start += kChunk) {
    const std::size_t count = std::min(kChunk, samples - start);
    w_block.assign(n * count, 0.0);
    cc_block.assign(m * count, 0.0);
    for (std::size_t s = 0; s < count; ++s) {
      for (std::size_t j = 0; j < n; ++j) w_block[j * count + s] = draws[start + s][j];
    }
    k.closeness_batch(r.data.data(), m, n, best.data(), worst.data(), w_block.data(), count, cc_block.data());
    for (std::size_t s = 0; s < count; ++s) {
      Scenario sc;
      sc.weights = draws[start + s];
      sc.cc.resize(m);
      for (std::size_t i = 0; i < m; ++i) sc.cc[i] = cc_block[i * count + s];
      sc.ranks = ranks_from_cc(sc.cc);
      sc.top = top_of(sc.ranks);
      sc.reversal = sc.ranks != base_ranks;
      report.scenarios.push_back(std::move(sc));
    }
  }
  tally(report);
  return report;
}

const char* tier_name(std::size_t index) {
  static constexpr const char* kNames[] = {"short_term", "medium_term", "long_term"};
  return index < 3 ? kNames[index] : "later";
}

RoadmapTiers roadmap_tiers(const RankingResult& ranking, std::span<const int> band_sizes) {
  const std::size_t m = ranking.alternatives.size();
  long long total = 0;
  for (int b : band_sizes) {
    if (b <= 0) throw Error(ErrorCode::Input, "band sizes must be positive");
    total += b;
  }
  if (band_sizes.empty() || total != static_cast<long long>(m)) {
    throw Error(ErrorCode::Input, "band sizes sum to " + std::to_string(total) + " but there are " +
                                      std::to_string(m) + " alternatives");
  }
  const std::vector<std::size_t> order = ranking.order();
  RoadmapTiers tiers;
  tiers.band_sizes.assign(band_sizes.begin(), band_sizes.end());
  std::size_t pos = 0;
  for (std::size_t t = 0; t < band_sizes.size(); ++t) {
    std::vector<std::string> tier;
    for (int k = 0; k < band_sizes[t]; ++k, ++pos) tier.push_back(ranking.alternatives[order[pos]].alternative);
    if (pos < m) {
      const auto& last = ranking.alternatives[order[pos - 1]];
      const auto& next = ranking.alternatives[order[pos]];
      if (last.cc == next.cc) {
        throw Error(ErrorCode::TieBoundary, "'" + last.alternative + "' and '" + next.alternative +
                                                "' are tied across a tier boundary; adjust band sizes");
      }
    }
    tiers.tiers.push_back(std::move(tier));
  }
  return tiers;
}

RoadmapTiers roadmap_tiers(const RankingResult& ranking) {
  static constexpr int kDefault[] = {1, 2, 2};
  if (ranking.alternatives.size() == 5) return roadmap_tiers(ranking, kDefault);
  // Proportional split for other panel sizes: a fifth, two fifths, the rest.
  const int m = static_cast<int>(ranking.alternatives.size());
  if (m < 3) {
    const int single[] = {m};
    return roadmap_tiers(ranking, single);
  }
  const int a = std::max(1, m / 5);
  const int b = std::max(1, (2 * m) / 5);
  const int bands[] = {a, b, m - a - b};
  return roadmap_tiers(ranking, bands);
}

}  // namespace mcdm
