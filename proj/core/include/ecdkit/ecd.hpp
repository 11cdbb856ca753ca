#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ecdkit/metricspace.hpp"
#include "ecdkit/spanning.hpp"

namespace ecdkit {

inline constexpr int kDefaultSubsampleRounds = 10;


/// Edges of a pooled graph classified by the sets of their endpoints.
struct EdgeCounts {
  std::size_t r1 = 0;   // both endpoints in A
  std::size_t r2 = 0;   // both endpoints in B
  std::size_t r12 = 0;  // one in each

  std::size_t total() const noexcept { return r1 + r2 + r12; }
  friend bool operator==(const EdgeCounts&, const EdgeCounts&) = default;
};

/// Mean and covariance of (R1, R2) under random relabeling.
struct NullMoments {
  double mu1 = 0.0;
  double mu2 = 0.0;
  Covariance2 sigma{};
};

struct EcdReport {
  EdgeCounts counts;
  NullMoments moments;
  double degree_pairs = 0.0;  // C
  std::size_t edges = 0;      // |G|
  double statistic = 0.0;
  int k = kDefaultK;
  std::size_t n = 0;
  std::size_t m = 0;
  std::string metric;  // "euclidean", "squared-euclidean" or "precomputed"
  std::optional<std::uint64_t> seed;
  std::optional<int> rounds;
  /// Per-round statistics when subsampled; `statistic` is their mean and
  /// counts/moments describe round 0.
  std::vector<double> round_statistics;
};

EdgeCounts edge_counts(const SpanningGraph& g, const PooledLabels& labels);

/// Closed-form permutation-null moments of (R1, R2) for a graph with |G|
/// edges and C node-sharing edge pairs. Throws TooFewPoints unless n, m >= 2.
NullMoments null_moments(const SpanningGraph& g, std::size_t n, std::size_t m);
NullMoments null_moments(double edge_count, double degree_pairs, std::size_t n, std::size_t m);

/// (R - mu)^T Sigma^{-1} (R - mu). Throws SingularCovariance.
double ecd_statistic(const EdgeCounts& counts, const NullMoments& moments);

EcdReport ecd_from_graph(const SpanningGraph& g, const PooledLabels& labels);
EcdReport ecd(const FeatureSet& a, const FeatureSet& b, int k = kDefaultK,
              Metric metric = Metric::euclidean, unsigned workers = 1);
/// Precomputed mode: rows [0, split) of `pooled` are A.
EcdReport ecd(const DistanceMatrix& pooled, std::size_t split, int k = kDefaultK);

struct PermutationMoments {
  NullMoments moments;
  /// Standard errors of mu1, mu2, sigma11, sigma22, sigma12.
  std::array<double, 5> std_errors{};
  std::size_t trials = 0;
};

/// Monte-Carlo null: each trial t shuffles the labels with a generator
/// seeded by derive_seed(seed, {t}), so results ignore execution order.
/// Covariance uses denominator trials - 1. Throws InvalidTrials if trials < 2.
PermutationMoments permutation_moments(const SpanningGraph& g, std::size_t n, std::size_t m,
                                       std::size_t trials, std::uint64_t seed,
                                       unsigned workers = 1);

/// Exact null moments by visiting every n-subset of the nodes (population
/// covariance). Limited to N <= 24.
NullMoments exhaustive_permutation_moments(const SpanningGraph& g, std::size_t n, std::size_t m);

/// Mean ECD over `rounds` draws of |b| rows from `a_large` without
/// replacement. Round r uses derive_seed(seed, {r}); drawn rows keep their
/// original order. Throws GeneratedSetTooSmall if |a_large| < |b|.
EcdReport ecd_subsampled(const FeatureSet& a_large, const FeatureSet& b, int k, int rounds,
                         std::uint64_t seed, Metric metric = Metric::euclidean,
                         unsigned workers = 1);
/// Precomputed mode: A = rows [0, split), B = the rest.
EcdReport ecd_subsampled(const DistanceMatrix& pooled, std::size_t split, int k, int rounds,
                         std::uint64_t seed, unsigned workers = 1);

/// Sorted |count|-subset of [0, population) by partial Fisher-Yates.
std::vector<std::size_t> sample_without_replacement(std::size_t population, std::size_t count,
                                                    std::uint64_t seed);

}  // namespace ecdkit
