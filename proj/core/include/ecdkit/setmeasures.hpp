#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "ecdkit/metricspace.hpp"
#include "ecdkit/numerics.hpp"

namespace ecdkit {

/// Fitted mean and unbiased (n - 1) sample covariance.
struct GaussianSummary {
  std::vector<double> mean;
  SymMatrix covariance;
  std::size_t sample_count = 0;

  std::size_t dim() const noexcept { return mean.size(); }
};

struct MeasureResult {
  double coverage = 0.0;
  double mmd = 0.0;
  std::optional<double> frechet;  // absent for precomputed distances
};

/// Fraction of B that is the nearest neighbour of at least one A point.
/// `cross(i, j)` = d(a_i, b_j). Ties go to the smallest j.
double coverage(const Matrix& cross);
double coverage(const FeatureSet& a, const FeatureSet& b);

/// Mean over B of the distance to the nearest A point.
double mmd(const Matrix& cross);
double mmd(const FeatureSet& a, const FeatureSet& b);

/// Throws TooFewSamples for fewer than two rows.
GaussianSummary fit_gaussian(const FeatureSet& x);

/// Squared Frechet (2-Wasserstein) distance between two Gaussians:
/// |mu_p - mu_q|^2 + tr(S_p + S_q - 2 (S_p^1/2 S_q S_p^1/2)^1/2), clamped at 0.
double frechet_gaussian(const GaussianSummary& p, const GaussianSummary& q);

/// Coverage and MMD on the true Euclidean metric, plus the Frechet distance.
MeasureResult measure_sets(const FeatureSet& a, const FeatureSet& b);
/// Precomputed mode: coverage and MMD only.
MeasureResult measure_sets(const DistanceMatrix& pooled, std::size_t split);

}  // namespace ecdkit
