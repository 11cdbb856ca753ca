#pragma once

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "ecdkit/numerics.hpp"

namespace ecdkit {

enum class Metric { euclidean, squared_euclidean };

std::string_view to_string(Metric metric) noexcept;
/// Accepts "euclidean", "squared-euclidean" and "squared_euclidean".
Metric parse_metric(std::string_view name);

/// N x d matrix of finite feature values, one point per row.
class FeatureSet {
 public:
  /// Throws EmptySet for zero rows or columns and NonFiniteInput for NaN/Inf.
  explicit FeatureSet(Matrix points);
  /// Throws DimensionMismatch when rows differ in length.
  static FeatureSet from_rows(const std::vector<std::vector<double>>& rows);

  std::size_t size() const noexcept { return points_.rows(); }
  std::size_t dim() const noexcept { return points_.cols(); }
  std::span<const double> point(std::size_t i) const { return points_.row(i); }
  const Matrix& points() const noexcept { return points_; }

  /// Rows at `indices`, in the given order.
  FeatureSet select(std::span<const std::size_t> indices) const;
  /// Rows of `a` followed by rows of `b`.
  static FeatureSet stack(const FeatureSet& a, const FeatureSet& b);

 private:
  Matrix points_;
};

/// Symmetric, nonnegative, zero-diagonal N x N dissimilarities.
class DistanceMatrix {
 public:
  std::size_t size() const noexcept { return values_.rows(); }
  double operator()(std::size_t i, std::size_t j) const { return values_(i, j); }
  std::span<const double> row(std::size_t i) const { return values_.row(i); }
  const Matrix& values() const noexcept { return values_; }

  /// Principal submatrix on `indices` (in the given order).
  DistanceMatrix select(std::span<const std::size_t> indices) const;

 private:
  explicit DistanceMatrix(Matrix values) : values_(std::move(values)) {}
  Matrix values_;

  friend DistanceMatrix pairwise_distances(const FeatureSet&, const FeatureSet&, Metric, unsigned);
  friend DistanceMatrix pairwise_distances(const FeatureSet&, Metric, unsigned);
  friend DistanceMatrix validate_distance_matrix(const Matrix&, double);
};

/// Pooled index layout: rows [0, n) are set A, rows [n, n + m) are set B.
class PooledLabels {
 public:
  /// Throws SizeMismatch unless n >= 2 and m >= 2.
  PooledLabels(std::size_t n, std::size_t m);

  std::size_t n() const noexcept { return n_; }
  std::size_t m() const noexcept { return m_; }
  std::size_t total() const noexcept { return n_ + m_; }
  std::size_t split_index() const noexcept { return n_; }
  bool in_a(std::size_t node) const noexcept { return node < n_; }

 private:
  std::size_t n_;
  std::size_t m_;
};

inline constexpr double kDefaultIngestTolerance = 1e-9;

/// Distances over the pooled rows [a; b]. Each unordered pair is computed
/// once and mirrored; the result does not depend on `workers`.
DistanceMatrix pairwise_distances(const FeatureSet& a, const FeatureSet& b,
                                  Metric metric = Metric::euclidean, unsigned workers = 1);
DistanceMatrix pairwise_distances(const FeatureSet& pooled, Metric metric = Metric::euclidean,
                                  unsigned workers = 1);

/// Accepts `raw` if asymmetry, diagonal magnitude and negativity are all
/// within `tolerance`, then stores (raw + raw^T)/2 with a zero diagonal and
/// negatives clamped to zero.
DistanceMatrix validate_distance_matrix(const Matrix& raw,
                                        double tolerance = kDefaultIngestTolerance);

/// |a| x |b| matrix of d(a_i, b_j).
Matrix cross_distances(const FeatureSet& a, const FeatureSet& b, Metric metric = Metric::euclidean);
/// The A-by-B block of a pooled matrix split at `labels.split_index()`.
Matrix cross_block(const DistanceMatrix& pooled, std::size_t split);

double point_distance(std::span<const double> x, std::span<const double> y, Metric metric);

}  // namespace ecdkit
