#include "ecdkit/metricspace.hpp"

#include <cmath>
#include <sstream>

#include "ecdkit/errors.hpp"
#include "parallel.hpp"

namespace ecdkit {

std::string_view to_string(Metric metric) noexcept {
  switch (metric) {
    case Metric::euclidean: return "euclidean";
    case Metric::squared_euclidean: return "squared-euclidean";
  }
  return "unknown";
}

Metric parse_metric(std::string_view name) {
  if (name == "euclidean") return Metric::euclidean;
  if (name == "squared-euclidean" || name == "squared_euclidean") return Metric::squared_euclidean;
  throw InputError("unknown metric '" + std::string(name) + "'");
}

FeatureSet::FeatureSet(Matrix points) : points_(std::move(points)) {
  if (points_.rows() == 0 || points_.cols() == 0)
    throw EmptySet("feature set needs at least one point and one dimension");
  for (std::size_t r = 0; r < points_.rows(); ++r)
    for (double v : points_.row(r))
      if (!std::isfinite(v)) {
        std::ostringstream msg;
        msg << "non-finite feature value in row " << r;
        throw NonFiniteInput(msg.str());
      }
}

FeatureSet FeatureSet::from_rows(const std::vector<std::vector<double>>& rows) {
  if (rows.empty() || rows.front().empty())
    throw EmptySet("feature set needs at least one point and one dimension");
  const std::size_t dim = rows.front().size();
  Matrix m(rows.size(), dim);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != dim) {
      std::ostringstream msg;
      msg << "row " << r << " has " << rows[r].size() << " values, expected " << dim;
      throw DimensionMismatch(msg.str());
    }
    std::copy(rows[r].begin(), rows[r].end(), m.row(r).begin());
  }
  return FeatureSet(std::move(m));
}

FeatureSet FeatureSet::select(std::span<const std::size_t> indices) const {
  Matrix m(indices.size(), dim());
  for (std::size_t r = 0; r < indices.size(); ++r) {
    if (indices[r] >= size()) throw SizeMismatch("select: index out of range");
    auto src = point(indices[r]);
    std::copy(src.begin(), src.end(), m.row(r).begin());
  }
  return FeatureSet(std::move(m));
}

FeatureSet FeatureSet::stack(const FeatureSet& a, const FeatureSet& b) {
  if (a.dim() != b.dim()) {
    std::ostringstream msg;
    msg << "feature dimensions differ: " << a.dim() << " vs " << b.dim();
    throw DimensionMismatch(msg.str());
  }
  Matrix m(a.size() + b.size(), a.dim());
  for (std::size_t r = 0; r < a.size(); ++r)
    std::copy(a.point(r).begin(), a.point(r).end(), m.row(r).begin());
  for (std::size_t r = 0; r < b.size(); ++r)
    std::copy(b.point(r).begin(), b.point(r).end(), m.row(a.size() + r).begin());
  return FeatureSet(std::move(m));
}

DistanceMatrix DistanceMatrix::select(std::span<const std::size_t> indices) const {
  Matrix m(indices.size(), indices.size());
  for (std::size_t r = 0; r < indices.size(); ++r) {
    if (indices[r] >= size()) throw SizeMismatch("select: index out of range");
    for (std::size_t c = 0; c < indices.size(); ++c) m(r, c) = values_(indices[r], indices[c]);
  }
  return DistanceMatrix(std::move(m));
}

PooledLabels::PooledLabels(std::size_t n, std::size_t m) : n_(n), m_(m) {
  if (n < 2 || m < 2) {
    std::ostringstream msg;
    msg << "each set needs at least 2 points (got n = " << n << ", m = " << m << ")";
    throw SizeMismatch(msg.str());
  }
}

double point_distance(std::span<const double> x, std::span<const double> y, Metric metric) {
  double sum = 0.0;
  for (std::size_t k = 0; k < x.size(); ++k) {
    const double diff = x[k] - y[k];
    sum += diff * diff;
  }
  return metric == Metric::euclidean ? std::sqrt(sum) : sum;
}

DistanceMatrix pairwise_distances(const FeatureSet& pooled, Metric metric, unsigned workers) {
  const std::size_t n = pooled.size();
  Matrix d(n, n);
  // Row i owns entries (i, j > i); mirroring happens after all rows finish.
  detail::parallel_for(n, workers, [&](std::size_t i) {
    auto xi = pooled.point(i);
    auto out = d.row(i);
    for (std::size_t j = i + 1; j < n; ++j) out[j] = point_distance(xi, pooled.point(j), metric);
  });
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) d(j, i) = d(i, j);
  for (double v : d.data())
    if (!std::isfinite(v)) throw NonFiniteInput("pairwise distance overflowed to a non-finite value");
  return DistanceMatrix(std::move(d));
}

DistanceMatrix pairwise_distances(const FeatureSet& a, const FeatureSet& b, Metric metric,
                                  unsigned workers) {
  return pairwise_distances(FeatureSet::stack(a, b), metric, workers);
}

DistanceMatrix validate_distance_matrix(const Matrix& raw, double tolerance) {
  const std::size_t n = raw.rows();
  if (n != raw.cols()) {
    std::ostringstream msg;
    msg << "distance matrix is " << raw.rows() << "x" << raw.cols() << ", not square";
    throw NonSquareError(msg.str());
  }
  for (double v : raw.data())
    if (!std::isfinite(v)) throw NonFiniteInput("distance matrix has non-finite entries");

  double worst_asym = 0.0, worst_diag = 0.0, most_negative = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    worst_diag = std::max(worst_diag, std::abs(raw(i, i)));
    for (std::size_t j = 0; j < n; ++j) {
      most_negative = std::min(most_negative, raw(i, j));
      if (j > i) worst_asym = std::max(worst_asym, std::abs(raw(i, j) - raw(j, i)));
    }
  }
  if (worst_asym > tolerance) {
    std::ostringstream msg;
    msg << "distance matrix asymmetry " << worst_asym << " exceeds tolerance " << tolerance;
    throw AsymmetryError(msg.str());
  }
  if (worst_diag > tolerance) {
    std::ostringstream msg;
    msg << "distance matrix diagonal entry " << worst_diag << " exceeds tolerance " << tolerance;
    throw NonzeroDiagonalError(msg.str());
  }
  if (most_negative < -tolerance) {
    std::ostringstream msg;
    msg << "distance matrix entry " << most_negative << " is below -" << tolerance;
    throw NegativeDistanceError(msg.str());
  }

  Matrix d(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const double v = std::max(0.5 * (raw(i, j) + raw(j, i)), 0.0);
      d(i, j) = v;
      d(j, i) = v;
    }
  return DistanceMatrix(std::move(d));
}

Matrix cross_distances(const FeatureSet& a, const FeatureSet& b, Metric metric) {
  if (a.dim() != b.dim()) {
    std::ostringstream msg;
    msg << "feature dimensions differ: " << a.dim() << " vs " << b.dim();
    throw DimensionMismatch(msg.str());
  }
  Matrix out(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out(i, j) = point_distance(a.point(i), b.point(j), metric);
  return out;
}

Matrix cross_block(const DistanceMatrix& pooled, std::size_t split) {
  if (split == 0 || split >= pooled.size())
    throw SizeMismatch("split index must leave both sets non-empty");
  const std::size_t m = pooled.size() - split;
  Matrix out(split, m);
  for (std::size_t i = 0; i < split; ++i)
    for (std::size_t j = 0; j < m; ++j) out(i, j) = pooled(i, split + j);
  return out;
}

}  // namespace ecdkit
