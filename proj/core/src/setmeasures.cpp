#include "ecdkit/setmeasures.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "ecdkit/errors.hpp"

namespace ecdkit {

namespace {

void require_nonempty(const Matrix& cross) {
  if (cross.rows() == 0 || cross.cols() == 0) throw EmptySet("both sets must contain at least one point");
}

}  // namespace

double coverage(const Matrix& cross) {
  require_nonempty(cross);
  std::vector<bool> marked(cross.cols(), false);
  for (std::size_t i = 0; i < cross.rows(); ++i) {
    auto row = cross.row(i);
    // min_element returns the first minimum, i.e. the smallest index on ties.
    marked[static_cast<std::size_t>(std::min_element(row.begin(), row.end()) - row.begin())] = true;
  }
  return static_cast<double>(std::count(marked.begin(), marked.end(), true)) /
         static_cast<double>(cross.cols());
}

double coverage(const FeatureSet& a, const FeatureSet& b) {
  return coverage(cross_distances(a, b, Metric::euclidean));
}

double mmd(const Matrix& cross) {
  require_nonempty(cross);
  double sum = 0.0;
  for (std::size_t j = 0; j < cross.cols(); ++j) {
    double best = cross(0, j);
    for (std::size_t i = 1; i < cross.rows(); ++i) best = std::min(best, cross(i, j));
    sum += best;
  }
  return sum / static_cast<double>(cross.cols());
}

double mmd(const FeatureSet& a, const FeatureSet& b) {
  return mmd(cross_distances(a, b, Metric::euclidean));
}

GaussianSummary fit_gaussian(const FeatureSet& x) {
  const std::size_t n = x.size();
  const std::size_t d = x.dim();
  if (n < 2) throw TooFewSamples("fitting a covariance needs at least two samples");

  std::vector<double> mean(d, 0.0);
  for (std::size_t r = 0; r < n; ++r) {
    auto p = x.point(r);
    for (std::size_t c = 0; c < d; ++c) mean[c] += p[c];
  }
  for (double& v : mean) v /= static_cast<double>(n);

  Matrix cov(d, d);
  std::vector<double> centered(d);
  for (std::size_t r = 0; r < n; ++r) {
    auto p = x.point(r);
    for (std::size_t c = 0; c < d; ++c) centered[c] = p[c] - mean[c];
    for (std::size_t i = 0; i < d; ++i) {
      const double ci = centered[i];
      for (std::size_t j = i; j < d; ++j) cov(i, j) += ci * centered[j];
    }
  }
  const double denom = static_cast<double>(n - 1);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i; j < d; ++j) {
      cov(i, j) /= denom;
      cov(j, i) = cov(i, j);
    }
  return {std::move(mean), SymMatrix(std::move(cov)), n};
}

double frechet_gaussian(const GaussianSummary& p, const GaussianSummary& q) {
  if (p.dim() != q.dim() || p.covariance.dim() != p.dim() || q.covariance.dim() != q.dim()) {
    std::ostringstream msg;
    msg << "Gaussian summaries have different dimensions (" << p.dim() << " vs " << q.dim() << ")";
    throw DimensionMismatch(msg.str());
  }
  double mean_term = 0.0;
  for (std::size_t i = 0; i < p.dim(); ++i) {
    const double diff = p.mean[i] - q.mean[i];
    mean_term += diff * diff;
  }

  const SymMatrix root_p = psd_sqrt(p.covariance);
  psd_sqrt(q.covariance);  // PSD check on the second argument
  const SymMatrix inner =
      SymMatrix::symmetrized(root_p.matrix() * q.covariance.matrix() * root_p.matrix());
  double cross_trace = 0.0;
  for (double l : sym_eig(inner).values) cross_trace += std::sqrt(std::max(l, 0.0));

  const double value = mean_term + p.covariance.trace() + q.covariance.trace() - 2.0 * cross_trace;
  return std::max(value, 0.0);
}

MeasureResult measure_sets(const FeatureSet& a, const FeatureSet& b) {
  const Matrix cross = cross_distances(a, b, Metric::euclidean);
  MeasureResult r;
  r.coverage = coverage(cross);
  r.mmd = mmd(cross);
  r.frechet = frechet_gaussian(fit_gaussian(a), fit_gaussian(b));
  return r;
}

MeasureResult measure_sets(const DistanceMatrix& pooled, std::size_t split) {
  const Matrix cross = cross_block(pooled, split);
  MeasureResult r;
  r.coverage = coverage(cross);
  r.mmd = mmd(cross);
  return r;
}

}  // namespace ecdkit
