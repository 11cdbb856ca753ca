#include "ecdkit/ecd.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "ecdkit/errors.hpp"
#include "ecdkit/numerics.hpp"
#include "ecdkit/random.hpp"
#include "parallel.hpp"

namespace ecdkit {

EdgeCounts edge_counts(const SpanningGraph& g, const PooledLabels& labels) {
  if (labels.total() != g.n_nodes()) {
    std::ostringstream msg;
    msg << "labels cover " << labels.total() << " points but the graph has " << g.n_nodes();
    throw SizeMismatch(msg.str());
  }
  EdgeCounts c;
  for (const Edge& e : g.edges()) {
    const bool ia = labels.in_a(e.i);
    const bool ja = labels.in_a(e.j);
    if (ia && ja)
      ++c.r1;
    else if (!ia && !ja)
      ++c.r2;
    else
      ++c.r12;
  }
  return c;
}

NullMoments null_moments(double edge_count, double degree_pairs, std::size_t n_a, std::size_t n_b) {
  if (n_a < 2 || n_b < 2) {
    std::ostringstream msg;
    msg << "null moments need n >= 2 and m >= 2 (got n = " << n_a << ", m = " << n_b << ")";
    throw TooFewPoints(msg.str());
  }
  using real = long double;
  const real n = static_cast<real>(n_a);
  const real m = static_cast<real>(n_b);
  const real N = n + m;
  const real G = edge_count;
  const real C = degree_pairs;

  const real pairs = N * (N - 1);
  const real triples = pairs * (N - 2);
  const real quads = triples * (N - 3);
  // Ordered pairs of distinct edges that share no node.
  const real disjoint = G * (G - 1) - 2 * C;

  const real mu1 = G * n * (n - 1) / pairs;
  const real mu2 = G * m * (m - 1) / pairs;
  const real s11 = mu1 * (1 - mu1) + 2 * C * n * (n - 1) * (n - 2) / triples +
                   disjoint * n * (n - 1) * (n - 2) * (n - 3) / quads;
  const real s22 = mu2 * (1 - mu2) + 2 * C * m * (m - 1) * (m - 2) / triples +
                   disjoint * m * (m - 1) * (m - 2) * (m - 3) / quads;
  const real s12 = disjoint * n * m * (n - 1) * (m - 1) / quads - mu1 * mu2;

  NullMoments out;
  out.mu1 = static_cast<double>(mu1);
  out.mu2 = static_cast<double>(mu2);
  out.sigma = {{{static_cast<double>(s11), static_cast<double>(s12)},
                {static_cast<double>(s12), static_cast<double>(s22)}}};
  return out;
}

NullMoments null_moments(const SpanningGraph& g, std::size_t n, std::size_t m) {
  if (n + m != g.n_nodes()) throw SizeMismatch("null_moments: n + m differs from graph size");
  return null_moments(static_cast<double>(g.edge_count()), degree_statistic(g), n, m);
}

double ecd_statistic(const EdgeCounts& counts, const NullMoments& moments) {
  const std::array<double, 2> deviation{static_cast<double>(counts.r1) - moments.mu1,
                                        static_cast<double>(counts.r2) - moments.mu2};
  return quadratic_form_2x2(deviation, moments.sigma);
}

EcdReport ecd_from_graph(const SpanningGraph& g, const PooledLabels& labels) {
  EcdReport r;
  r.counts = edge_counts(g, labels);
  r.degree_pairs = degree_statistic(g);
  r.edges = g.edge_count();
  r.moments = null_moments(static_cast<double>(r.edges), r.degree_pairs, labels.n(), labels.m());
  r.statistic = ecd_statistic(r.counts, r.moments);
  r.k = g.k();
  r.n = labels.n();
  r.m = labels.m();
  return r;
}

EcdReport ecd(const FeatureSet& a, const FeatureSet& b, int k, Metric metric, unsigned workers) {
  const PooledLabels labels(a.size(), b.size());
  const auto d = pairwise_distances(a, b, metric, workers);
  auto report = ecd_from_graph(kmst_neutral_ties(d, k), labels);
  report.metric = std::string(to_string(metric));
  return report;
}

EcdReport ecd(const DistanceMatrix& pooled, std::size_t split, int k) {
  if (split > pooled.size()) throw SizeMismatch("split index exceeds matrix size");
  const PooledLabels labels(split, pooled.size() - split);
  auto report = ecd_from_graph(kmst_neutral_ties(pooled, k), labels);
  report.metric = "precomputed";
  return report;
}

PermutationMoments permutation_moments(const SpanningGraph& g, std::size_t n, std::size_t m,
                                       std::size_t trials, std::uint64_t seed, unsigned workers) {
  if (trials < 2) throw InvalidTrials("permutation_moments needs at least 2 trials");
  const std::size_t total = n + m;
  if (total != g.n_nodes()) throw SizeMismatch("permutation_moments: n + m differs from graph size");

  std::vector<std::array<double, 2>> samples(trials);
  detail::parallel_for(trials, workers, [&](std::size_t t) {
    std::vector<std::uint8_t> in_a(total, 0);
    std::fill_n(in_a.begin(), n, 1);
    Rng rng(derive_seed(seed, {t}));
    for (std::size_t i = total - 1; i > 0; --i) std::swap(in_a[i], in_a[rng.below(i + 1)]);
    std::size_t r1 = 0, r2 = 0;
    for (const Edge& e : g.edges()) {
      if (in_a[e.i] && in_a[e.j])
        ++r1;
      else if (!in_a[e.i] && !in_a[e.j])
        ++r2;
    }
    samples[t] = {static_cast<double>(r1), static_cast<double>(r2)};
  });

  const double count = static_cast<double>(trials);
  double mean1 = 0.0, mean2 = 0.0;
  for (const auto& s : samples) {
    mean1 += s[0];
    mean2 += s[1];
  }
  mean1 /= count;
  mean2 /= count;

  // Second pass: central products, then a third for the spread of those products.
  double c11 = 0.0, c22 = 0.0, c12 = 0.0;
  for (const auto& s : samples) {
    const double d1 = s[0] - mean1, d2 = s[1] - mean2;
    c11 += d1 * d1;
    c22 += d2 * d2;
    c12 += d1 * d2;
  }
  const double pop11 = c11 / count, pop22 = c22 / count, pop12 = c12 / count;
  double v11 = 0.0, v22 = 0.0, v12 = 0.0;
  for (const auto& s : samples) {
    const double d1 = s[0] - mean1, d2 = s[1] - mean2;
    v11 += (d1 * d1 - pop11) * (d1 * d1 - pop11);
    v22 += (d2 * d2 - pop22) * (d2 * d2 - pop22);
    v12 += (d1 * d2 - pop12) * (d1 * d2 - pop12);
  }

  PermutationMoments out;
  out.trials = trials;
  out.moments.mu1 = mean1;
  out.moments.mu2 = mean2;
  out.moments.sigma = {{{c11 / (count - 1), c12 / (count - 1)}, {c12 / (count - 1), c22 / (count - 1)}}};
  out.std_errors = {std::sqrt(out.moments.sigma[0][0] / count),
                    std::sqrt(out.moments.sigma[1][1] / count),
                    std::sqrt(v11 / (count - 1) / count),
                    std::sqrt(v22 / (count - 1) / count),
                    std::sqrt(v12 / (count - 1) / count)};
  return out;
}

NullMoments exhaustive_permutation_moments(const SpanningGraph& g, std::size_t n, std::size_t m) {
  const std::size_t total = n + m;
  if (total != g.n_nodes()) throw SizeMismatch("exhaustive moments: n + m differs from graph size");
  if (total > 24) throw InvalidTrials("exhaustive enumeration is limited to 24 points");
  if (n == 0 || m == 0) throw TooFewPoints("exhaustive moments need both sets non-empty");

  long double s1 = 0, s2 = 0, s11 = 0, s22 = 0, s12 = 0, count = 0;
  const std::uint32_t limit = 1u << total;
  // Gosper's hack: every bitmask with exactly n set bits, in increasing order.
  for (std::uint32_t mask = (1u << n) - 1; mask < limit;) {
    long double r1 = 0, r2 = 0;
    for (const Edge& e : g.edges()) {
      const bool ia = (mask >> e.i) & 1u;
      const bool ja = (mask >> e.j) & 1u;
      if (ia && ja) r1 += 1;
      if (!ia && !ja) r2 += 1;
    }
    s1 += r1;
    s2 += r2;
    s11 += r1 * r1;
    s22 += r2 * r2;
    s12 += r1 * r2;
    count += 1;
    const std::uint32_t low = mask & (~mask + 1u);
    const std::uint32_t ripple = mask + low;
    mask = ripple | (((mask ^ ripple) >> 2) / low);
  }
  const long double e1 = s1 / count, e2 = s2 / count;
  NullMoments out;
  out.mu1 = static_cast<double>(e1);
  out.mu2 = static_cast<double>(e2);
  const double v11 = static_cast<double>(s11 / count - e1 * e1);
  const double v22 = static_cast<double>(s22 / count - e2 * e2);
  const double v12 = static_cast<double>(s12 / count - e1 * e2);
  out.sigma = {{{v11, v12}, {v12, v22}}};
  return out;
}

std::vector<std::size_t> sample_without_replacement(std::size_t population, std::size_t count,
                                                    std::uint64_t seed) {
  if (count > population) throw GeneratedSetTooSmall("cannot draw more items than the population holds");
  std::vector<std::size_t> pool(population);
  std::iota(pool.begin(), pool.end(), 0);
  Rng rng(seed);
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t j = i + static_cast<std::size_t>(rng.below(population - i));
    std::swap(pool[i], pool[j]);
  }
  pool.resize(count);
  std::sort(pool.begin(), pool.end());
  return pool;
}

namespace {

void check_rounds(int rounds) {
  if (rounds < 1) {
    std::ostringstream msg;
    msg << "subsample rounds must be at least 1 (got " << rounds << ")";
    throw InvalidTrials(msg.str());
  }
}

// Mean of per-round statistics in round order; intermediates from round 0.
EcdReport combine_rounds(std::vector<EcdReport> per_round, std::uint64_t seed) {
  EcdReport out = per_round.front();
  out.round_statistics.clear();
  double sum = 0.0;
  for (const auto& r : per_round) {
    out.round_statistics.push_back(r.statistic);
    sum += r.statistic;
  }
  out.statistic = sum / static_cast<double>(per_round.size());
  out.rounds = static_cast<int>(per_round.size());
  out.seed = seed;
  return out;
}

}  // namespace

EcdReport ecd_subsampled(const FeatureSet& a_large, const FeatureSet& b, int k, int rounds,
                         std::uint64_t seed, Metric metric, unsigned workers) {
  check_rounds(rounds);
  if (a_large.size() < b.size()) {
    std::ostringstream msg;
    msg << "generated set has " << a_large.size() << " points, fewer than the " << b.size()
        << " reference points";
    throw GeneratedSetTooSmall(msg.str());
  }
  std::vector<EcdReport> per_round(static_cast<std::size_t>(rounds));
  detail::parallel_for(per_round.size(), workers, [&](std::size_t r) {
    const auto rows = sample_without_replacement(a_large.size(), b.size(), derive_seed(seed, {r}));
    per_round[r] = ecd(a_large.select(rows), b, k, metric);
  });
  return combine_rounds(std::move(per_round), seed);
}

EcdReport ecd_subsampled(const DistanceMatrix& pooled, std::size_t split, int k, int rounds,
                         std::uint64_t seed, unsigned workers) {
  check_rounds(rounds);
  if (split > pooled.size()) throw SizeMismatch("split index exceeds matrix size");
  const std::size_t n_ref = pooled.size() - split;
  if (split < n_ref) {
    std::ostringstream msg;
    msg << "generated set has " << split << " points, fewer than the " << n_ref << " reference points";
    throw GeneratedSetTooSmall(msg.str());
  }
  std::vector<EcdReport> per_round(static_cast<std::size_t>(rounds));
  detail::parallel_for(per_round.size(), workers, [&](std::size_t r) {
    auto rows = sample_without_replacement(split, n_ref, derive_seed(seed, {r}));
    for (std::size_t j = split; j < pooled.size(); ++j) rows.push_back(j);
    per_round[r] = ecd(pooled.select(rows), n_ref, k);
  });
  return combine_rounds(std::move(per_round), seed);
}

}  // namespace ecdkit
