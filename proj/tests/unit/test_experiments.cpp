#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

#include "ecdkit/ecd.hpp"
#include "ecdkit/errors.hpp"
#include "ecdkit/experiments.hpp"

using namespace ecdkit;

TEST(Sample, BinaryValuesArePlusMinusOne) {
  const auto x = sample({DistributionKind::binary, 50, 1.0}, 200, 3);
  std::size_t plus = 0;
  for (std::size_t r = 0; r < x.size(); ++r)
    for (double v : x.point(r)) {
      ASSERT_TRUE(v == 1.0 || v == -1.0);
      plus += v == 1.0;
    }
  EXPECT_NEAR(static_cast<double>(plus) / 10000.0, 0.5, 0.02);
}

TEST(Sample, UniformWithinUnitVarianceBounds) {
  const auto x = sample({DistributionKind::uniform, 20, 1.0}, 500, 4);
  const double bound = std::sqrt(3.0);
  double sum_sq = 0.0;
  for (std::size_t r = 0; r < x.size(); ++r)
    for (double v : x.point(r)) {
      ASSERT_GE(v, -bound);
      ASSERT_LE(v, bound);
      sum_sq += v * v;
    }
  EXPECT_NEAR(sum_sq / 10000.0, 1.0, 0.05);
}

TEST(Sample, GaussianMomentsPerCoordinate) {
  for (double variance : {1.0, 0.6}) {
    const std::size_t dim = 1000, count = 2000;
    const auto x = sample({DistributionKind::gaussian, dim, variance}, count, 17);
    std::vector<double> mean(dim, 0.0), var(dim, 0.0);
    for (std::size_t r = 0; r < count; ++r)
      for (std::size_t c = 0; c < dim; ++c) mean[c] += x.point(r)[c] / count;
    for (std::size_t r = 0; r < count; ++r)
      for (std::size_t c = 0; c < dim; ++c) {
        const double d = x.point(r)[c] - mean[c];
        var[c] += d * d / (count - 1);
      }
    // Every coordinate within the CLT/chi-square bands (~5 standard errors).
    for (std::size_t c = 0; c < dim; ++c) {
      EXPECT_LT(std::abs(mean[c]), 0.08 * std::sqrt(variance) * 1.5);
      EXPECT_LT(std::abs(var[c] - variance), 0.1 * variance * 1.6);
    }
    double avg_mean = 0.0, avg_var = 0.0;
    for (std::size_t c = 0; c < dim; ++c) {
      avg_mean += mean[c] / dim;
      avg_var += var[c] / dim;
    }
    EXPECT_LT(std::abs(avg_mean), 0.08);
    EXPECT_LT(std::abs(avg_var - variance), 0.1);
  }
}

TEST(Sample, DeterministicPerSeed) {
  const DistributionSpec spec{DistributionKind::gaussian, 4, 2.0};
  EXPECT_EQ(sample(spec, 10, 5).points(), sample(spec, 10, 5).points());
  EXPECT_NE(sample(spec, 10, 5).points(), sample(spec, 10, 6).points());
}

TEST(Sample, InvalidSpecs) {
  EXPECT_THROW(sample({DistributionKind::gaussian, 2, 1.0}, 0, 1), InvalidSpec);
  EXPECT_THROW(sample({DistributionKind::gaussian, 0, 1.0}, 3, 1), InvalidSpec);
  EXPECT_THROW(sample({DistributionKind::gaussian, 2, -1.0}, 3, 1), InvalidSpec);
  EXPECT_THROW(sample({DistributionKind::uniform, 2, 2.0}, 3, 1), InvalidSpec);
  EXPECT_THROW(parse_distribution("cauchy"), InvalidSpec);
}

TEST(VarianceSweep, DefaultGrid) {
  const auto grid = VarianceSweepConfig::default_variance_grid();
  ASSERT_EQ(grid.size(), 21u);
  EXPECT_EQ(grid.front(), 0.5);
  EXPECT_EQ(grid.back(), 1.5);
  EXPECT_EQ(grid[10], 1.0);
  const VarianceSweepConfig defaults;
  EXPECT_EQ(defaults.dims, (std::vector<std::size_t>{1, 10, 100, 1000}));
  EXPECT_EQ(defaults.n, 500u);
  EXPECT_EQ(defaults.k, 10);
}

TEST(VarianceSweep, RowLayout) {
  VarianceSweepConfig cfg;
  cfg.dims = {1, 3};
  cfg.variances = {0.5, 1.0, 1.5};
  cfg.n = 30;
  cfg.k = 3;
  cfg.seed = 7;
  const auto table = variance_sweep(cfg);
  ASSERT_EQ(table.size(), 2u * 3u * 3u);
  EXPECT_EQ(table[0].measure, "ECD");
  EXPECT_EQ(table[1].measure, "COV");
  EXPECT_EQ(table[2].measure, "MMD");
  EXPECT_EQ(table[3].variance_a, 1.0);
  EXPECT_EQ(table[9].dim, 3u);
  for (const auto& r : table) {
    EXPECT_EQ(r.experiment_id, kVarianceSweepId);
    EXPECT_EQ(r.n, 30u);
    EXPECT_EQ(r.k, 3);
    EXPECT_TRUE(std::isfinite(r.value));
    if (r.measure == "COV") {
      EXPECT_GT(r.value, 0.0);
      EXPECT_LE(r.value, 1.0);
    }
  }
}

TEST(DistributionGrid, UpperTriangleOfPairs) {
  DistributionGridConfig cfg;
  cfg.dim = 5;
  cfg.n = 40;
  cfg.k = 3;
  cfg.seed = 1;
  const auto table = distribution_grid(cfg);
  ASSERT_EQ(table.size(), 12u);
  const std::vector<std::pair<std::string, std::string>> pairs{
      {"gaussian", "gaussian"}, {"gaussian", "uniform"}, {"gaussian", "binary"},
      {"uniform", "uniform"},   {"uniform", "binary"},   {"binary", "binary"}};
  for (std::size_t c = 0; c < 6; ++c) {
    EXPECT_EQ(table[2 * c].measure, "ECD");
    EXPECT_EQ(table[2 * c + 1].measure, "FID");
    EXPECT_EQ(table[2 * c].kind_a, pairs[c].first);
    EXPECT_EQ(table[2 * c].kind_b, pairs[c].second);
  }
  const DistributionGridConfig defaults;
  EXPECT_EQ(defaults.dim, 100u);
  EXPECT_EQ(defaults.n, 1000u);
}

TEST(Experiments, IdenticalAcrossWorkerCounts) {
  VarianceSweepConfig cfg;
  cfg.dims = {2, 5};
  cfg.variances = {0.7, 1.0, 1.3};
  cfg.n = 40;
  cfg.k = 4;
  cfg.seed = 99;
  cfg.workers = 1;
  const auto serial = table_to_csv(variance_sweep(cfg));
  cfg.workers = 4;
  EXPECT_EQ(serial, table_to_csv(variance_sweep(cfg)));
  EXPECT_EQ(serial, table_to_csv(variance_sweep(cfg)));
}

TEST(Experiments, SeedIsolationBetweenCells) {
  DistributionGridConfig cfg;
  cfg.dim = 4;
  cfg.n = 30;
  cfg.k = 2;
  cfg.seed = 3;
  auto cells = distribution_grid_cells(cfg);
  const auto before = run_cells(cells);
  cells[2].seed ^= 0xdeadbeef;
  const auto after = run_cells(cells);
  for (std::size_t i = 0; i < before.size(); ++i) {
    if (i / 2 == 2)
      EXPECT_NE(before[i].value, after[i].value);
    else
      EXPECT_EQ(before[i], after[i]);
  }
  // A different base seed changes every cell seed.
  const auto original = distribution_grid_cells(cfg);
  cfg.seed = 4;
  const auto reseeded = distribution_grid_cells(cfg);
  for (std::size_t i = 0; i < original.size(); ++i) EXPECT_NE(original[i].seed, reseeded[i].seed);
}

TEST(Experiments, SmallPoolMatchesExhaustiveNull) {
  // N = 8 through the sampling + distance + graph path.
  const auto a = sample({DistributionKind::gaussian, 3, 1.0}, 4, 1);
  const auto b = sample({DistributionKind::uniform, 3, 1.0}, 4, 2);
  const auto g = kmst_neutral_ties(pairwise_distances(a, b), 2);
  const auto analytic = null_moments(g, 4, 4);
  const auto exact = exhaustive_permutation_moments(g, 4, 4);
  EXPECT_NEAR(analytic.mu1, exact.mu1, 1e-12);
  EXPECT_NEAR(analytic.sigma[0][0], exact.sigma[0][0], 1e-12);
  EXPECT_NEAR(analytic.sigma[1][1], exact.sigma[1][1], 1e-12);
  EXPECT_NEAR(analytic.sigma[0][1], exact.sigma[0][1], 1e-12);
}

TEST(TableCsv, RoundTripsExactly) {
  DistributionGridConfig cfg;
  cfg.dim = 3;
  cfg.n = 20;
  cfg.k = 2;
  cfg.seed = 11;
  const auto table = distribution_grid(cfg);
  std::istringstream in(table_to_csv(table));
  EXPECT_EQ(read_table_csv(in), table);
}

TEST(TableCsv, SchemaErrors) {
  std::istringstream empty("");
  EXPECT_THROW(read_table_csv(empty), SchemaError);
  std::istringstream header_only(std::string(kTableHeader) + "\n");
  EXPECT_THROW(read_table_csv(header_only), SchemaError);
  std::istringstream wrong_header("a,b,c\n1,2,3\n");
  EXPECT_THROW(read_table_csv(wrong_header), SchemaError);
  std::istringstream short_row(std::string(kTableHeader) + "\nx,gaussian,gaussian,1,1,ECD\n");
  EXPECT_THROW(read_table_csv(short_row), SchemaError);
  std::istringstream bad_measure(std::string(kTableHeader) + "\nx,gaussian,gaussian,1,1,KID,2,3,4,4,1\n");
  EXPECT_THROW(read_table_csv(bad_measure), SchemaError);
  std::istringstream bad_value(std::string(kTableHeader) + "\nx,gaussian,gaussian,1,1,ECD,nan,3,4,4,1\n");
  EXPECT_THROW(read_table_csv(bad_value), SchemaError);
}

// Same-distribution cells sit well below cross-distribution cells
// (dim 100, n = 1000, k = 10, 20 seeds). Takes about a minute.
TEST(DistributionGridSlow, SameBelowCrossMedians) {
  std::map<std::string, std::vector<double>> ecd_by_pair;
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    DistributionGridConfig cfg;
    cfg.seed = seed;
    for (auto& cell : distribution_grid_cells(cfg)) {
      cell.measures = {"ECD"};
      const auto rows = run_cells({cell});
      ecd_by_pair[rows[0].kind_a + "-" + rows[0].kind_b].push_back(rows[0].value);
    }
  }
  auto median = [](std::vector<double> v) {
    std::sort(v.begin(), v.end());
    return 0.5 * (v[v.size() / 2 - 1] + v[v.size() / 2]);
  };
  double worst_same = 0.0, best_cross = INFINITY;
  for (const auto& [pair, values] : ecd_by_pair) {
    const bool same = pair == "gaussian-gaussian" || pair == "uniform-uniform" || pair == "binary-binary";
    if (same)
      worst_same = std::max(worst_same, median(values));
    else
      best_cross = std::min(best_cross, median(values));
  }
  EXPECT_LT(worst_same, best_cross);
}
