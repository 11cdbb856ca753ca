#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "ecdkit/metricspace.hpp"
#include "ecdkit/spanning.hpp"

namespace ecdkit {

enum class DistributionKind { gaussian, uniform, binary };

std::string_view to_string(DistributionKind kind) noexcept;
DistributionKind parse_distribution(std::string_view name);

/// i.i.d. coordinates with zero mean. Uniform and binary are fixed at unit
/// variance: U[-sqrt 3, sqrt 3] and {-1, +1}.
struct DistributionSpec {
  DistributionKind kind = DistributionKind::gaussian;
  std::size_t dim = 1;
  double variance = 1.0;
};

/// Throws InvalidSpec for count < 1, dim < 1, non-positive variance, or a
/// non-unit variance on a uniform/binary spec.
FeatureSet sample(const DistributionSpec& spec, std::size_t count, std::uint64_t seed);

struct ExperimentRow {
  std::string experiment_id;
  std::string kind_a;
  std::string kind_b;
  std::size_t dim = 0;
  double variance_a = 1.0;
  std::string measure;  // ECD, COV, MMD or FID
  double value = 0.0;
  std::uint64_t seed = 0;  // per-cell seed
  std::size_t n = 0;
  std::size_t m = 0;
  int k = kDefaultK;

  friend bool operator==(const ExperimentRow&, const ExperimentRow&) = default;
};

using ExperimentTable = std::vector<ExperimentRow>;

inline constexpr std::string_view kVarianceSweepId = "variance-sweep";
inline constexpr std::string_view kDistributionGridId = "distribution-grid";

/// One (A distribution, B distribution) comparison. Set A is drawn with
/// derive_seed(seed, {"A"}) and set B with derive_seed(seed, {"B"}).
struct ExperimentCell {
  std::string experiment_id;
  DistributionSpec a;
  DistributionSpec b;
  std::size_t n = 0;
  std::size_t m = 0;
  int k = kDefaultK;
  std::uint64_t seed = 0;
  std::vector<std::string> measures;
};

/// Seed for a cell: hashes (base, experiment id, dim, variance, kinds).
std::uint64_t cell_seed(std::uint64_t base, std::string_view experiment_id, std::size_t dim,
                        double variance_a, DistributionKind kind_a, DistributionKind kind_b);

/// Rows in cell order, then in each cell's measure order. Independent of `workers`.
ExperimentTable run_cells(const std::vector<ExperimentCell>& cells, unsigned workers = 1);

struct VarianceSweepConfig {
  std::vector<std::size_t> dims{1, 10, 100, 1000};
  std::vector<double> variances = default_variance_grid();
  std::size_t n = 500;
  int k = kDefaultK;
  std::uint64_t seed = 0;
  unsigned workers = 1;

  /// 21 evenly spaced points on [0.5, 1.5].
  static std::vector<double> default_variance_grid();
};

struct DistributionGridConfig {
  std::size_t dim = 100;
  std::size_t n = 1000;
  int k = kDefaultK;
  std::uint64_t seed = 0;
  unsigned workers = 1;
};

/// Gaussian A with varying variance against unit-variance Gaussian B:
/// ECD, COV and MMD per (dim, variance).
std::vector<ExperimentCell> variance_sweep_cells(const VarianceSweepConfig& config);
ExperimentTable variance_sweep(const VarianceSweepConfig& config);

/// Every unordered pair of {gaussian, uniform, binary}: ECD and FID.
std::vector<ExperimentCell> distribution_grid_cells(const DistributionGridConfig& config);
ExperimentTable distribution_grid(const DistributionGridConfig& config);

inline constexpr std::string_view kTableHeader =
    "experiment_id,kind_a,kind_b,dim,variance_a,measure,value,seed,n,m,k";

/// Reals are written in shortest round-trip form, so equal tables give
/// byte-identical files.
void write_table_csv(std::ostream& out, const ExperimentTable& table);
std::string table_to_csv(const ExperimentTable& table);
/// Throws SchemaError on a wrong header, malformed rows, or an empty table.
ExperimentTable read_table_csv(std::istream& in);

}  // namespace ecdkit
