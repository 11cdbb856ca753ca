#include "ecdkit/experiments.hpp"

#include <charconv>
#include <cmath>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>

#include "ecdkit/csv.hpp"
#include "ecdkit/ecd.hpp"
#include "ecdkit/errors.hpp"
#include "ecdkit/random.hpp"
#include "ecdkit/setmeasures.hpp"
#include "parallel.hpp"

namespace ecdkit {

std::string_view to_string(DistributionKind kind) noexcept {
  switch (kind) {
    case DistributionKind::gaussian: return "gaussian";
    case DistributionKind::uniform: return "uniform";
    case DistributionKind::binary: return "binary";
  }
  return "unknown";
}

DistributionKind parse_distribution(std::string_view name) {
  if (name == "gaussian") return DistributionKind::gaussian;
  if (name == "uniform") return DistributionKind::uniform;
  if (name == "binary") return DistributionKind::binary;
  throw InvalidSpec("unknown distribution '" + std::string(name) + "'");
}

FeatureSet sample(const DistributionSpec& spec, std::size_t count, std::uint64_t seed) {
  if (count < 1) throw InvalidSpec("sample count must be at least 1");
  if (spec.dim < 1) throw InvalidSpec("sample dimension must be at least 1");
  if (!(spec.variance > 0.0) || !std::isfinite(spec.variance))
    throw InvalidSpec("variance must be positive and finite");
  if (spec.kind != DistributionKind::gaussian && spec.variance != 1.0)
    throw InvalidSpec(std::string(to_string(spec.kind)) + " samples have unit variance only");

  Matrix points(count, spec.dim);
  Rng rng(seed);
  const double sd = std::sqrt(spec.variance);
  const double half_width = std::sqrt(3.0);
  for (std::size_t r = 0; r < count; ++r) {
    for (double& v : points.row(r)) {
      switch (spec.kind) {
        case DistributionKind::gaussian: v = sd * rng.normal(); break;
        case DistributionKind::uniform: v = half_width * (2.0 * rng.uniform01() - 1.0); break;
        case DistributionKind::binary: v = (rng.next() >> 63) ? 1.0 : -1.0; break;
      }
    }
  }
  return FeatureSet(std::move(points));
}

std::uint64_t cell_seed(std::uint64_t base, std::string_view experiment_id, std::size_t dim,
                        double variance_a, DistributionKind kind_a, DistributionKind kind_b) {
  return derive_seed(base, {hash_label(experiment_id), static_cast<std::uint64_t>(dim),
                            seed_part(variance_a), hash_label(to_string(kind_a)),
                            hash_label(to_string(kind_b))});
}

namespace {

std::vector<ExperimentRow> run_cell(const ExperimentCell& cell) {
  const auto a = sample(cell.a, cell.n, derive_seed(cell.seed, {hash_label("A")}));
  const auto b = sample(cell.b, cell.m, derive_seed(cell.seed, {hash_label("B")}));

  bool need_pooled = false;
  for (const auto& name : cell.measures) need_pooled |= (name != "FID");
  std::optional<DistanceMatrix> pooled;
  if (need_pooled) pooled = pairwise_distances(a, b, Metric::euclidean);

  std::vector<ExperimentRow> rows;
  for (const auto& name : cell.measures) {
    double value = 0.0;
    if (name == "ECD") {
      value = ecd(*pooled, cell.n, cell.k).statistic;
    } else if (name == "COV") {
      value = coverage(cross_block(*pooled, cell.n));
    } else if (name == "MMD") {
      value = mmd(cross_block(*pooled, cell.n));
    } else if (name == "FID") {
      value = frechet_gaussian(fit_gaussian(a), fit_gaussian(b));
    } else {
      throw InvalidSpec("unknown measure '" + name + "'");
    }
    rows.push_back({cell.experiment_id, std::string(to_string(cell.a.kind)),
                    std::string(to_string(cell.b.kind)), cell.a.dim, cell.a.variance, name, value,
                    cell.seed, cell.n, cell.m, cell.k});
  }
  return rows;
}

}  // namespace

ExperimentTable run_cells(const std::vector<ExperimentCell>& cells, unsigned workers) {
  std::vector<std::vector<ExperimentRow>> per_cell(cells.size());
  detail::parallel_for(cells.size(), workers, [&](std::size_t i) { per_cell[i] = run_cell(cells[i]); });
  ExperimentTable table;
  for (auto& rows : per_cell)
    for (auto& row : rows) table.push_back(std::move(row));
  return table;
}

std::vector<double> VarianceSweepConfig::default_variance_grid() {
  std::vector<double> grid;
  constexpr int kPoints = 21;
  for (int i = 0; i < kPoints; ++i) grid.push_back(0.5 + static_cast<double>(i) / (kPoints - 1));
  return grid;
}

std::vector<ExperimentCell> variance_sweep_cells(const VarianceSweepConfig& config) {
  if (config.n < 4) throw InvalidSpec("variance sweep needs at least 4 points per set");
  std::vector<ExperimentCell> cells;
  for (std::size_t dim : config.dims) {
    for (double variance : config.variances) {
      ExperimentCell cell;
      cell.experiment_id = std::string(kVarianceSweepId);
      cell.a = {DistributionKind::gaussian, dim, variance};
      cell.b = {DistributionKind::gaussian, dim, 1.0};
      cell.n = cell.m = config.n;
      cell.k = config.k;
      cell.seed = cell_seed(config.seed, kVarianceSweepId, dim, variance, cell.a.kind, cell.b.kind);
      cell.measures = {"ECD", "COV", "MMD"};
      cells.push_back(std::move(cell));
    }
  }
  return cells;
}

ExperimentTable variance_sweep(const VarianceSweepConfig& config) {
  return run_cells(variance_sweep_cells(config), config.workers);
}

std::vector<ExperimentCell> distribution_grid_cells(const DistributionGridConfig& config) {
  if (config.n < 4) throw InvalidSpec("distribution grid needs at least 4 points per set");
  constexpr DistributionKind kinds[] = {DistributionKind::gaussian, DistributionKind::uniform,
                                        DistributionKind::binary};
  std::vector<ExperimentCell> cells;
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = i; j < 3; ++j) {
      ExperimentCell cell;
      cell.experiment_id = std::string(kDistributionGridId);
      cell.a = {kinds[i], config.dim, 1.0};
      cell.b = {kinds[j], config.dim, 1.0};
      cell.n = cell.m = config.n;
      cell.k = config.k;
      cell.seed = cell_seed(config.seed, kDistributionGridId, config.dim, 1.0, kinds[i], kinds[j]);
      cell.measures = {"ECD", "FID"};
      cells.push_back(std::move(cell));
    }
  }
  return cells;
}

ExperimentTable distribution_grid(const DistributionGridConfig& config) {
  return run_cells(distribution_grid_cells(config), config.workers);
}

void write_table_csv(std::ostream& out, const ExperimentTable& table) {
  out << kTableHeader << '\n';
  for (const auto& r : table) {
    out << r.experiment_id << ',' << r.kind_a << ',' << r.kind_b << ',' << r.dim << ','
        << csv::format_real(r.variance_a) << ',' << r.measure << ',' << csv::format_real(r.value)
        << ',' << r.seed << ',' << r.n << ',' << r.m << ',' << r.k << '\n';
  }
}

std::string table_to_csv(const ExperimentTable& table) {
  std::ostringstream out;
  write_table_csv(out, table);
  return out.str();
}

namespace {

template <typename Int>
Int parse_integer(std::string_view field, std::size_t line_no, const char* column) {
  Int value{};
  auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc() || ptr != field.data() + field.size()) {
    std::ostringstream msg;
    msg << "line " << line_no << ": column " << column << " is not an integer";
    throw SchemaError(msg.str());
  }
  return value;
}

double parse_finite(std::string_view field, std::size_t line_no, const char* column) {
  auto v = csv::parse_real(field);
  if (!v || !std::isfinite(*v)) {
    std::ostringstream msg;
    msg << "line " << line_no << ": column " << column << " is not a finite number";
    throw SchemaError(msg.str());
  }
  return *v;
}

}  // namespace

ExperimentTable read_table_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw SchemaError("experiment table is empty");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != kTableHeader) throw SchemaError("experiment table header does not match the schema");

  ExperimentTable table;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto f = csv::split_fields(line);
    if (f.size() != 11) {
      std::ostringstream msg;
      msg << "line " << line_no << ": expected 11 columns, found " << f.size();
      throw SchemaError(msg.str());
    }
    ExperimentRow r;
    r.experiment_id = std::string(f[0]);
    r.kind_a = std::string(f[1]);
    r.kind_b = std::string(f[2]);
    r.dim = parse_integer<std::size_t>(f[3], line_no, "dim");
    r.variance_a = parse_finite(f[4], line_no, "variance_a");
    r.measure = std::string(f[5]);
    if (r.measure != "ECD" && r.measure != "COV" && r.measure != "MMD" && r.measure != "FID") {
      std::ostringstream msg;
      msg << "line " << line_no << ": unknown measure '" << r.measure << "'";
      throw SchemaError(msg.str());
    }
    r.value = parse_finite(f[6], line_no, "value");
    r.seed = parse_integer<std::uint64_t>(f[7], line_no, "seed");
    r.n = parse_integer<std::size_t>(f[8], line_no, "n");
    r.m = parse_integer<std::size_t>(f[9], line_no, "m");
    r.k = parse_integer<int>(f[10], line_no, "k");
    table.push_back(std::move(r));
  }
  if (table.empty()) throw SchemaError("experiment table has no rows");
  return table;
}

}  // namespace ecdkit
