#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <fstream>
#include <optional>
#include <ostream>
#include <thread>

#include "ecdkit/csv.hpp"
#include "ecdkit/ecd.hpp"
#include "ecdkit/errors.hpp"
#include "ecdkit/experiments.hpp"
#include "ecdkit/report.hpp"
#include "ecdkit/setmeasures.hpp"
#include "ecdkit/svgplot.hpp"

namespace ecdkit::cli {

namespace {

struct RunConfig {
  std::string set_a;
  std::string set_b;
  std::string distances;
  std::optional<std::size_t> split;
  int k = kDefaultK;
  std::string metric = "euclidean";
  std::optional<std::uint64_t> seed;
  std::optional<int> rounds;
  std::string out;
  std::string dump_graph;
  double tolerance = kDefaultIngestTolerance;
  bool with_measures = false;
  unsigned threads = 1;

  bool distance_mode() const { return !distances.empty(); }
};

void check_input_mode(const RunConfig& c) {
  const bool features = !c.set_a.empty() || !c.set_b.empty();
  if (features && c.distance_mode())
    throw InputError("give either --set-a/--set-b or --distances, not both");
  if (c.distance_mode()) {
    if (!c.split) throw InputError("--distances requires --split");
    return;
  }
  if (c.set_a.empty() || c.set_b.empty())
    throw InputError("give --set-a and --set-b, or --distances with --split");
}

void add_input_options(CLI::App& cmd, RunConfig& c) {
  cmd.add_option("--set-a", c.set_a, "CSV of points in set A (generated)");
  cmd.add_option("--set-b", c.set_b, "CSV of points in set B (reference)");
  cmd.add_option("--distances", c.distances, "CSV pooled N x N distance matrix, A rows first");
  cmd.add_option("--split", c.split, "number of leading rows of --distances that belong to A");
  cmd.add_option("--tolerance", c.tolerance, "symmetry/diagonal tolerance for --distances")
      ->capture_default_str();
  cmd.add_option("--out", c.out, "output path (default: standard output)");
}

void emit(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw InputError("cannot write '" + path + "'");
  file << text;
  if (!file) throw InputError("failed writing '" + path + "'");
}

struct Inputs {
  std::optional<FeatureSet> a;
  std::optional<FeatureSet> b;
  std::optional<DistanceMatrix> pooled;
  std::size_t n = 0;
  std::size_t m = 0;
};

Inputs load_inputs(const RunConfig& c) {
  check_input_mode(c);
  Inputs in;
  if (c.distance_mode()) {
    in.pooled = validate_distance_matrix(csv::read_matrix_file(c.distances), c.tolerance);
    if (*c.split > in.pooled->size())
      throw SizeMismatch("--split exceeds the number of distance-matrix rows");
    in.n = *c.split;
    in.m = in.pooled->size() - in.n;
  } else {
    in.a = csv::read_features_file(c.set_a);
    in.b = csv::read_features_file(c.set_b);
    if (in.a->dim() != in.b->dim())
      throw DimensionMismatch("--set-a and --set-b have different dimensions");
    in.n = in.a->size();
    in.m = in.b->size();
  }
  return in;
}

int cmd_ecd(const RunConfig& c, std::ostream& out) {
  const Inputs in = load_inputs(c);
  const Metric metric = parse_metric(c.metric);
  const bool subsample = c.rounds.has_value() || in.n > in.m;

  EcdReport report;
  if (subsample) {
    if (!c.seed) throw InputError("subsampling (|A| > |B| or --rounds) requires --seed");
    if (!c.dump_graph.empty()) throw InputError("--dump-graph needs a single-round run (|A| == |B|, no --rounds)");
    const int rounds = c.rounds.value_or(kDefaultSubsampleRounds);
    report = in.pooled ? ecd_subsampled(*in.pooled, in.n, c.k, rounds, *c.seed, c.threads)
                       : ecd_subsampled(*in.a, *in.b, c.k, rounds, *c.seed, metric, c.threads);
  } else {
    const PooledLabels labels(in.n, in.m);
    const DistanceMatrix d =
        in.pooled ? *in.pooled : pairwise_distances(*in.a, *in.b, metric, c.threads);
    const SpanningGraph g = kmst_neutral_ties(d, c.k);
    if (!c.dump_graph.empty()) {
      std::ofstream file(c.dump_graph, std::ios::binary);
      if (!file) throw InputError("cannot write '" + c.dump_graph + "'");
      csv::write_graph(file, g);
    }
    report = ecd_from_graph(g, labels);
    report.metric = in.pooled ? "precomputed" : std::string(to_string(metric));
    report.seed = c.seed;
  }

  std::optional<MeasureResult> measures;
  if (c.with_measures)
    measures = in.pooled ? measure_sets(*in.pooled, in.n) : measure_sets(*in.a, *in.b);
  emit(c.out, report_json(report, measures), out);
  return kOk;
}

int cmd_measures(const RunConfig& c, std::ostream& out) {
  const Inputs in = load_inputs(c);
  const MeasureResult r = in.pooled ? measure_sets(*in.pooled, in.n) : measure_sets(*in.a, *in.b);
  emit(c.out, measures_json(r, in.n, in.m, in.pooled ? "precomputed" : "euclidean"), out);
  return kOk;
}

std::string lowercase(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char ch) { return std::tolower(ch); });
  return s;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"ecdkit: graph-based two-sample distances and generative-model measures"};
  app.require_subcommand(1);

  RunConfig ecd_cfg;
  auto* ecd_cmd = app.add_subcommand("ecd", "Edge Count Difference between two sets");
  add_input_options(*ecd_cmd, ecd_cfg);
  ecd_cmd->add_option("--k", ecd_cfg.k, "number of edge-disjoint spanning trees")->capture_default_str();
  ecd_cmd->add_option("--metric", ecd_cfg.metric, "euclidean | squared-euclidean")->capture_default_str();
  ecd_cmd->add_option("--seed", ecd_cfg.seed, "64-bit seed for subsampling");
  ecd_cmd->add_option("--rounds", ecd_cfg.rounds, "subsample rounds (default 10 when |A| > |B|)");
  ecd_cmd->add_option("--dump-graph", ecd_cfg.dump_graph, "write the k-MST edges as CSV");
  ecd_cmd->add_flag("--with-measures", ecd_cfg.with_measures, "also report coverage, MMD, Frechet");
  ecd_cmd->add_option("--threads", ecd_cfg.threads, "worker threads")->capture_default_str();

  RunConfig msr_cfg;
  auto* msr_cmd = app.add_subcommand("measures", "Coverage, minimum matching distance, Frechet distance");
  add_input_options(*msr_cmd, msr_cfg);

  auto* exp_cmd = app.add_subcommand("experiment", "Synthetic measure-comparison experiments");
  exp_cmd->require_subcommand(1);
  std::uint64_t exp_seed = 0;
  std::string exp_out;
  unsigned exp_threads = 1;
  VarianceSweepConfig sweep_cfg;
  DistributionGridConfig grid_cfg;

  auto* sweep_cmd = exp_cmd->add_subcommand("variance-sweep", "Gaussian A of varying variance vs unit Gaussian B");
  auto* grid_cmd = exp_cmd->add_subcommand("distribution-grid", "Unit-variance gaussian/uniform/binary pairs");
  for (auto* sub : {sweep_cmd, grid_cmd}) {
    sub->add_option("--seed", exp_seed, "base 64-bit seed")->required();
    sub->add_option("--out", exp_out, "CSV output path (default: standard output)");
    sub->add_option("--threads", exp_threads, "worker threads (output is identical for any value)")
        ->capture_default_str();
  }
  sweep_cmd->add_option("--dims", sweep_cfg.dims, "dimensions")->capture_default_str();
  sweep_cmd->add_option("--variances", sweep_cfg.variances, "variances of A");
  sweep_cmd->add_option("--n", sweep_cfg.n, "points per set")->capture_default_str();
  sweep_cmd->add_option("--k", sweep_cfg.k, "number of spanning trees")->capture_default_str();
  grid_cmd->add_option("--dim", grid_cfg.dim, "dimension")->capture_default_str();
  grid_cmd->add_option("--n", grid_cfg.n, "points per set")->capture_default_str();
  grid_cmd->add_option("--k", grid_cfg.k, "number of spanning trees")->capture_default_str();

  std::string plot_table;
  std::string plot_out = "panel";
  auto* plot_cmd = app.add_subcommand("plot", "Render an experiment CSV as SVG panels, one per measure");
  plot_cmd->add_option("table,--table", plot_table, "experiment CSV")->required();
  plot_cmd->add_option("--out", plot_out, "output prefix; writes <prefix>_<measure>.svg")
      ->capture_default_str();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (ecd_cmd->parsed()) return cmd_ecd(ecd_cfg, out);
    if (msr_cmd->parsed()) return cmd_measures(msr_cfg, out);
    if (sweep_cmd->parsed()) {
      sweep_cfg.seed = exp_seed;
      sweep_cfg.workers = exp_threads;
      emit(exp_out, table_to_csv(variance_sweep(sweep_cfg)), out);
      return kOk;
    }
    if (grid_cmd->parsed()) {
      grid_cfg.seed = exp_seed;
      grid_cfg.workers = exp_threads;
      emit(exp_out, table_to_csv(distribution_grid(grid_cfg)), out);
      return kOk;
    }
    if (plot_cmd->parsed()) {
      std::ifstream in(plot_table);
      if (!in) throw InputError("cannot open '" + plot_table + "'");
      for (const auto& panel : svg::table_panels(read_table_csv(in))) {
        const std::string path = plot_out + "_" + lowercase(panel.measure) + ".svg";
        emit(path, panel.document, out);
        out << path << '\n';
      }
      return kOk;
    }
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const NumericError& e) {
    err << "numeric error: " << e.what() << '\n';
    return kNumericError;
  } catch (const std::exception& e) {
    err << "unexpected error: " << e.what() << '\n';
    return kUnexpected;
  }
  return kInputError;
}

}  // namespace ecdkit::cli
