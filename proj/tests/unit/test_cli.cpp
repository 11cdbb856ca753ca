#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <nlohmann/json.hpp>
#include <random>
#include <sstream>

#include "cli.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("ecdkit-cli-" + std::to_string(std::random_device{}()) + "-" +
            ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string file(const std::string& name, const std::string& contents) const {
    const auto path = (dir_ / name).string();
    std::ofstream(path, std::ios::binary) << contents;
    return path;
  }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  static std::string slurp(const std::string& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
  }

  int run(std::vector<std::string> args) {
    out_.str("");
    err_.str("");
    return ecdkit::cli::run(args, out_, err_);
  }
  json out_json() const { return json::parse(out_.str()); }

  std::string worked_matrix() const {
    return file("d.csv", "0,1,10,11\n1,0,9,10\n10,9,0,1\n11,10,1,0\n");
  }

  fs::path dir_;
  std::ostringstream out_, err_;
};

}  // namespace

TEST_F(Cli, WorkedInstanceFromDistanceFile) {
  ASSERT_EQ(run({"ecd", "--distances", worked_matrix(), "--split", "2", "--k", "1"}), 0) << err_.str();
  const auto j = out_json();
  EXPECT_NEAR(j["statistic"].get<double>(), 1.5, 1e-9);
  EXPECT_EQ(j["r1"], 1);
  EXPECT_EQ(j["r2"], 1);
  EXPECT_EQ(j["metric"], "precomputed");
}

TEST_F(Cli, WorkedInstanceFromFeatureFiles) {
  const auto a = file("a.csv", "0\n1\n");
  const auto b = file("b.csv", "10\n11\n");
  const auto report = path("r.json");
  ASSERT_EQ(run({"ecd", "--set-a", a, "--set-b", b, "--k", "1", "--out", report}), 0) << err_.str();
  EXPECT_TRUE(out_.str().empty());
  EXPECT_NEAR(json::parse(slurp(report))["statistic"].get<double>(), 1.5, 1e-9);
}

TEST_F(Cli, InputModeErrors) {
  EXPECT_EQ(run({"ecd", "--distances", worked_matrix(), "--k", "1"}), 2);
  EXPECT_NE(err_.str().find("--split"), std::string::npos);
  const auto a = file("a.csv", "0\n1\n");
  EXPECT_EQ(run({"ecd", "--set-a", a, "--set-b", a, "--distances", worked_matrix(), "--split", "2"}), 2);
  EXPECT_EQ(run({"ecd", "--set-a", a}), 2);
  EXPECT_EQ(run({"ecd", "--set-a", a, "--set-b", path("missing.csv")}), 2);
  EXPECT_EQ(run({"ecd", "--distances", worked_matrix(), "--split", "9"}), 2);
  EXPECT_EQ(run({"ecd", "--distances", file("bad.csv", "0,1\n2,0\n"), "--split", "1"}), 2);
  EXPECT_EQ(run({"bogus"}), 2);
  EXPECT_EQ(run({}), 2);
}

TEST_F(Cli, HelpExitsZero) {
  EXPECT_EQ(run({"--help"}), 0);
  EXPECT_NE(out_.str().find("ecd"), std::string::npos);
}

TEST_F(Cli, DimensionMismatchAndDisconnection) {
  const auto a = file("a.csv", "0,0\n1,1\n");
  const auto b = file("b.csv", "0\n1\n");
  EXPECT_EQ(run({"ecd", "--set-a", a, "--set-b", b}), 2);
  // Four points admit at most two edge-disjoint spanning trees.
  EXPECT_EQ(run({"ecd", "--set-a", b, "--set-b", b, "--k", "3"}), 2);
  EXPECT_NE(err_.str().find("layer"), std::string::npos);
}

TEST_F(Cli, SingularCovarianceExitsThree) {
  // k = 2 on four points uses the complete graph, whose null covariance is singular.
  EXPECT_EQ(run({"ecd", "--distances", worked_matrix(), "--split", "2", "--k", "2"}), 3);
  EXPECT_FALSE(err_.str().empty());
}

TEST_F(Cli, SubsamplingNeedsSeed) {
  const auto a = file("a.csv", "0\n1\n2\n3\n4\n5\n");
  const auto b = file("b.csv", "0.5\n1.5\n2.5\n3.5\n");
  EXPECT_EQ(run({"ecd", "--set-a", a, "--set-b", b, "--k", "1"}), 2);
  ASSERT_EQ(run({"ecd", "--set-a", a, "--set-b", b, "--k", "1", "--seed", "42"}), 0) << err_.str();
  const auto j = out_json();
  EXPECT_EQ(j["rounds"], 10);
  EXPECT_EQ(j["seed"], 42);
  EXPECT_EQ(j["round_statistics"].size(), 10u);
  const std::string first = out_.str();
  ASSERT_EQ(run({"ecd", "--set-a", a, "--set-b", b, "--k", "1", "--seed", "42", "--threads", "3"}), 0);
  EXPECT_EQ(out_.str(), first);
  EXPECT_EQ(run({"ecd", "--set-a", a, "--set-b", b, "--seed", "1", "--dump-graph", path("g.csv")}), 2);
}

TEST_F(Cli, DumpGraph) {
  const auto a = file("a.csv", "0,0\n1,0\n0,1\n1,1\n3,3\n");
  const auto b = file("b.csv", "0,2\n2,0\n2,2\n5,1\n4,4\n");
  const auto graph = path("g.csv");
  ASSERT_EQ(run({"ecd", "--set-a", a, "--set-b", b, "--k", "3", "--dump-graph", graph}), 0) << err_.str();
  std::istringstream rows(slurp(graph));
  std::string line;
  std::getline(rows, line);
  EXPECT_EQ(line, "layer,i,j,weight");
  std::size_t count = 0;
  while (std::getline(rows, line)) count += !line.empty();
  EXPECT_EQ(count, 3u * 9u);
  EXPECT_EQ(out_json()["edges"], 27);
}

TEST_F(Cli, WithMeasures) {
  const auto a = file("a.csv", "x\n0\n1\n");
  const auto b = file("b.csv", "x\n10\n11\n");
  ASSERT_EQ(run({"ecd", "--set-a", a, "--set-b", b, "--k", "1", "--with-measures"}), 0) << err_.str();
  const auto j = out_json();
  EXPECT_TRUE(j.contains("coverage"));
  EXPECT_TRUE(j["frechet"].is_number());
}

TEST_F(Cli, MeasuresOnIdenticalFiles) {
  const auto a = file("a.csv", "0,1\n2,3\n5,-1\n4,4\n");
  ASSERT_EQ(run({"measures", "--set-a", a, "--set-b", a}), 0) << err_.str();
  const auto j = out_json();
  EXPECT_EQ(j["coverage"], 1.0);
  EXPECT_EQ(j["mmd"], 0.0);
  EXPECT_NEAR(j["frechet"].get<double>(), 0.0, 1e-9);
}

TEST_F(Cli, MeasuresWorkedLine) {
  const auto a = file("a.csv", "0\n0.1\n");
  const auto b = file("b.csv", "0\n5\n");
  ASSERT_EQ(run({"measures", "--set-a", a, "--set-b", b}), 0) << err_.str();
  const auto j = out_json();
  EXPECT_EQ(j["coverage"], 0.5);
  EXPECT_NEAR(j["mmd"].get<double>(), 2.45, 1e-12);
}

TEST_F(Cli, MeasuresFromDistancesHaveNoFrechet) {
  ASSERT_EQ(run({"measures", "--distances", worked_matrix(), "--split", "2"}), 0) << err_.str();
  const auto j = out_json();
  EXPECT_TRUE(j["frechet"].is_null());
  EXPECT_EQ(j["coverage"], 0.5);
  EXPECT_EQ(j["mmd"], 9.5);
}

TEST_F(Cli, ExperimentsAreByteIdenticalAcrossThreads) {
  const std::vector<std::string> sweep{"experiment", "variance-sweep", "--seed", "7",  "--dims", "1",
                                       "3",          "--n",            "30",     "--k", "3"};
  auto with = [&](std::vector<std::string> args, const std::string& out, const std::string& threads) {
    args.insert(args.end(), {"--out", out, "--threads", threads});
    return run(args);
  };
  ASSERT_EQ(with(sweep, path("s1.csv"), "1"), 0) << err_.str();
  ASSERT_EQ(with(sweep, path("s2.csv"), "4"), 0) << err_.str();
  const auto text = slurp(path("s1.csv"));
  EXPECT_EQ(text, slurp(path("s2.csv")));
  EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), 1 + 2 * 21 * 3);

  const std::vector<std::string> grid{"experiment", "distribution-grid", "--seed", "7",
                                      "--dim",      "4",                 "--n",    "40"};
  ASSERT_EQ(with(grid, path("g1.csv"), "1"), 0) << err_.str();
  ASSERT_EQ(with(grid, path("g2.csv"), "3"), 0) << err_.str();
  const auto g = slurp(path("g1.csv"));
  EXPECT_EQ(g, slurp(path("g2.csv")));
  EXPECT_EQ(std::count(g.begin(), g.end(), '\n'), 1 + 6 * 2);
  EXPECT_EQ(run({"experiment", "distribution-grid"}), 2);
}

TEST_F(Cli, PlotWritesOnePanelPerMeasure) {
  ASSERT_EQ(run({"experiment", "variance-sweep", "--seed", "3", "--dims", "2", "--variances", "0.5", "1",
                 "1.5", "--n", "20", "--k", "2", "--out", path("s.csv")}),
            0)
      << err_.str();
  const auto prefix = path("fig");
  ASSERT_EQ(run({"plot", path("s.csv"), "--out", prefix}), 0) << err_.str();
  for (const char* m : {"ecd", "cov", "mmd"}) EXPECT_TRUE(fs::exists(prefix + "_" + m + ".svg")) << m;
  EXPECT_EQ(run({"plot", file("empty.csv", "")}), 2);
  EXPECT_EQ(run({"plot", "--table", file("bad.csv", "a,b\n1,2\n")}), 2);
}
