#include <gtest/gtest.h>

#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <map>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "latticekit/cbc.hpp"
#include "latticekit/cli.hpp"
#include "latticekit/errors.hpp"
#include "latticekit/io.hpp"

namespace fs = std::filesystem;
using namespace latticekit;

namespace {

int run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "latticekit");
  std::vector<char*> argv;
  for (auto& a : args) argv.push_back(a.data());
  argv.push_back(nullptr);
  return cli::run(static_cast<int>(args.size()), argv.data());
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

std::vector<std::vector<std::string>> csv_rows(const fs::path& p) {
  std::ifstream in(p);
  std::vector<std::vector<std::string>> rows;
  for (std::string line; std::getline(in, line);) {
    std::vector<std::string> cells;
    std::stringstream ls(line);
    for (std::string c; std::getline(ls, c, ',');) cells.push_back(c);
    rows.push_back(cells);
  }
  return rows;
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    set_warnings_enabled(false);
    dir_ = fs::temp_directory_path() /
           ("latticekit_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override {
    fs::remove_all(dir_);
    set_warnings_enabled(true);
  }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  fs::path dir_;
};

}  // namespace

TEST_F(Cli, ConstructProducesUnits) {
  ASSERT_EQ(run_cli({"construct", "--n", "16", "--d", "4", "--alpha", "2", "--weights", "product-paper",
                     "--out", path("v.txt"), "--csv", path("t.csv"), "--threads", "1"}),
            0);
  std::ifstream in(path("v.txt"));
  const auto vf = read_vector_file(in);
  ASSERT_EQ(vf.z.size(), 4u);
  for (auto zj : vf.z) EXPECT_EQ(std::gcd(zj, std::uint64_t{16}), 1u);
  const auto rows = csv_rows(path("t.csv"));
  ASSERT_EQ(rows.size(), 5u);
  EXPECT_EQ(rows[0], (std::vector<std::string>{"n", "d", "s", "T_s", "cumulative_S"}));
  const SpaceParams p(4, 2.0, named_weight_family(WeightFamily::Product, 4, 2.0));
  const auto gv = cbc_construct(CriterionContext(16, p), 4, 1);
  EXPECT_EQ(vf.z, gv.z);
  EXPECT_EQ(std::stod(rows[4][4]), gv.S());
}

TEST_F(Cli, TwoPointsAndDeterminism) {
  ASSERT_EQ(run_cli({"construct", "--n", "2", "--d", "3", "--out", path("a.txt")}), 0);
  std::ifstream in(path("a.txt"));
  EXPECT_EQ(read_vector_file(in).z, (std::vector<std::uint64_t>{1, 1, 1}));
  ASSERT_EQ(run_cli({"construct", "--n", "97", "--d", "5", "--weights", "pod-paper", "--out", path("b1.txt"),
                     "--threads", "1"}),
            0);
  ASSERT_EQ(run_cli({"construct", "--n", "97", "--d", "5", "--weights", "pod-paper", "--out", path("b2.txt"),
                     "--threads", "2"}),
            0);
  EXPECT_EQ(slurp(path("b1.txt")), slurp(path("b2.txt")));
}

TEST_F(Cli, CriterionMatchesConstruction) {
  ASSERT_EQ(run_cli({"construct", "--n", "64", "--d", "3", "--out", path("v.txt"), "--csv", path("c1.csv")}), 0);
  ASSERT_EQ(run_cli({"criterion", "--vector", path("v.txt"), "--out", path("c2.csv")}), 0);
  EXPECT_EQ(slurp(path("c1.csv")), slurp(path("c2.csv")));
  ASSERT_EQ(run_cli({"criterion", "--n", "64", "--z", "1,27,19", "--out", path("c3.csv")}), 0);
  EXPECT_EQ(csv_rows(path("c3.csv")).size(), 4u);
}

TEST_F(Cli, EmbeddedRun) {
  const auto start = std::chrono::steady_clock::now();
  ASSERT_EQ(run_cli({"construct-embedded", "--p", "2", "--m1", "4", "--m2", "6", "--d", "4", "--out",
                     path("e.txt"), "--csv", path("x.csv"), "--levels-csv", path("l.csv")}),
            0);
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  EXPECT_LT(seconds, 60.0);
  const auto x = csv_rows(path("x.csv"));
  ASSERT_EQ(x.size(), 5u);
  EXPECT_EQ(x[0], (std::vector<std::string>{"s", "X_s"}));
  EXPECT_EQ(std::stod(x[1][1]), 1.0);
  for (std::size_t s = 1; s < x.size(); ++s) EXPECT_GE(std::stod(x[s][1]), 1.0);
  EXPECT_EQ(csv_rows(path("l.csv")).size(), 4u);
  std::ifstream in(path("e.txt"));
  const auto vf = read_vector_file(in);
  EXPECT_EQ(vf.n, 64u);
  EXPECT_EQ(*vf.m1, 4u);
  ASSERT_EQ(run_cli({"bounds", "--vector", path("e.txt"), "--out", path("b.csv")}), 0);
  bool has_penalty = false;
  for (const auto& r : csv_rows(path("b.csv"))) has_penalty |= r[0] == "embedded_penalty";
  EXPECT_TRUE(has_penalty);
}

TEST_F(Cli, BoundsTable) {
  ASSERT_EQ(run_cli({"construct", "--n", "512", "--d", "3", "--alpha", "4", "--out", path("v.txt")}), 0);
  ASSERT_EQ(run_cli({"bounds", "--vector", path("v.txt"), "--alpha", "4", "--out", path("b.csv")}), 0);
  std::map<std::string, double> value;
  const auto rows = csv_rows(path("b.csv"));
  EXPECT_EQ(rows[0], (std::vector<std::string>{"quantity", "value", "lambda", "tau"}));
  for (std::size_t i = 1; i < rows.size(); ++i) value[rows[i][0]] = std::stod(rows[i][1]);
  for (const char* key : {"S", "l2_M", "l2_bound", "suapp_bound", "l2_rate_bound", "linf_v1_M",
                          "linf_v1_bound", "S_tilde", "linf_v2_M", "linf_v2_bound"}) {
    EXPECT_TRUE(value.count(key)) << key;
  }
  EXPECT_NEAR(value["l2_bound"], std::sqrt(2.0) * std::pow(value["S"], 0.25), 1e-14);
  EXPECT_LE(value["S"], value["suapp_bound"]);
  ASSERT_EQ(run_cli({"bounds", "--vector", path("v.txt"), "--alpha", "4", "--lambda", "0.5", "--tau", "0.4",
                     "--out", path("b2.csv")}),
            0);
  const auto fixed = csv_rows(path("b2.csv"));
  bool saw = false;
  for (const auto& r : fixed) {
    if (r[0] == "suapp_bound") {
      EXPECT_EQ(std::stod(r[2]), 0.5);
      saw = true;
    }
  }
  EXPECT_TRUE(saw);
}

TEST_F(Cli, ApproximateAndNodes) {
  ASSERT_EQ(run_cli({"approximate", "--n", "101", "--z", "1,40", "--M", "4", "--function", "cos-product",
                     "--out", path("a.csv")}),
            0);
  const auto rows = csv_rows(path("a.csv"));
  EXPECT_EQ(rows[0], (std::vector<std::string>{"h1", "h2", "re", "im"}));
  bool constant = false;
  for (const auto& r : rows) {
    if (r[0] == "0" && r[1] == "0") {
      EXPECT_NEAR(std::stod(r[2]), 1.0, 1e-13);
      constant = true;
    }
  }
  EXPECT_TRUE(constant);
  ASSERT_EQ(run_cli({"approximate", "--n", "5", "--z", "1,2", "--nodes", "--out", path("n.csv")}), 0);
  const auto nodes = csv_rows(path("n.csv"));
  ASSERT_EQ(nodes.size(), 6u);
  EXPECT_EQ(nodes[4], (std::vector<std::string>{"0.59999999999999998", "0.20000000000000001"}));
  {
    std::ofstream s(path("s.txt"));
    for (int k = 0; k < 5; ++k) s << "2.5\n";
  }
  ASSERT_EQ(run_cli({"approximate", "--n", "5", "--z", "1,2", "--M", "2", "--samples", path("s.txt"), "--out",
                     path("c.csv")}),
            0);
  EXPECT_EQ(run_cli({"approximate", "--n", "5", "--z", "1,2", "--M", "2", "--out", path("c.csv")}), 2);
}

TEST_F(Cli, RateExperiment) {
  ASSERT_EQ(run_cli({"experiment", "rates", "--d", "3", "--m-lo", "5", "--m-hi", "8", "--out", path("r.csv"),
                     "--fit-out", path("f.csv")}),
            0);
  EXPECT_EQ(csv_rows(path("r.csv")).size(), 5u);
  const auto fit = csv_rows(path("f.csv"));
  ASSERT_EQ(fit.size(), 2u);
  EXPECT_LT(std::stod(fit[1][0]), -1.0);
  ASSERT_EQ(run_cli({"experiment", "xratio", "--d", "3", "--m1", "2", "--m2", "4", "--out", path("x.csv")}), 0);
  EXPECT_EQ(csv_rows(path("x.csv")).size(), 4u);
}

TEST_F(Cli, ExitCodes) {
  EXPECT_EQ(run_cli({"construct", "--d", "4"}), 2);
  EXPECT_EQ(run_cli({"nonsense"}), 2);
  EXPECT_EQ(run_cli({"--help"}), 0);
  EXPECT_EQ(run_cli({"construct", "--n", "16", "--d", "0"}), 2);
  EXPECT_EQ(run_cli({"construct", "--n", "16", "--d", "2", "--weights", "bogus"}), 2);
  EXPECT_EQ(run_cli({"construct-embedded", "--p", "2", "--m1", "1", "--m2", "41", "--d", "2"}), 3);
  {
    std::ofstream w(path("zero.cfg"));
    w << "kind = product\ngamma = 0 0\n";
  }
  EXPECT_EQ(run_cli({"construct-embedded", "--p", "2", "--m1", "1", "--m2", "3", "--d", "2", "--weights",
                     "file:" + path("zero.cfg"), "--out", path("z.txt")}),
            4);
}

TEST_F(Cli, HashMismatch) {
  ASSERT_EQ(run_cli({"construct", "--n", "32", "--d", "3", "--out", path("v.txt")}), 0);
  EXPECT_EQ(run_cli({"criterion", "--vector", path("v.txt"), "--weights", "pod-paper", "--out", path("c.csv")}), 2);
  {
    std::ofstream bad(path("bad.txt"));
    bad << "not a vector file\n";
  }
  EXPECT_EQ(run_cli({"criterion", "--vector", path("bad.txt")}), 2);
}
