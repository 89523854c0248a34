#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

#include "cli.hpp"
#include "lazyfinger/lazyfinger.hpp"

namespace lazyfinger {
namespace {

namespace fs = std::filesystem;

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("lftool_test_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  void write(const std::string& name, const std::string& text) const {
    std::ofstream(path(name), std::ios::binary) << text;
  }

  std::string read(const std::string& name) const {
    std::ifstream in(path(name), std::ios::binary);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  }

  int run(std::vector<std::string> args) {
    args.insert(args.begin(), "lftool");
    out_.str("");
    err_.str("");
    return cli::run(args, out_, err_);
  }

  // Value printed for `key` in key<TAB>value output.
  std::string value(const std::string& key) const {
    std::istringstream in(out_.str());
    std::string line;
    while (std::getline(in, line)) {
      if (line.rfind(key + "\t", 0) == 0) return line.substr(key.size() + 1);
    }
    return "<missing>";
  }

  fs::path dir_;
  std::ostringstream out_, err_;
};

TEST_F(CliTest, GenSequential) {
  EXPECT_EQ(run({"gen", "--kind", "sequential", "--n", "3", "--m", "7"}), 0);
  EXPECT_EQ(out_.str(), "3 7\n1 2 3 1 2 3 1\n");
  EXPECT_EQ(run({"gen", "--kind", "sequential", "--m", "7"}), 1);
  EXPECT_EQ(run({"gen", "--kind", "bitrev", "--n", "6"}), 1);
  EXPECT_NE(err_.str().find("power of two"), std::string::npos);
}

TEST_F(CliTest, GenRandomizedNeedsSeedAndIsDeterministic) {
  EXPECT_EQ(run({"gen", "--kind", "uniform", "--n", "8", "--m", "20"}), 1);
  ASSERT_EQ(run({"gen", "--kind", "rounds", "--n", "16", "--m", "100", "--seed", "4", "--out", path("a")}), 0);
  ASSERT_EQ(run({"gen", "--kind", "rounds", "--n", "16", "--m", "100", "--seed", "4", "--out", path("b")}), 0);
  EXPECT_EQ(read("a"), read("b"));
}

TEST_F(CliTest, GenMatrixFile) {
  write("good", "2\n0 1\n1 0\n");
  ASSERT_EQ(run({"gen", "--kind", "markov", "--n", "2", "--m", "4", "--seed", "1", "--matrix", path("good")}), 0);
  EXPECT_TRUE(out_.str() == "2 4\n1 2 1 2\n" || out_.str() == "2 4\n2 1 2 1\n") << out_.str();
  write("bad", "2\n0.3 0.3\n1 0\n");
  EXPECT_EQ(run({"gen", "--kind", "markov", "--n", "2", "--seed", "1", "--matrix", path("bad")}), 2);
}

TEST_F(CliTest, Stats) {
  ASSERT_EQ(run({"gen", "--kind", "sequential", "--n", "4", "--m", "8", "--out", path("s")}), 0);
  ASSERT_EQ(run({"stats", "--seq", path("s")}), 0);
  EXPECT_EQ(value("H_c"), "0.000000");
  EXPECT_EQ(value("H"), "2.000000");
  EXPECT_EQ(value("m"), "8");
  write("empty", "4 0\n");
  EXPECT_EQ(run({"stats", "--seq", path("empty")}), 2);
  EXPECT_EQ(run({"stats"}), 1);
}

TEST_F(CliTest, FreqThenOpt) {
  write("alt", "3 11 1 1\n6 0 5\n1 3 5\n3 1 5\n");
  ASSERT_EQ(run({"opt", "--method", "lazy", "--freq", path("alt"), "--out", path("t")}), 0);
  EXPECT_EQ(value("cost"), "10");
  const StaticTree t = io::load_tree(path("t"));
  EXPECT_EQ(step_cost(t, 1, 3), 1u);

  write("one", "1 3\n1 1 1\n");
  ASSERT_EQ(run({"opt", "--method", "lazy", "--seq", path("one"), "--out", path("t1")}), 0);
  EXPECT_EQ(value("cost"), "0");
  EXPECT_EQ(read("t1"), "1 1\n1 0 0\n");

  write("neg", "3 11 1 1\n6 0 5\n1 3 -5\n3 1 5\n");
  EXPECT_EQ(run({"opt", "--method", "lazy", "--freq", path("neg")}), 2);
  write("range", "3 2\n1 9\n");
  EXPECT_EQ(run({"opt", "--method", "root", "--seq", path("range")}), 3);
  EXPECT_EQ(run({"opt", "--method", "lazy", "--seq", path("one"), "--freq", path("alt")}), 1);
  EXPECT_EQ(run({"opt", "--method", "sideways", "--seq", path("one")}), 1);

  ASSERT_EQ(run({"freq", "--seq", path("one"), "--out", path("f")}), 0);
  EXPECT_EQ(read("f"), "1 3 1 1\n3\n1 1 2\n");
}

TEST_F(CliTest, BuildEvalBoundWeights) {
  ASSERT_EQ(run({"build", "--kind", "balanced", "--n", "3", "--out", path("b3")}), 0);
  write("x", "3 3\n1 2 3\n");
  ASSERT_EQ(run({"eval", "--tree", path("b3"), "--seq", path("x"), "--method", "lazy"}), 0);
  EXPECT_EQ(value("total_with_root_start"), "3");
  EXPECT_EQ(value("transition_cost"), "2");
  ASSERT_EQ(run({"eval", "--tree", path("b3"), "--seq", path("x"), "--method", "root"}), 0);
  EXPECT_EQ(value("total_with_root_start"), "2");

  // Frequency-file evaluation agrees with the sequence run.
  ASSERT_EQ(run({"freq", "--seq", path("x"), "--out", path("fx")}), 0);
  ASSERT_EQ(run({"eval", "--tree", path("b3"), "--freq", path("fx"), "--method", "lazy"}), 0);
  EXPECT_EQ(value("total_with_root_start"), "3");

  write("uw", "4\n1\n1\n1\n1\n");
  write("x14", "4 2\n1 4\n");
  ASSERT_EQ(run({"bound", "--weights", path("uw"), "--seq", path("x14")}), 0);
  EXPECT_EQ(value("df_bound"), "2.000000");

  ASSERT_EQ(run({"weights", "--tree", path("b3")}), 0);
  EXPECT_EQ(out_.str(), "3\n0.25\n1\n0.25\n");

  write("w811", "3\n8\n1\n1\n");
  ASSERT_EQ(run({"build", "--kind", "mehlhorn", "--weights", path("w811")}), 0);
  EXPECT_EQ(out_.str().substr(0, 4), "3 1\n");

  EXPECT_EQ(run({"build", "--kind", "treap", "--weights", path("w811")}), 1);
  ASSERT_EQ(run({"build", "--kind", "treap", "--weights", path("w811"), "--seed", "3", "--out", path("tr1")}), 0);
  ASSERT_EQ(run({"build", "--kind", "treap", "--weights", path("w811"), "--seed", "3", "--out", path("tr2")}), 0);
  EXPECT_EQ(read("tr1"), read("tr2"));

  ASSERT_EQ(run({"build", "--kind", "balanced", "--n", "4", "--out", path("b4")}), 0);
  EXPECT_EQ(run({"eval", "--tree", path("b4"), "--seq", path("x"), "--method", "lazy"}), 3);
}

TEST_F(CliTest, MultitreeAndCompare) {
  ASSERT_EQ(run({"gen", "--kind", "markov", "--n", "32", "--m", "3000", "--seed", "8", "--out", path("mk")}), 0);
  ASSERT_EQ(run({"multitree", "--d", "4", "--seq", path("mk"), "--dump", path("dump")}), 0);
  EXPECT_LE(std::stoul(value("node_count")), 32u * 5u);
  EXPECT_NE(read("dump").find("T32:"), std::string::npos);
  EXPECT_EQ(run({"multitree", "--d", "33", "--seq", path("mk")}), 1);

  EXPECT_EQ(run({"compare", "--seq", path("mk")}), 1);
  ASSERT_EQ(run({"compare", "--seq", path("mk"), "--seed", "5"}), 0);
  std::istringstream table(out_.str());
  std::string line;
  std::getline(table, line);
  EXPECT_EQ(line, "strategy\ttotal\tper_search\tnotes");
  std::map<std::string, unsigned long long> totals;
  while (std::getline(table, line)) {
    std::istringstream fields(line);
    std::string name, total;
    std::getline(fields, name, '\t');
    std::getline(fields, total, '\t');
    totals[name] = std::stoull(total);
  }
  ASSERT_EQ(totals.size(), 6u);
  EXPECT_LE(totals["opt-lazy"], totals["balanced-lazy"]);
  EXPECT_LE(totals["opt-root"], totals["mehlhorn-root"]);
  EXPECT_LE(totals["opt-lazy"], totals["treap-lazy"]);

  const std::string first = out_.str();
  ASSERT_EQ(run({"compare", "--seq", path("mk"), "--seed", "5"}), 0);
  EXPECT_EQ(out_.str(), first);
}

TEST_F(CliTest, UsageErrors) {
  EXPECT_EQ(run({}), 1);
  EXPECT_EQ(run({"frobnicate"}), 1);
  EXPECT_EQ(run({"eval", "--tree", path("missing"), "--seq", path("missing"), "--method", "lazy"}), 2);
  EXPECT_EQ(run({"--help"}), 0);
}

}  // namespace
}  // namespace lazyfinger
