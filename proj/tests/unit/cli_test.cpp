#include "qcentrality_cli/cli.hpp"

#include <qcentrality/generators.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

namespace qcentrality::cli {
namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = std::filesystem::temp_directory_path() /
           ("qcentrality_cli_" + std::string(::testing::UnitTest::GetInstance()
                                                 ->current_test_info()
                                                 ->name()));
    std::filesystem::create_directories(dir_);
  }
  void TearDown() override { std::filesystem::remove_all(dir_); }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  std::filesystem::path dir_;
};

TEST_F(CliTest, RankPathTable) {
  const auto r = run({"rank", "--generate", "path:4", "--methods", "cqau,hits"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("hub scores"), std::string::npos);
  EXPECT_NE(r.out.find("1      0.13413   0.57735"), std::string::npos);
  EXPECT_NE(r.out.find("4      0.09760   0.00000"), std::string::npos);
  EXPECT_NE(r.err.find("warning: hits"), std::string::npos);
}

TEST_F(CliTest, RankJsonHasContractKeys) {
  const std::string file = path("g.mtx");
  std::ofstream(file) << "%%MatrixMarket matrix coordinate pattern general\n3 3 2\n1 2\n2 3\n";
  const auto r = run({"rank", "--input", file, "--methods", "bek", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  for (const char* key : {"\"graph\"", "\"results\"", "\"comparisons\"", "\"method\"", "\"hub\"",
                          "\"authority\"", "\"normalization\"", "\"bek\""}) {
    EXPECT_NE(r.out.find(key), std::string::npos) << key;
  }
}

TEST_F(CliTest, UsageErrors) {
  EXPECT_EQ(run({"rank", "--generate", "path:4", "--methods", "cqau,nope"}).code, 2);
  EXPECT_EQ(run({"rank", "--generate", "path:4"}).code, 2);
  EXPECT_EQ(run({"compare", "--generate", "path:4", "--methods", "hits"}).code, 2);
  EXPECT_EQ(run({"rank", "--methods", "hits"}).code, 2);
  EXPECT_EQ(run({"rank", "-g", "path:4", "-m", "hits", "--alpha", "2"}).code, 2);
  EXPECT_EQ(run({"generate", "path:1"}).code, 2);
  EXPECT_EQ(run({"generate", "wheel:5"}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST_F(CliTest, LoadFailureIsExitOne) {
  const std::string file = path("bad.txt");
  std::ofstream(file) << "1 2 3\n";
  const auto r = run({"rank", "--input", file, "--methods", "hits"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("error:"), std::string::npos);
  EXPECT_EQ(run({"rank", "--input", path("missing.txt"), "--methods", "hits"}).code, 1);
}

TEST_F(CliTest, CompareStarHubTauIsOne) {
  const auto r = run({"compare", "--generate", "star:4", "--methods", "hits,bek", "--k", "3"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("hub Kendall tau-b\n         HITS      BEK\nHITS    1.000    1.000"),
            std::string::npos)
      << r.out;
  EXPECT_NE(r.out.find("hub top-3 overlap"), std::string::npos);
}

TEST_F(CliTest, CompareSameMethodTwice) {
  const auto r = run({"compare", "-g", "diamond:5", "-m", "cqaw,cqaw", "-f", "csv"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("hub,tau,cqaw,cqaw,1\n"), std::string::npos);
  EXPECT_EQ(r.out.find("nan"), std::string::npos);
}

TEST_F(CliTest, GenerateExample5) {
  const std::string file = path("e5.txt");
  const auto r = run({"generate", "example5", "-o", file});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "n=4 edges=5\n");
  EXPECT_EQ(slurp(file), "n=4\n1 3\n2 1\n2 4\n3 2\n4 2\n");
}

TEST_F(CliTest, GenerateIsDeterministic) {
  const std::string a = path("a.txt");
  const std::string b = path("b.txt");
  ASSERT_EQ(run({"generate", "scalefree:128,0.4,0.55,0.05", "--seed", "7", "-o", a}).code, 0);
  ASSERT_EQ(run({"generate", "scalefree:128,0.4,0.55,0.05", "--seed", "7", "-o", b}).code, 0);
  EXPECT_EQ(slurp(a), slurp(b));
}

TEST_F(CliTest, GenerateThenRankEqualsInMemoryPipeline) {
  const std::string file = path("sf.txt");
  const std::string spec = "scalefree:40,0.4,0.55,0.05";
  ASSERT_EQ(run({"generate", spec, "--seed", "3", "-o", file}).code, 0);
  const auto r = run({"rank", "--input", file, "--methods", "cqau,cqaw,cqg,hits,pagerank,bek",
                      "--format", "csv"});
  ASSERT_EQ(r.code, 0) << r.err;

  const DirectedGraph g = generate_from_spec(spec, 3);
  const auto results = run_methods(g, parse_method_list("cqau,cqaw,cqg,hits,pagerank,bek"), 0.85);
  std::ostringstream expected;
  render_scores(expected, g, results, OutputFormat::csv);
  EXPECT_EQ(r.out, expected.str());
  EXPECT_EQ(r.out.rfind("node,method,hub,authority\n", 0), 0u);
}

TEST_F(CliTest, AlphaFlagChangesPageRank) {
  const auto a = run({"rank", "-g", "path:4", "-m", "pr", "-f", "csv"});
  const auto b = run({"rank", "-g", "path:4", "-m", "pr", "-f", "csv", "--alpha", "0.5"});
  ASSERT_EQ(a.code, 0);
  ASSERT_EQ(b.code, 0);
  EXPECT_NE(a.out, b.out);
}

TEST_F(CliTest, Info) {
  const std::string file = path("g.txt");
  std::ofstream(file) << "1 2\n2 2\n";
  const auto r = run({"info", "--input", file});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("dropped_self_loops=1"), std::string::npos);
}

TEST(GeneratorSpec, Parses) {
  EXPECT_EQ(generate_from_spec("tailed:4,4", {}).node_count(), 8u);
  EXPECT_EQ(generate_from_spec("scalefree:50", 1).node_count(), 50u);
  EXPECT_THROW(generate_from_spec("tailed:4", {}), UsageError);
  EXPECT_THROW(generate_from_spec("path:x", {}), UsageError);
  EXPECT_THROW(generate_from_spec("scalefree:50,0.5,0.5,0.5", {}), UsageError);
}

}  // namespace
}  // namespace qcentrality::cli
