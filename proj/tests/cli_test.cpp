#include <gtest/gtest.h>

#include <sstream>

#include "json.hpp"
#include "test_util.hpp"
#include "textcx/cli.hpp"

namespace textcx {
namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "textcx");
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

TEST(Cli, AnalyzeJson) {
  testing::TempDir dir;
  const auto f = dir.write("sample.txt", "The cat sat. The cat ran.");
  const auto r = run({"analyze", f.string(), "--mode", "natural", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["L"], 8);
  EXPECT_EQ(j["D"], 5);
  EXPECT_EQ(j["name"], "sample.txt");
}

TEST(Cli, AnalyzeTableUsesFourDecimals) {
  testing::TempDir dir;
  const auto f = dir.write("p.cs", "int a = 1; // x\na = a + 1;");
  const auto r = run({"analyze", f.string()});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("mode      artificial"), std::string::npos);
  EXPECT_NE(r.out.find("d         0.5455"), std::string::npos) << r.out;
}

TEST(Cli, MissingFileIsDataError) {
  const auto r = run({"analyze", "/no/such/missing.txt"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("missing.txt"), std::string::npos);
  EXPECT_TRUE(r.out.empty());
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({"frobnicate"}).code, 1);
  EXPECT_EQ(run({"analyze"}).code, 1);
  EXPECT_EQ(run({"analyze", "x", "--bogus"}).code, 1);
  EXPECT_EQ(run({"analyze", "x", "--format", "yaml"}).code, 1);
  EXPECT_EQ(run({}).code, 1);
  EXPECT_NE(run({"frobnicate"}).err.find("Subcommands"), std::string::npos);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, Tokenize) {
  testing::TempDir dir;
  const auto f = dir.write("a.c", "x = \"a b\"; // gone");
  const auto r = run({"tokenize", f.string()});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "x\n=\n\"ab\"\n;\n");
  const auto n = run({"tokenize", f.string(), "--mode", "natural"});
  EXPECT_NE(n.out.find("gone"), std::string::npos);
}

TEST(Cli, CompareFixture) {
  const auto r = run({"compare", testing::fixture("appendix_a.csv"), "--groups", "english,spanish", "--column",
                      "J_1D", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  const double p = j["t_test"]["p"];
  EXPECT_GT(p, 6.58e-13);
  EXPECT_LT(p, 6.58e-11);
  EXPECT_EQ(j["groups"][0]["n"], 156);
  const auto table = run({"compare", testing::fixture("appendix_a.csv"), "--groups", "english,spanish"});
  EXPECT_NE(table.out.find("p-value=1.38e-11"), std::string::npos) << table.out;
  EXPECT_EQ(run({"compare", testing::fixture("appendix_a.csv"), "--groups", "english"}).code, 1);
  EXPECT_EQ(run({"compare", testing::fixture("appendix_a.csv"), "--groups", "english,klingon"}).code, 2);
}

TEST(Cli, FitCommands) {
  const auto h = run({"fit", "heaps", testing::fixture("appendix_a.csv"), "--label", "english", "--format", "json"});
  ASSERT_EQ(h.code, 0) << h.err;
  EXPECT_EQ(nlohmann::json::parse(h.out)["n_points"], 156);
  const auto a = run({"fit", "alpha", testing::fixture("appendix_a.csv"), "--label", "spanish", "--format", "json"});
  ASSERT_EQ(a.code, 0) << a.err;
  EXPECT_NEAR(nlohmann::json::parse(a.out)["q"].get<double>(), 0.176, 0.015);
  EXPECT_EQ(run({"fit", "zipf", testing::fixture("appendix_a.csv"), "--label", "x"}).code, 1);
}

TEST(Cli, CorpusIsDeterministic) {
  testing::TempDir dir;
  dir.write("c/english/a.txt", "The sun rose. The sun set.");
  dir.write("c/artificial/b.java", "int x = 1; /* y */ x++;");
  const auto lib1 = dir.path() / "l1.json", lib2 = dir.path() / "l2.json", rec = dir.path() / "r.csv";
  ASSERT_EQ(run({"corpus", (dir.path() / "c").string(), "--out", lib1.string(), "--records", rec.string()}).code, 0);
  ASSERT_EQ(run({"corpus", (dir.path() / "c").string(), "--out", lib2.string(), "--jobs", "1"}).code, 0);
  EXPECT_EQ(testing::slurp(lib1), testing::slurp(lib2));
  EXPECT_NO_THROW(nlohmann::json::parse(testing::slurp(lib1)));
  EXPECT_EQ(testing::slurp(rec).substr(0, 5), "name,");
  const auto ex = run({"export", lib1.string(), "--format", "json"});
  ASSERT_EQ(ex.code, 0);
  EXPECT_EQ(nlohmann::json::parse(ex.out).size(), 2u);
  EXPECT_EQ(run({"corpus", (dir.path() / "c").string(), "--mode-ext", "txt"}).code, 1);
}

TEST(Cli, ProfileAndSegment) {
  testing::TempDir dir;
  const auto f = dir.write("t.txt", "a a a a b b c d");
  const auto r = run({"profile", f.string(), "--segment", "1:4"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("# L=8 D=4 theta=2 L_tail=4"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("1\ta\t4\t0.5000\thead"), std::string::npos);
  EXPECT_NE(r.err.find("segment [1,4]"), std::string::npos);
  const auto csv = run({"profile", f.string(), "--format", "csv"});
  EXPECT_EQ(csv.out.substr(0, 17), "# L=8 D=4 theta=2");
  EXPECT_EQ(run({"profile", f.string(), "--segment", "3:2"}).code, 1);
  EXPECT_EQ(run({"profile", f.string(), "--segment", "1:9"}).code, 2);
}

TEST(Cli, PlotAndClassify) {
  const auto p = run({"plot", testing::fixture("appendix_a.csv"), "--figure", "fig3"});
  ASSERT_EQ(p.code, 0) << p.err;
  EXPECT_EQ(p.out.substr(0, 11), "x\ty\tseries\n");
  EXPECT_EQ(run({"plot", testing::fixture("appendix_a.csv"), "--figure", "fig1"}).code, 1);
  testing::TempDir dir;
  const auto f = dir.write("x.c", "int main() { int a = 0; for (a = 0; a < 10; a++) { f(a); } return a; }");
  const auto c = run({"classify", f.string(), "--models", testing::fixture("appendix_a.csv")});
  ASSERT_EQ(c.code, 0) << c.err;
  EXPECT_EQ(c.out.substr(0, 6), "label\t");
}

}  // namespace
}  // namespace textcx
