#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "uvd/cli.hpp"
#include "uvd/generators.hpp"
#include "uvd/io.hpp"

namespace fs = std::filesystem;

namespace {

struct Invocation {
  int code;
  std::string out, err;
};

Invocation uvd_run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = uvd::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("uvd_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  std::string write(const std::string& name, const std::string& text) const {
    std::ofstream(path(name)) << text;
    return path(name);
  }

  static std::string read(const std::string& p) {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }

  fs::path dir_;
};

bool contains(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

}  // namespace

TEST_F(Cli, GeneratePath) {
  const Invocation r = uvd_run({"generate", "path", "5"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "5 4\n0 1\n1 2\n2 3\n3 4\n");
  EXPECT_TRUE(contains(r.err, "lower_bound=3"));
  EXPECT_TRUE(contains(r.err, "admissible=yes"));
}

TEST_F(Cli, GenerateFamilies) {
  EXPECT_TRUE(contains(uvd_run({"generate", "cycle", "3"}).out, "3 3\n"));
  EXPECT_TRUE(contains(uvd_run({"generate", "cbt", "2"}).out, "7 6\n"));
  EXPECT_TRUE(contains(uvd_run({"generate", "complete", "4"}).out, "4 6\n"));
  EXPECT_TRUE(contains(uvd_run({"generate", "star", "2,2,1"}).out, "6 5\n"));
  const Invocation a = uvd_run({"generate", "random", "10", "0.4", "--seed", "7"});
  const Invocation b = uvd_run({"generate", "random", "10", "0.4", "--seed", "7"});
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  std::istringstream in(a.out);
  EXPECT_EQ(uvd::read_graph_text(in), uvd::random_admissible_graph(10, 0.4, 7));
}

TEST_F(Cli, GenerateErrors) {
  EXPECT_NE(uvd_run({"generate", "path"}).code, 0);
  EXPECT_NE(uvd_run({"generate", "path", "x"}).code, 0);
  EXPECT_NE(uvd_run({"generate", "cycle", "2"}).code, 0);
  EXPECT_NE(uvd_run({"generate", "moebius", "5"}).code, 0);
  EXPECT_NE(uvd_run({"generate", "random", "10", "2.5"}).code, 0);
  EXPECT_FALSE(uvd_run({"generate", "star", "3"}).err.empty());
  EXPECT_NE(uvd_run({}).code, 0);
}

TEST_F(Cli, ColorPathThree) {
  const std::string g = write("p3.g", "3 2\n0 1\n1 2\n");
  const Invocation r = uvd_run({"color", g, "--strategy", "path"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "0 1 : 1\n1 2 : 2\n");
  EXPECT_TRUE(contains(r.err, "optimal (2 colors)"));
}

TEST_F(Cli, ColorCycleSevenNotesExactValue) {
  uvd_run({"generate", "cycle", "7", "-o", path("c7.g")});
  const Invocation r = uvd_run({"color", path("c7.g"), "--strategy", "cycle", "-o", path("c7.col")});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(contains(r.out, "+1 over lower bound"));
  EXPECT_TRUE(contains(r.out, "chi_union(C_7) = 4"));
  EXPECT_EQ(uvd_run({"verify", path("c7.g"), path("c7.col")}).out, "VALID, 4 colors used\n");
}

TEST_F(Cli, AutoDetectsRelabelledFamilies) {
  // Path 3 - 0 - 4 - 1 - 2, cycle with shuffled labels, and a tree.
  const std::string p = write("p.g", "5 4\n3 0\n0 4\n4 1\n1 2\n");
  const std::string c = write("c.g", "5 5\n0 3\n3 1\n1 4\n4 2\n2 0\n");
  const std::string t = write("t.g", "7 6\n3 0\n3 6\n0 1\n0 2\n6 4\n6 5\n");
  EXPECT_TRUE(contains(uvd_run({"color", p}).err, "strategy: path"));
  EXPECT_TRUE(contains(uvd_run({"color", c}).err, "strategy: cycle"));
  EXPECT_TRUE(contains(uvd_run({"color", t}).err, "strategy: cbt"));
  for (const std::string& g : {p, c, t}) {
    const Invocation r = uvd_run({"color", g, "-o", path("out.col")});
    ASSERT_EQ(r.code, 0);
    EXPECT_TRUE(contains(r.out, "optimal"));
    EXPECT_EQ(uvd_run({"verify", g, path("out.col")}).code, 0);
  }
  const std::string other = write("o.g", "4 4\n0 1\n1 2\n2 0\n2 3\n");
  EXPECT_TRUE(contains(uvd_run({"color", other}).err, "strategy: general"));
}

TEST_F(Cli, ForcedStrategyMismatch) {
  const std::string c = write("c.g", "4 4\n0 1\n1 2\n2 3\n3 0\n");
  EXPECT_EQ(uvd_run({"color", c, "--strategy", "path"}).code, 3);
  EXPECT_EQ(uvd_run({"color", c, "--strategy", "cbt"}).code, 3);
  EXPECT_EQ(uvd_run({"color", c, "--strategy", "cycle"}).code, 0);
  EXPECT_EQ(uvd_run({"color", c, "--strategy", "bogus"}).code, 2);
}

TEST_F(Cli, Inadmissible) {
  const std::string g = write("bad.g", "4 2\n0 1\n2 3\n");
  EXPECT_EQ(uvd_run({"color", g}).code, 3);
  EXPECT_EQ(uvd_run({"chi", g}).code, 3);
  EXPECT_EQ(uvd_run({"bound", g}).code, 3);
}

TEST_F(Cli, VerifyDiagnostics) {
  const std::string g = write("p3.g", "3 2\n0 1\n1 2\n");
  const Invocation ok = uvd_run({"verify", g, write("ok.col", "0 1 : 1\n1 2 : 2\n"), "--codes"});
  EXPECT_EQ(ok.code, 0);
  EXPECT_EQ(ok.out, "0 {1}\n1 {1,2}\n2 {2}\nVALID, 2 colors used\n");

  const Invocation mono = uvd_run({"verify", g, write("mono.col", "0 1 : 1\n1 2 : 1\n")});
  EXPECT_EQ(mono.code, 1);
  EXPECT_TRUE(contains(mono.out, "clash: vertices 0 and 1, code {1}"));

  const Invocation empty = uvd_run({"verify", g, write("empty.col", "0 1 : 1\n1 2 :\n")});
  EXPECT_EQ(empty.code, 1);
  EXPECT_TRUE(contains(empty.out, "empty edge: 1 2"));

  EXPECT_EQ(uvd_run({"verify", g, write("short.col", "0 1 : 1\n")}).code, 2);
  EXPECT_EQ(uvd_run({"verify", g, path("missing.col")}).code, 2);
  EXPECT_EQ(uvd_run({"verify", write("junk.g", "three\n"), path("ok.col")}).code, 2);
  EXPECT_EQ(uvd_run({"verify", g}).code, 2);
}

TEST_F(Cli, Chi) {
  uvd_run({"generate", "cycle", "7", "-o", path("c7.g")});
  uvd_run({"generate", "cycle", "3", "-o", path("c3.g")});
  uvd_run({"generate", "path", "7", "-o", path("p7.g")});
  EXPECT_EQ(uvd_run({"chi", path("c7.g")}).out, "chi_union = 4 (proved)\n");
  EXPECT_EQ(uvd_run({"chi", path("c3.g")}).out, "chi_union = 3 (proved)\n");
  EXPECT_EQ(uvd_run({"chi", path("p7.g")}).out, "chi_union = 3 (proved)\n");
  const Invocation cut = uvd_run({"chi", path("c7.g"), "--budget", "3"});
  EXPECT_EQ(cut.code, 4);
  EXPECT_TRUE(contains(cut.out, "chi_union in [3,"));
  EXPECT_TRUE(contains(cut.out, "(budget exceeded)"));
  const Invocation witness = uvd_run({"chi", path("c7.g"), "--jobs", "3", "-o", path("w.col")});
  EXPECT_EQ(witness.code, 0);
  EXPECT_EQ(uvd_run({"verify", path("c7.g"), path("w.col")}).code, 0);
}

TEST_F(Cli, Bound) {
  uvd_run({"generate", "complete", "7", "-o", path("k7.g")});
  const Invocation r = uvd_run({"bound", path("k7.g")});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(contains(r.out, "lower_bound = 3"));
  EXPECT_TRUE(contains(r.out, "upper_bound = 5"));
}

TEST_F(Cli, ExportDotAndJson) {
  const std::string g = write("p3.g", "3 2\n0 1\n1 2\n");
  const std::string c = write("p3.col", "0 1 : 1\n1 2 : 2\n");
  const Invocation dot = uvd_run({"export", g, c, "--format", "dot"});
  EXPECT_EQ(dot.code, 0);
  EXPECT_TRUE(contains(dot.out, "label=\"{1}\""));
  EXPECT_TRUE(contains(dot.out, "label=\"id={1,2}\""));

  EXPECT_EQ(uvd_run({"export", g, c, "--format", "json", "-o", path("p3.json")}).code, 0);
  std::ifstream in(path("p3.json"));
  const uvd::JsonDocument doc = uvd::read_json(in);
  ASSERT_TRUE(doc.coloring);
  EXPECT_EQ(*doc.coloring, (uvd::Coloring{2, {{1}, {2}}}));
  EXPECT_EQ(uvd_run({"verify", path("p3.json")}).code, 0);
  EXPECT_EQ(uvd_run({"export", g, write("bad.col", "0 1 : 1\n")}).code, 2);
}

TEST_F(Cli, Witness) {
  uvd_run({"generate", "cycle", "15", "-o", path("c15.g")});
  const Invocation seed = uvd_run({"witness", path("c15.g"), "-k", "4", "--seed"});
  EXPECT_EQ(seed.code, 0);
  EXPECT_EQ(seed.out, read(GOLDEN_DIR "/c15_seed.txt"));
  uvd_run({"generate", "cycle", "7", "-o", path("c7.g")});
  EXPECT_EQ(uvd_run({"witness", path("c7.g"), "-k", "3"}).code, 1);
  EXPECT_EQ(uvd_run({"witness", path("c7.g"), "-k", "3", "--seed"}).code, 1);
  EXPECT_EQ(uvd_run({"witness", path("c7.g"), "-k", "3", "--budget", "2"}).code, 4);
  EXPECT_EQ(uvd_run({"witness", path("c7.g"), "-k", "4"}).code, 0);
}

TEST_F(Cli, SeedDirectoryOverridesBuiltinSeed) {
  // A C15 seed that differs from the built-in one.
  write("c15_seed.txt",
        "0 1 : 1\n1 2 : 1 2 4\n2 3 : 3\n3 4 : 2\n4 5 : 4\n5 6 : 4\n6 7 : 3 4\n7 8 : 2\n"
        "8 9 : 2\n9 10 : 1 2\n10 11 : 3\n11 12 : 3\n12 13 : 1 3\n13 14 : 1 4\n0 14 : 1\n");
  uvd_run({"generate", "cycle", "31", "-o", path("c31.g")});
  const std::string builtin = uvd_run({"color", path("c31.g")}).out;
  ::setenv("UVD_SEED_DIR", dir_.c_str(), 1);
  const Invocation custom = uvd_run({"color", path("c31.g"), "-o", path("c31.col")});
  ::unsetenv("UVD_SEED_DIR");
  EXPECT_EQ(custom.code, 0);
  EXPECT_NE(read(path("c31.col")), builtin);
  EXPECT_EQ(uvd_run({"verify", path("c31.g"), path("c31.col")}).code, 0);

  write("c15_seed.txt", "0 1 : 1\n");
  ::setenv("UVD_SEED_DIR", dir_.c_str(), 1);
  EXPECT_EQ(uvd_run({"color", path("c31.g")}).code, 2);
  ::unsetenv("UVD_SEED_DIR");
}

TEST_F(Cli, Help) {
  const Invocation r = uvd_run({"--help"});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(contains(r.out, "generate"));
}
