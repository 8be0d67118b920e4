#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cstdio>
#include <json.hpp>
#include <string>

namespace {

struct Run {
  int status;
  std::string out;
};

Run run(const std::string& args) {
  std::string cmd = std::string(ROOKSUM_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return {-1, ""};
  std::string out;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
  int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

}  // namespace

TEST(Cli, MinpolGoldenSmall) {
  auto r = run("minpol-table --n 3 --golden");
  EXPECT_EQ(r.status, 0) << r.out;
  EXPECT_NE(r.out.find("PASS"), std::string::npos);
}

TEST(Cli, MinpolSingleRow) {
  auto r = run("minpol-table --n 1 --format tsv");
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out, "n\ta\tb\tc\tminpol\n1\t0\t0\t0\tx-1\n");
}

TEST(Cli, MinpolJsonRowCount) {
  auto r = run("minpol-table --n 5 --format json");
  ASSERT_EQ(r.status, 0);
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j.size(), 15u);
  EXPECT_EQ(j[0]["minpol"], "(x-120)*x");
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run("").status, 2);
  EXPECT_EQ(run("no-such-command").status, 2);
  EXPECT_EQ(run("minpol-table --n x").status, 2);
  EXPECT_EQ(run("minpol-table --n 3 --format xml").status, 2);
  EXPECT_EQ(run("ideal-suite --n 3 --k 1 --field Fp:8").status, 2);
  EXPECT_EQ(run("ideal-suite --n 3 --k -1").status, 2);
  EXPECT_EQ(run("mixed-quotient --n 3 --k 1").status, 2);
}

TEST(Cli, CapsNeedOverride) {
  EXPECT_EQ(run("minpol-table --n 7").status, 2);
  EXPECT_EQ(run("dalg-stats --n 6").status, 2);
  EXPECT_EQ(run("ideal-suite --n 6 --k 2").status, 2);
  EXPECT_EQ(run("annihilators --n 3 --k 4").status, 2);
  EXPECT_EQ(run("annihilators --n 6 --k 2").status, 2);
  EXPECT_EQ(run("dalg-stats --n 1 --unsafe-cap").status, 0);
}

TEST(Cli, IdealSuiteRanks) {
  auto r = run("ideal-suite --n 4 --k 2 --format json");
  ASSERT_EQ(r.status, 0) << r.out;
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["result"], "pass");
  bool saw = false;
  for (const auto& c : j["checks"]) {
    if (c["ranks"].contains("rank_I")) {
      saw = true;
      EXPECT_EQ(c["ranks"]["rank_I"], 14);
      EXPECT_EQ(c["ranks"]["rank_J"], 10);
    }
  }
  EXPECT_TRUE(saw);
  auto z = run("ideal-suite --n 2 --k 0 --format tsv");
  EXPECT_EQ(z.status, 0);
  EXPECT_NE(z.out.find("rank_I\t0"), std::string::npos);
  EXPECT_NE(z.out.find("rank_J\t2"), std::string::npos);
}

TEST(Cli, IdealSuitePrimeField) {
  auto r = run("ideal-suite --n 5 --k 3 --field Fp:7 --format json --trials 40");
  ASSERT_EQ(r.status, 0) << r.out;
  auto j = nlohmann::json::parse(r.out);
  for (const auto& c : j["checks"]) EXPECT_NE(c["result"], "skipped") << c["check"];
}

TEST(Cli, DeltaStats) {
  auto r = run("dalg-stats --n 4 --golden --format json");
  ASSERT_EQ(r.status, 0) << r.out;
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["dim"], 70);
  EXPECT_EQ(j["center_dim"], 5);
  EXPECT_EQ(j["radical_dim"], 39);
}

TEST(Cli, CountsAndFuzz) {
  auto c = run("counts --n 5 --k 2 --format tsv");
  EXPECT_EQ(c.status, 0);
  EXPECT_NE(c.out.find("avoiders\t42"), std::string::npos) << c.out;
  auto f = run("product-fuzz --n 5 --trials 200 --seed 7 --format tsv");
  EXPECT_EQ(f.status, 0);
  EXPECT_NE(f.out.find("quadruples\t200"), std::string::npos) << f.out;
  EXPECT_NE(f.out.find("matches\t200"), std::string::npos) << f.out;
}

TEST(Cli, CrossCharAndMixedQuotient) {
  EXPECT_NE(run("cross-char --n 3 --format tsv").out.find("\tQ\t4\n"), std::string::npos);
  EXPECT_NE(run("cross-char --n 3 --field Fp:2 --format tsv").out.find("\tFp:2\t5\n"), std::string::npos);
  EXPECT_EQ(run("mixed-quotient --n 4 --k 2 --l 1 --field Fp:3").status, 0);
  EXPECT_EQ(run("annihilators --n 4 --k 2").status, 0);
}

TEST(Cli, RepeatedRunsAreByteIdentical) {
  for (const char* args : {"product-fuzz --n 4 --trials 50 --seed 11 --format json", "ideal-suite --n 4 --k 1",
                           "minpol-table --n 4 --golden"}) {
    auto a = run(args), b = run(args);
    EXPECT_EQ(a.status, b.status);
    EXPECT_EQ(a.out, b.out) << args;
  }
}

TEST(Cli, WritesOutputFile) {
  std::string path = testing::TempDir() + "rooksum_cli_out.tsv";
  auto r = run("minpol-table --n 2 --format tsv --out " + path);
  EXPECT_EQ(r.status, 0);
  EXPECT_TRUE(r.out.empty());
  FILE* f = std::fopen(path.c_str(), "r");
  ASSERT_NE(f, nullptr);
  char buf[256] = {};
  std::size_t got = std::fread(buf, 1, sizeof buf - 1, f);
  std::fclose(f);
  EXPECT_EQ(std::string(buf, got).rfind("n\ta\tb\tc\tminpol\n", 0), 0u);
}
