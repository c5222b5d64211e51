#include <gtest/gtest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace {

struct Run {
  int code = -1;
  std::string out;  // stdout and stderr together
};

Run run(const std::string& args) {
  const std::string cmd = std::string(SEQSPECTRA_CLI) + " " + args + " 2>&1";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream f(p, std::ios::binary);
  std::ostringstream os;
  os << f.rdbuf();
  return os.str();
}

std::filesystem::path tmp(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("seqspectra_cli_" + std::to_string(::getpid()) + "_" + name);
}

bool contains(const std::string& hay, const std::string& needle) { return hay.find(needle) != std::string::npos; }

}  // namespace

TEST(Cli, FieldInfo) {
  const auto r = run("field-info --p 3 --n 3 --k 1");
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(contains(r.out, "\"d\": \"20\""));
  EXPECT_TRUE(contains(r.out, "\"N\": \"26\""));
  EXPECT_TRUE(contains(r.out, "\"gcdDN\": \"2\""));
}

TEST(Cli, InvalidParamsExitTwo) {
  auto r = run("field-info --p 5 --n 3 --k 1");
  EXPECT_EQ(r.code, 2);
  EXPECT_TRUE(contains(r.out, "p ≡ 3 mod 4 violated"));
  r = run("field-info --p 3 --n 4 --k 1");
  EXPECT_EQ(r.code, 2);
  EXPECT_TRUE(contains(r.out, "n must be odd"));
  EXPECT_EQ(run("vdist --p 3 --n 3 --k 2").code, 2);
  EXPECT_EQ(run("vdist --p 3 --n 15 --k 1 --cap 1000").code, 2);
  EXPECT_EQ(run("vdist --p 3 --n 3 --k 1 --format xml").code, 2);
  EXPECT_EQ(run("vdist --p 3 --n 3").code, 2);
  EXPECT_EQ(run("--p 3 --n 3 --k 1").code, 2);
}

TEST(Cli, CorruptedDecimationRejected) {
  const auto r = run("verify --p 3 --n 3 --k 1 --d 21");
  EXPECT_EQ(r.code, 2);
  EXPECT_TRUE(contains(r.out, "d does not match"));
  EXPECT_EQ(run("field-info --p 3 --n 3 --k 1 --d 20").code, 0);
}

TEST(Cli, VdistCsv) {
  const auto path = tmp("vdist.csv");
  const auto r = run("vdist --p 3 --n 3 --k 1 --format csv --out " + path.string());
  EXPECT_EQ(r.code, 0);
  const std::string text = slurp(path);
  std::filesystem::remove(path);
  std::istringstream is(text);
  std::string line;
  std::getline(is, line);
  EXPECT_EQ(line, "twoA,twoB,re,im,count_bruteforce,count_closedform,match");
  int rows = 0, matches = 0, moments = 0;
  while (std::getline(is, line)) {
    if (line.rfind("# moment", 0) == 0) {
      ++moments;
      EXPECT_TRUE(contains(line, "pass"));
      continue;
    }
    ++rows;
    matches += contains(line, ",true");
  }
  EXPECT_EQ(rows, 10);
  EXPECT_EQ(matches, 10);
  EXPECT_EQ(moments, 3);
  EXPECT_TRUE(contains(text, "-9,-3,-4.500000,-2.598076,78,78,true"));
}

TEST(Cli, VdistDegenerateRowsShowZero) {
  const auto r = run("vdist --p 3 --n 3 --k 3 --format csv");
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(contains(r.out, "0,-84,0.000000,-72.746134,0,0,true"));  // -j(p^k+1)p^{n/2}/2
  EXPECT_TRUE(contains(r.out, "0,84,0.000000,72.746134,0,0,true"));
}

TEST(Cli, VdistJson) {
  const auto r = run("vdist --p 3 --n 3 --k 1");
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(contains(r.out, "\"countBruteforce\": \"182\""));
  EXPECT_TRUE(contains(r.out, "\"allMatch\": true"));
}

TEST(Cli, Family) {
  auto r = run("family --p 3 --n 3 --k 1");
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(contains(r.out, "\"boundSquaredTimes4\": \"436\""));
  EXPECT_TRUE(contains(r.out, "\"maxObservedSquaredTimes4\": \"436\""));
  r = run("family --p 3 --n 3 --k 1 --scope out-of-phase-auto --format csv");
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(contains(r.out, "twoA,twoB,re,im,count,normTimes4"));
  EXPECT_EQ(run("family --p 3 --n 3 --k 1 --scope \"\"").code, 2);
  EXPECT_EQ(run("family --p 3 --n 3 --k 1 --scope bogus").code, 2);
}

TEST(Cli, CodeWeights) {
  const auto r = run("code-weights --p 3 --n 3 --k 1 --format csv");
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(contains(r.out, "weight,count_enumerated,count_closedform,match\n0,1,1,true\n15,312,312,true\n"
                              "18,260,260,true\n21,156,156,true\n"));
  EXPECT_TRUE(contains(r.out, "# total 729 expected 729 pass"));
}

TEST(Cli, Verify) {
  const auto r = run("verify --p 3 --n 3 --k 1 --threads 2");
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_TRUE(contains(r.out, "\"allPass\": true"));
  EXPECT_FALSE(contains(r.out, "\"pass\": false"));
}

TEST(Cli, OutputIndependentOfThreads) {
  const auto a = run("vdist --p 7 --n 3 --k 1 --threads 1");
  const auto b = run("vdist --p 7 --n 3 --k 1 --threads 8");
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
}
