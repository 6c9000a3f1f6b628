#include <gtest/gtest.h>

#include <cstdlib>
#include <sstream>

#include "cli.hpp"
#include "qtail/qfun.hpp"
#include "qtail/series.hpp"
#include "qtail/tails.hpp"
#include "support.hpp"

using namespace qtail;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST(Cli, TailJsonIsEulerWindow) {
  const Result r = run({"tail", "--family", "torus-odd", "--k", "1", "--terms", "30", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const TruncatedSeries s = series_from_json(r.out);
  EXPECT_EQ(s.trunc(), 30);
  EXPECT_EQ(qtail::testing::window(s, 30), qtail::testing::pentagonal(30));
}

TEST(Cli, JsonRoundTripsForEveryFamily) {
  for (const char* family : {"torus-odd", "torus-even", "phi", "lk-product", "lk-multisum"}) {
    const Result r = run({"tail", "--family", family, "--k", "2", "--u", "2", "--terms", "64", "--format", "json"});
    ASSERT_EQ(r.code, 0) << r.err;
    const TailFamily f = *parse_family(family);
    EXPECT_EQ(series_from_json(r.out), evaluate_tail({f, 2, 2, 64})) << family;
  }
}

TEST(Cli, CorollaryVerifies) {
  const Result r = run({"verify", "--identity", "corollary", "--k", "2", "--terms", "150"});
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_NE(r.out.find("verified"), std::string::npos);
}

TEST(Cli, PerturbedCorollaryFailsAtSeven) {
  const Result r = run({"verify", "--identity", "corollary", "--k", "2", "--terms", "150", "--perturb"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("first mismatch at q^7"), std::string::npos) << r.out;
  const Result j = run({"verify", "--identity", "corollary", "--k", "2", "--terms", "150", "--perturb", "--format",
                        "json"});
  EXPECT_EQ(j.code, 1);
  EXPECT_NE(j.out.find("\"first_mismatch\": \"7\""), std::string::npos) << j.out;
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"tail"}).code, 2);
  EXPECT_EQ(run({"tail", "--family", "nope"}).code, 2);
  EXPECT_EQ(run({"tail", "--family", "phi", "--k", "0"}).code, 2);
  EXPECT_EQ(run({"verify", "--identity", "nope"}).code, 2);
  EXPECT_EQ(run({"tail", "--family", "phi", "--format", "xml"}).code, 2);
  const Result r = run({"skein-coeff", "theta", "--args", "1,1"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("error:"), std::string::npos);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, SkeinCoeff) {
  const Result d = run({"skein-coeff", "delta", "--args", "2"});
  EXPECT_EQ(d.code, 0);
  EXPECT_EQ(d.out, "q^(-1) + 1 + q\n");
  const Result closed = run({"skein-coeff", "gamma", "--args", "2,1,1", "--terms", "8", "--format", "json"});
  const Result assembled =
      run({"skein-coeff", "gamma", "--args", "2,1,1", "--terms", "8", "--format", "json", "--method", "definitional"});
  EXPECT_EQ(closed.code, 0);
  EXPECT_EQ(closed.out, assembled.out);
  for (const char* name : {"theta", "theta-nn2i", "bubble", "bubble-nann", "bubble-sym", "E", "P", "C"}) {
    std::string args = "2,2,2";
    if (std::string(name) == "theta-nn2i") args = "2,1";
    if (std::string(name) == "bubble") args = "2,2,2,2,1";
    if (std::string(name) == "bubble-sym") args = "2,1,1";
    if (std::string(name) == "C") args = "2,1,1";
    if (std::string(name) == "E" || std::string(name) == "P") args = "2,2,1";
    EXPECT_EQ(run({"skein-coeff", name, "--args", args, "--terms", "6"}).code, 0) << name;
  }
}

TEST(Cli, JonesMatchesTail) {
  const Result r = run({"jones", "--pretzel", "3,2,3", "--tail", "phi", "--k", "1", "--u", "1"});
  EXPECT_EQ(r.code, 0) << r.out << r.err;
  const Result bad = run({"jones", "--pretzel", "1,1,1", "--tail", "phi"});
  EXPECT_EQ(bad.code, 1);
  EXPECT_EQ(run({"jones", "--pretzel", "2,2,2"}).code, 2);
  EXPECT_EQ(run({"jones", "--pretzel", "2,2,2", "--allow-links"}).code, 0);
  EXPECT_EQ(run({"jones", "--pd", "X[1,5,2,4];X[3,1,4,6];X[5,3,6,2]", "--format", "json"}).code, 0);
}

TEST(Cli, JobsDoNotChangeOutput) {
  const std::vector<std::vector<std::string>> commands{
      {"tail", "--family", "phi", "--k", "2", "--u", "2", "--terms", "120", "--format", "json"},
      {"verify", "--identity", "routes-lk", "--n", "3", "--format", "json"},
      {"stabilize", "--family", "phi", "--k", "2", "--u", "1", "--n", "5", "--format", "csv"},
      {"jones", "--pretzel", "3,3,2,3", "--format", "json"}};
  for (auto cmd : commands) {
    auto one = cmd;
    one.insert(one.end(), {"--jobs", "1"});
    auto eight = cmd;
    eight.insert(eight.end(), {"--jobs", "8"});
    const Result a = run(one);
    const Result b = run(eight);
    EXPECT_EQ(a.code, b.code);
    EXPECT_EQ(a.out, b.out) << cmd.front();
  }
}

TEST(Cli, JobsEnvironmentOverride) {
  ::setenv("QTAIL_JOBS", "0", 1);
  EXPECT_EQ(run({"tail", "--family", "phi"}).code, 2);
  ::setenv("QTAIL_JOBS", "3", 1);
  EXPECT_EQ(run({"tail", "--family", "phi", "--terms", "20"}).code, 0);
  ::unsetenv("QTAIL_JOBS");
}
