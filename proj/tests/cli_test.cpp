#include <gtest/gtest.h>

#include <cstdlib>
#include <sstream>

#include <nlohmann/json.hpp>

#include "cli.hpp"

namespace swt::cli {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

void expect_error_line(const Result& r, const std::string& kind) {
  ASSERT_FALSE(r.err.empty());
  EXPECT_EQ(r.err.find('\n'), r.err.size() - 1) << r.err;
  const auto doc = nlohmann::json::parse(r.err);
  EXPECT_EQ(doc["error"], kind);
  EXPECT_TRUE(doc["message"].is_string());
}

TEST(Element, GoldenText) {
  const auto r = invoke({"element", "--n", "3", "--N", "4", "--f", "1,3,2,1", "--lambda", "3,1", "--t", "1,1,3/2",
                         "--y", "1,2,4/3"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_EQ(r.out, "5/12 (0.416667)\n");
}

TEST(Element, TrivialAndZero) {
  EXPECT_EQ(invoke({"element", "--n", "2", "--N", "1", "--f", "1", "--lambda", "1", "--t", "1", "--y", "1"}).out,
            "1 (1)\n");
  const auto zero =
      invoke({"element", "--n", "2", "--N", "2", "--f", "1,1", "--lambda", "1,1", "--t", "1/2", "--y", "1/2"});
  EXPECT_EQ(zero.code, kOk);
  EXPECT_EQ(zero.out, "0 (0)\n");
}

TEST(Element, FloatMode) {
  const auto r = invoke({"element", "--n", "2", "--N", "2", "--f", "2,1", "--lambda", "1,1", "--t", "1/2", "--y",
                         "1/2", "--mode", "float"});
  EXPECT_EQ(r.out, "-0.707107\n");
}

// Re-summing the traced per-edge values over all paths reproduces the amplitude.
TEST(Element, TraceResumsToAmplitude) {
  const auto r = invoke({"element", "--n", "3", "--N", "4", "--f", "1,3,2,1", "--lambda", "3,1", "--t", "1,1,3/2",
                         "--y", "1,2,4/3", "--trace", "--format", "json"});
  ASSERT_EQ(r.code, kOk);
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc["amplitude"]["exact"], "5/12");
  EXPECT_EQ(doc["paths"], 2);
  const auto& trace = doc["trace"];
  std::map<std::string, RadicalSum> weight = {{trace["levels"][0][0].get<std::string>(), RadicalSum(Rational(1))}};
  for (std::size_t level = 0; level + 1 < trace["levels"].size(); ++level) {
    std::map<std::string, RadicalSum> next;
    for (const auto& edge : trace["edges"]) {
      if (edge["level"] != level) continue;
      next[edge["to"]] += weight[edge["from"]] * radical_sum_from_json(edge["value"]);
    }
    weight = std::move(next);
  }
  ASSERT_EQ(weight.size(), 1u);
  EXPECT_EQ(weight.begin()->first, "3,1,0/2,1/2");
  EXPECT_EQ(weight.begin()->second, RadicalSum(make_rational(5, 12)));
}

TEST(Element, MalformedInputIsPositioned) {
  const auto r = invoke({"element", "--n", "3", "--N", "4", "--f", "1,3,2,1", "--lambda", "3,1", "--t", "1,1,3/2",
                         "--y", "1,2,4/2"});
  EXPECT_EQ(r.code, kInputError);
  expect_error_line(r, "input");
  EXPECT_EQ(nlohmann::json::parse(r.err)["position"], 6);

  const auto letter = invoke({"element", "--n", "2", "--N", "2", "--f", "1,3", "--lambda", "2", "--t", "1,2", "--y",
                              "1,2"});
  EXPECT_EQ(letter.code, kInputError);
  EXPECT_EQ(nlohmann::json::parse(letter.err)["position"], 2);

  const auto mismatch = invoke({"element", "--n", "2", "--N", "3", "--f", "1,2", "--lambda", "2", "--t", "1,2",
                                "--y", "1,2"});
  EXPECT_EQ(mismatch.code, kInputError);
  const auto shapes = invoke({"element", "--n", "2", "--N", "2", "--f", "1,2", "--lambda", "2", "--t", "1/2",
                              "--y", "1,2"});
  EXPECT_EQ(shapes.code, kInputError);
}

TEST(Arguments, ParseErrors) {
  const auto missing = invoke({"element", "--n", "2"});
  EXPECT_EQ(missing.code, kInputError);
  expect_error_line(missing, "input");
  EXPECT_EQ(invoke({}).code, kInputError);
  EXPECT_EQ(invoke({"frobnicate"}).code, kInputError);
  EXPECT_EQ(invoke({"matrix", "--n", "2", "--N", "2", "--format", "xml"}).code, kInputError);
  EXPECT_EQ(invoke({"matrix", "--n", "0", "--N", "2"}).code, kInputError);
  EXPECT_EQ(invoke({"--help"}).code, kOk);
}

TEST(Matrix, TwoQubitJson) {
  const auto r = invoke({"matrix", "--n", "2", "--N", "2", "--format", "json"});
  ASSERT_EQ(r.code, kOk);
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc["rows"].size(), 4u);
  EXPECT_EQ(doc["entries"].size(), 6u);
  int ones = 0;
  int halves = 0;
  for (const auto& e : doc["entries"]) {
    if (e[2] == nlohmann::json::parse("[[1,1,1]]")) ++ones;
    if (e[2] == nlohmann::json::parse("[[1,2,2]]") || e[2] == nlohmann::json::parse("[[-1,2,2]]")) ++halves;
  }
  EXPECT_EQ(ones, 2);
  EXPECT_EQ(halves, 4);
}

TEST(Matrix, DeterministicAcrossWorkerCounts) {
  const auto a = invoke({"matrix", "--n", "3", "--N", "3", "--workers", "1"});
  const auto b = invoke({"matrix", "--n", "3", "--N", "3", "--workers", "5"});
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(invoke({"matrix", "--n", "2", "--N", "3", "--format", "csv"}).out,
            invoke({"matrix", "--n", "2", "--N", "3", "--format", "csv"}).out);
}

TEST(Matrix, SingleLetterIdentity) {
  const auto doc = nlohmann::json::parse(invoke({"matrix", "--n", "1", "--N", "4"}).out);
  EXPECT_EQ(doc["entries"], nlohmann::json::parse("[[0,0,[[1,1,1]]]]"));
}

TEST(Matrix, SizeCap) {
  const auto r = invoke({"matrix", "--n", "2", "--N", "13"});
  EXPECT_EQ(r.code, kResourceCap);
  expect_error_line(r, "resource");
  EXPECT_EQ(nlohmann::json::parse(r.err)["cap"], 4096);
  EXPECT_NE(r.err.find("4096"), std::string::npos);
  EXPECT_EQ(invoke({"matrix", "--n", "3", "--N", "3", "--size-cap", "26"}).code, kResourceCap);
}

TEST(Matrix, SizeCapFromEnvironment) {
  ::setenv("SWT_SIZE_CAP", "8", 1);
  const auto r = invoke({"matrix", "--n", "2", "--N", "4"});
  ::unsetenv("SWT_SIZE_CAP");
  EXPECT_EQ(r.code, kResourceCap);
  EXPECT_EQ(nlohmann::json::parse(r.err)["cap"], 8);
}

TEST(Verify, PassingShapes) {
  for (const auto& [n, N] : std::vector<std::pair<const char*, const char*>>{{"2", "4"}, {"3", "3"}, {"1", "2"}}) {
    const auto r = invoke({"verify", "--n", n, "--N", N, "--seed", "7"});
    EXPECT_EQ(r.code, kOk) << r.err;
    const auto doc = nlohmann::json::parse(r.out);
    EXPECT_TRUE(doc["passed"].get<bool>());
    for (const char* check : {"unitarity", "selection", "census", "permutation", "coxeter", "torus"}) {
      EXPECT_TRUE(doc["checks"][check]["passed"].get<bool>()) << check;
    }
  }
  const auto a = invoke({"verify", "--n", "2", "--N", "3", "--seed", "3"});
  const auto b = invoke({"verify", "--n", "2", "--N", "3", "--seed", "3"});
  EXPECT_EQ(a.out, b.out);
}

TEST(Dims, CensusTable) {
  const auto r = invoke({"dims", "--n", "3", "--N", "4", "--format", "json"});
  ASSERT_EQ(r.code, kOk);
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc["total"], 81);
  bool found = false;
  for (const auto& row : doc["rows"]) {
    if (row["lambda"] == "3,1") {
      found = true;
      EXPECT_EQ(row["dim_symmetric"], 3);
      EXPECT_EQ(row["dim_unitary"], 15);
      EXPECT_EQ(row["product"], 45);
    }
  }
  EXPECT_TRUE(found);
  EXPECT_NE(invoke({"dims", "--n", "2", "--N", "2"}).out.find("total 4"), std::string::npos);
}

TEST(Bench, SmallTable) {
  const auto r = invoke({"bench", "--n", "2", "--min-N", "4", "--N", "6", "--samples", "20", "--seed", "5"});
  ASSERT_EQ(r.code, kOk);
  std::istringstream lines(r.out);
  std::string line;
  std::getline(lines, line);
  EXPECT_EQ(line, "N,mean_ns_dp,mean_ns_paths,path_count");
  int count = 0;
  while (std::getline(lines, line)) {
    ++count;
    EXPECT_EQ(line.substr(line.rfind(',') + 1), "1");  // two letters: one path
  }
  EXPECT_EQ(count, 3);
}

TEST(Bench, SingleLetterHasOnePath) {
  for (const auto& row : run_bench({1, 4, 8, 20, 1})) {
    EXPECT_EQ(row.path_count, 1u);
    EXPECT_TRUE(row.agree);
  }
}

TEST(Bench, RandomInstancesHaveMatchingWeights) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const BenchInstance in = random_instance(3, 7, seed);
    EXPECT_EQ(weight(in.t, 3), content(in.f));
    EXPECT_EQ(in.t.shape(), in.y.shape());
  }
}

}  // namespace
}  // namespace swt::cli
