#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "swt/swt.hpp"

namespace swt::cli {

enum ExitCode : int {
  kOk = 0,
  kVerificationFailed = 1,
  kInputError = 2,
  kResourceCap = 3,
};

// Runs one command line (without the program name). Documents go to out,
// single-line JSON error objects to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

struct BenchConfig {
  int n = 2;
  int min_N = 4;
  int max_N = 16;
  int samples = 20;
  std::uint64_t seed = 1;
  // Literal path enumeration is skipped for instances with more paths.
  std::uint64_t path_cap = 1u << 16;
};

struct BenchRow {
  int N = 0;
  double mean_ns_dp = 0.0;
  double max_ns_dp = 0.0;
  std::optional<double> mean_ns_paths;  // empty when any sample exceeded path_cap
  std::uint64_t path_count = 0;         // maximum over samples
  bool agree = true;                    // DP equals path sum on every enumerated sample
};

struct BenchInstance {
  Configuration f;
  Partition lambda;
  WeylTableau t;
  StandardTableau y;
};

// f uniform over the product basis; t and y are the insertion and recording
// tableaux of f, so weight(t) = content(f).
BenchInstance random_instance(int n, int N, std::uint64_t seed);

std::vector<BenchRow> run_bench(const BenchConfig& config);

void write_bench_csv(std::ostream& out, const std::vector<BenchRow>& rows);

}  // namespace swt::cli
