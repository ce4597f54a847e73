#include "cli.hpp"

#include <chrono>
#include <cstdlib>
#include <iomanip>
#include <random>
#include <sstream>

#if __has_include(<CLI/CLI.hpp>)
#include <CLI/CLI.hpp>
#else
#include <CLI11.hpp>
#endif
#include <nlohmann/json.hpp>

namespace swt::cli {

namespace {

using json = nlohmann::json;

struct Request {
  int n = 0;
  int N = 0;
  std::string f;
  std::string lambda;
  std::string t;
  std::string y;
  std::string format;
  std::string mode = "exact";
  bool trace = false;
  std::uint64_t seed = 1;
  std::uint64_t size_cap = kDefaultSizeCap;
  unsigned workers = 0;
  int min_N = 4;
  int samples = 20;
  std::uint64_t path_cap = 1u << 16;
  bool assembly = false;
};

std::uint64_t default_size_cap() {
  if (const char* env = std::getenv("SWT_SIZE_CAP")) {
    char* end = nullptr;
    const unsigned long long value = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && value > 0) return value;
    throw std::invalid_argument(std::string("SWT_SIZE_CAP must be a positive integer, got '") + env + "'");
  }
  return kDefaultSizeCap;
}

void add_shape(CLI::App* cmd, Request& r, bool required = true) {
  auto* n = cmd->add_option("--n", r.n, "alphabet size (number of levels per node)")->check(CLI::Range(1, 64));
  auto* N = cmd->add_option("--N", r.N, "number of nodes")->check(CLI::Range(1, 64));
  if (required) {
    n->required();
    N->required();
  }
}

void add_common(CLI::App* cmd, Request& r, const std::string& default_format) {
  cmd->add_option("--format", r.format, "output format (default " + default_format + ")")
      ->check(CLI::IsMember({"json", "csv", "text"}));
  cmd->add_option("--mode", r.mode, "exact radicals or floating values")
      ->check(CLI::IsMember({"exact", "float"}))
      ->capture_default_str();
  cmd->add_option("--seed", r.seed, "seed for randomized checks")->capture_default_str();
  cmd->add_option("--size-cap", r.size_cap, "maximum matrix dimension n^N (env SWT_SIZE_CAP)")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmd->add_flag("--trace", r.trace, "emit the interference graph");
}

std::string float_text(double value) {
  std::ostringstream out;
  out << value;
  return out.str();
}

json amplitude_json(const RadicalSum& value) {
  return {{"exact", to_string(value)}, {"terms", to_json(value)}, {"float", value.to_double()}};
}

int cmd_element(const Request& r, std::ostream& out) {
  const Configuration f = parse_configuration(r.f, r.n);
  if (f.size() != r.N) {
    throw std::invalid_argument("--f has " + std::to_string(f.size()) + " letters but --N is " + std::to_string(r.N));
  }
  const Partition lambda = parse_partition(r.lambda, 0);
  if (lambda.length() > r.n) throw std::invalid_argument("--lambda has more than n nonzero parts");
  const WeylTableau t = parse_weyl_tableau(r.t);
  const StandardTableau y = parse_standard_tableau(r.y);
  const RadicalSum value = amplitude(f, lambda.padded(r.n), t, y);

  if (r.format == "json") {
    json doc = {{"f", format_configuration(f)},
                {"lambda", format_partition(lambda)},
                {"t", format_tableau(t)},
                {"y", format_tableau(y)},
                {"amplitude", amplitude_json(value)},
                {"paths", path_count(f, lambda.padded(r.n), t, y)}};
    if (r.trace) doc["trace"] = to_json(build_graph(f, y, t));
    out << doc.dump() << '\n';
    return kOk;
  }
  if (r.format == "csv") {
    out << "exact,float\n\"" << to_string(value) << "\"," << std::setprecision(17) << value.to_double() << '\n';
  } else if (r.mode == "float") {
    out << float_text(value.to_double()) << '\n';
  } else {
    out << to_string(value) << " (" << float_text(value.to_double()) << ")\n";
  }
  if (r.trace) out << to_json(build_graph(f, y, t)).dump() << '\n';
  return kOk;
}

int cmd_matrix(const Request& r, std::ostream& out) {
  const SWMatrix m = assemble(SystemShape(r.n, r.N), {r.size_cap, r.workers});
  if (r.format == "json") {
    out << to_json(m, r.mode == "exact" ? EntryEncoding::kExact : EntryEncoding::kFloat).dump() << '\n';
  } else if (r.format == "csv") {
    write_csv(out, m);
  } else {
    out << "# " << m.dimension() << "x" << m.dimension() << ", " << m.nonzero_count() << " nonzero\n";
    for (std::size_t c = 0; c < m.columns().size(); ++c) {
      const auto& key = m.columns()[c];
      for (const auto& [row, value] : m.column(c)) {
        out << format_configuration(m.rows()[row]) << " | " << format_partition(key.lambda) << ' '
            << format_tableau(key.t) << ' ' << format_tableau(key.y) << " : ";
        if (r.mode == "exact") out << to_string(value) << " (" << float_text(value.to_double()) << ")\n";
        else out << float_text(value.to_double()) << '\n';
      }
    }
  }
  return kOk;
}

json census_json(const CensusReport& report) {
  json rows = json::array();
  for (const auto& row : report.rows) {
    rows.push_back({{"lambda", format_partition(row.lambda)},
                    {"dim_symmetric", row.dim_symmetric},
                    {"dim_unitary", row.dim_unitary},
                    {"product", row.product},
                    {"enumerated", row.enumerated},
                    {"syt_count", row.syt_count},
                    {"sswt_count", row.sswt_count}});
  }
  return {{"rows", std::move(rows)}, {"total", report.total}, {"expected", report.expected},
          {"passed", report.passed()}};
}

int cmd_verify(const Request& r, std::ostream& out, std::ostream& err) {
  const SystemShape shape(r.n, r.N);
  const SWMatrix m = assemble(shape, {r.size_cap, r.workers});
  json checks;
  std::vector<std::string> failed;
  auto record = [&](const std::string& name, json body, bool passed) {
    body["passed"] = passed;
    checks[name] = std::move(body);
    if (!passed) failed.push_back(name);
  };

  if (r.mode == "exact") {
    const UnitarityReport u = check_unitarity(m);
    record("unitarity",
           {{"mode", "exact"},
            {"exact_identity", u.exact_identity},
            {"nonzero_off_diagonal", u.nonzero_off_diagonal},
            {"diagonal_mismatches", u.diagonal_mismatches},
            {"max_off_diagonal", u.max_off_diagonal},
            {"max_diagonal_deviation", u.max_diagonal_deviation}},
           u.exact_identity);
  } else {
    const double residual = unitarity_residual_float(m);
    record("unitarity", {{"mode", "float"}, {"residual", residual}, {"tolerance", 1e-12}}, residual < 1e-12);
  }

  const SelectionReport s = check_selection_rule(m);
  record("selection", {{"entries_checked", s.entries_checked}, {"violations", s.violations}}, s.passed());

  const CensusReport c = census(shape);
  json census_body = census_json(c);
  census_body.erase("passed");
  record("census", std::move(census_body), c.passed());

  json permutations = json::array();
  bool permutations_ok = true;
  for (int k = 1; k < r.N; ++k) {
    const PermutationReport p = check_permutation_blocks(m, k);
    permutations_ok = permutations_ok && p.passed();
    permutations.push_back({{"k", k},
                            {"off_block", p.off_block},
                            {"t_dependence", p.t_dependence},
                            {"orthogonality", p.orthogonality},
                            {"involution", p.involution},
                            {"passed", p.passed()}});
  }
  record("permutation", {{"tolerance", 1e-10}, {"transpositions", std::move(permutations)}}, permutations_ok);

  const CoxeterReport x = check_coxeter_relations(m);
  record("coxeter",
         {{"braid", x.braid}, {"involution", x.involution}, {"commuting", x.commuting}, {"tolerance", x.tolerance}},
         x.passed());

  std::mt19937_64 rng(r.seed);
  std::uniform_real_distribution<double> angle(-3.141592653589793, 3.141592653589793);
  std::vector<double> theta(r.n);
  for (auto& a : theta) a = angle(rng);
  const TorusReport torus = check_torus_action(m, theta);
  record("torus", {{"angles", theta}, {"max_residual", torus.max_residual}, {"tolerance", torus.tolerance}},
         torus.passed());

  const json report = {{"shape", {{"n", r.n}, {"N", r.N}}},
                       {"seed", r.seed},
                       {"checks", std::move(checks)},
                       {"passed", failed.empty()}};
  out << report.dump() << '\n';
  if (!failed.empty()) {
    err << json{{"error", "verification"}, {"failed", failed}}.dump() << '\n';
    return kVerificationFailed;
  }
  return kOk;
}

int cmd_dims(const Request& r, std::ostream& out) {
  const CensusReport report = census(SystemShape(r.n, r.N));
  if (r.format == "json") {
    out << census_json(report).dump() << '\n';
  } else if (r.format == "csv") {
    out << "lambda,dim_symmetric,dim_unitary,product\n";
    for (const auto& row : report.rows) {
      out << '"' << format_partition(row.lambda) << "\"," << row.dim_symmetric << ',' << row.dim_unitary << ','
          << row.product << '\n';
    }
  } else {
    out << std::left << std::setw(16) << "lambda" << std::right << std::setw(12) << "dim_sym" << std::setw(14)
        << "dim_unitary" << std::setw(14) << "product" << '\n';
    for (const auto& row : report.rows) {
      out << std::left << std::setw(16) << format_partition(row.lambda) << std::right << std::setw(12)
          << row.dim_symmetric << std::setw(14) << row.dim_unitary << std::setw(14) << row.product << '\n';
    }
    out << "total " << report.total << " (expected " << report.expected << ")\n";
  }
  return report.passed() ? kOk : kVerificationFailed;
}

int cmd_bench(const Request& r, std::ostream& out, std::ostream& err) {
  BenchConfig config;
  config.n = r.n == 0 ? 2 : r.n;
  config.max_N = r.N == 0 ? 16 : r.N;
  config.min_N = r.min_N;
  config.samples = r.samples;
  config.seed = r.seed;
  config.path_cap = r.path_cap;
  if (config.min_N > config.max_N) throw std::invalid_argument("--min-N exceeds --N");
  const auto rows = run_bench(config);
  write_bench_csv(out, rows);
  if (r.assembly) {
    out << "\nn,N,dimension,mean_ns_assembly\n";
    for (const auto& [n, N] : std::vector<std::pair<int, int>>{{2, 2}, {2, 4}, {2, 6}, {3, 3}, {3, 4}}) {
      constexpr int kRepeats = 3;
      double total = 0.0;
      std::size_t dimension = 0;
      for (int i = 0; i < kRepeats; ++i) {
        const auto start = std::chrono::steady_clock::now();
        dimension = assemble(SystemShape(n, N), {r.size_cap, r.workers}).dimension();
        total += std::chrono::duration<double, std::nano>(std::chrono::steady_clock::now() - start).count();
      }
      out << n << ',' << N << ',' << dimension << ',' << std::fixed << std::setprecision(0) << total / kRepeats
          << std::defaultfloat << '\n';
    }
  }
  for (const auto& row : rows) {
    if (!row.agree) {
      err << json{{"error", "verification"}, {"message", "DP and path-enumeration amplitudes differ"}, {"N", row.N}}
                 .dump()
          << '\n';
      return kVerificationFailed;
    }
  }
  return kOk;
}

void error_line(std::ostream& err, const std::string& kind, const std::string& message, json extra = json::object()) {
  json doc = {{"error", kind}, {"message", message}};
  doc.update(extra);
  err << doc.dump() << '\n';
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Schur-Weyl transform by Gelfand-Tsetlin path interference", "swt"};
  app.require_subcommand(1);
  Request r;
  try {
    r.size_cap = default_size_cap();
  } catch (const std::invalid_argument& e) {
    error_line(err, "input", e.what());
    return kInputError;
  }

  auto* element = app.add_subcommand("element", "one amplitude <f | lambda t y>");
  add_shape(element, r);
  add_common(element, r, "text");
  element->add_option("--f", r.f, "configuration, e.g. 1,3,2,1")->required();
  element->add_option("--lambda", r.lambda, "partition, e.g. 3,1")->required();
  element->add_option("--t", r.t, "semistandard Weyl tableau, e.g. 1,1,3/2")->required();
  element->add_option("--y", r.y, "standard Young tableau, e.g. 1,2,4/3")->required();

  auto* matrix = app.add_subcommand("matrix", "assemble the full transform");
  add_shape(matrix, r);
  add_common(matrix, r, "json");
  matrix->add_option("--workers", r.workers, "assembly threads (0 = hardware)");

  auto* verify = app.add_subcommand("verify", "unitarity, selection, census and symmetry checks");
  add_shape(verify, r);
  add_common(verify, r, "json");
  verify->add_option("--workers", r.workers, "assembly threads (0 = hardware)");

  auto* dims = app.add_subcommand("dims", "dimension census");
  add_shape(dims, r);
  add_common(dims, r, "text");

  auto* bench = app.add_subcommand("bench", "amplitude timing table, CSV");
  add_shape(bench, r, false);
  add_common(bench, r, "csv");
  bench->add_option("--min-N", r.min_N, "smallest N")->check(CLI::Range(1, 64))->capture_default_str();
  bench->add_option("--samples", r.samples, "instances per N")->check(CLI::Range(1, 100000))->capture_default_str();
  bench->add_option("--path-cap", r.path_cap, "skip literal enumeration above this many paths")
      ->capture_default_str();
  bench->add_flag("--assembly", r.assembly, "append full-matrix assembly timings");
  bench->add_option("--workers", r.workers, "assembly threads (0 = hardware)");

  try {
    app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    std::string message = e.what();
    if (message.empty()) message = e.get_name();
    error_line(err, "input", message);
    return kInputError;
  }

  if (r.format.empty()) r.format = element->parsed() || dims->parsed() ? "text" : bench->parsed() ? "csv" : "json";

  try {
    if (element->parsed()) return cmd_element(r, out);
    if (matrix->parsed()) return cmd_matrix(r, out);
    if (verify->parsed()) return cmd_verify(r, out, err);
    if (dims->parsed()) return cmd_dims(r, out);
    return cmd_bench(r, out, err);
  } catch (const ResourceError& e) {
    error_line(err, "resource", e.what(), {{"cap", e.cap()}, {"requested", e.requested()}});
    return kResourceCap;
  } catch (const ParseError& e) {
    error_line(err, "input", e.what(), {{"position", e.position()}});
    return kInputError;
  } catch (const std::invalid_argument& e) {
    error_line(err, "input", e.what());
    return kInputError;
  } catch (const std::out_of_range& e) {
    error_line(err, "input", e.what());
    return kInputError;
  } catch (const std::exception& e) {
    error_line(err, "internal", e.what());
    return kVerificationFailed;
  }
}

BenchInstance random_instance(int n, int N, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> letter(1, n);
  std::vector<int> letters(N);
  for (auto& l : letters) l = letter(rng);
  Configuration f(letters, n);
  RskPair pair = rsk(f);
  Partition lambda = pair.insertion.shape().padded(n);
  return {std::move(f), std::move(lambda), std::move(pair.insertion), std::move(pair.recording)};
}

std::vector<BenchRow> run_bench(const BenchConfig& config) {
  using clock = std::chrono::steady_clock;
  std::vector<BenchRow> rows;
  std::vector<std::uint64_t> seeds(static_cast<std::size_t>(config.samples) * (config.max_N - config.min_N + 1));
  {
    std::mt19937_64 master(config.seed);
    for (auto& s : seeds) s = master();
  }
  std::size_t next_seed = 0;
  for (int N = config.min_N; N <= config.max_N; ++N) {
    BenchRow row;
    row.N = N;
    double total_dp = 0.0;
    double total_paths = 0.0;
    bool enumerated = true;
    for (int s = 0; s < config.samples; ++s) {
      const BenchInstance in = random_instance(config.n, N, seeds[next_seed++]);
      const auto start = clock::now();
      const RadicalSum dp = amplitude(in.f, in.lambda, in.t, in.y);
      const double dp_ns = std::chrono::duration<double, std::nano>(clock::now() - start).count();
      total_dp += dp_ns;
      row.max_ns_dp = std::max(row.max_ns_dp, dp_ns);
      const std::uint64_t paths = path_count(in.f, in.lambda, in.t, in.y);
      row.path_count = std::max(row.path_count, paths);
      if (paths > config.path_cap) {
        enumerated = false;
        continue;
      }
      const auto path_start = clock::now();
      const RadicalSum literal = amplitude(in.f, in.lambda, in.t, in.y, {AmplitudeMethod::kPathEnumeration, false});
      total_paths += std::chrono::duration<double, std::nano>(clock::now() - path_start).count();
      row.agree = row.agree && literal == dp;
    }
    row.mean_ns_dp = total_dp / config.samples;
    if (enumerated) row.mean_ns_paths = total_paths / config.samples;
    rows.push_back(row);
  }
  return rows;
}

void write_bench_csv(std::ostream& out, const std::vector<BenchRow>& rows) {
  const auto flags = out.flags();
  out << "N,mean_ns_dp,mean_ns_paths,path_count\n" << std::fixed << std::setprecision(0);
  for (const auto& row : rows) {
    out << row.N << ',' << row.mean_ns_dp << ',';
    if (row.mean_ns_paths) out << *row.mean_ns_paths;
    out << ',' << row.path_count << '\n';
  }
  out.flags(flags);
}

}  // namespace swt::cli
