// Copyright 2026 The EALA Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include "eala/bench.hpp"
#include "eala/eala.hpp"
#include "eala/fidelity.hpp"
#include "eala/invariants.hpp"
#include "eala/oracle.hpp"
#include "eala/report.hpp"
#include "eala/tensor_file.hpp"

namespace eala::cli {
namespace {

const std::map<std::string, EntropySource> kSources{{"approx", EntropySource::approx},
                                                    {"exact", EntropySource::exact}};
const std::map<std::string, ReportFormat> kFormats{{"json", ReportFormat::json},
                                                   {"csv", ReportFormat::csv}};
const std::map<std::string, ForwardPath> kPaths{{"auto", ForwardPath::automatic},
                                                {"quadratic", ForwardPath::quadratic},
                                                {"linear", ForwardPath::linear}};
const std::map<std::string, Dtype> kDtypes{{"f32", Dtype::f32}, {"f64", Dtype::f64}};

template <typename Map>
std::vector<std::string> keys(const Map& m) {
  std::vector<std::string> out;
  for (const auto& [k, v] : m) out.push_back(k);
  return out;
}

bool is_file_error(Errc code) {
  switch (code) {
    case Errc::io_error:
    case Errc::bad_magic:
    case Errc::bad_version:
    case Errc::bad_dtype:
    case Errc::bad_rank:
    case Errc::truncated_payload:
      return true;
    default:
      return false;
  }
}

void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw Error(Errc::io_error, "cannot open " + path + " for writing");
  file << text;
  if (!file) throw Error(Errc::io_error, "short write to " + path);
}

struct CompareArgs {
  WorkloadSpec spec;
  std::string source = "approx";
  std::string format = "json";
  std::string out;
};

struct BenchArgs {
  std::string mode;
  std::vector<std::size_t> n_list;
  std::size_t c = 64;
  std::size_t repeats = 5;
  std::uint64_t seed = 0;
  std::uint64_t max_bytes = std::uint64_t{4} << 30;
  std::string format = "csv";
  std::string out;
};

struct AttendArgs {
  std::string q;
  std::string k;
  std::string v;
  std::string mode = "eala";
  std::string path = "auto";
  std::string source = "approx";
  std::string dtype = "f64";
  std::string out;
};

int do_check(std::uint64_t seed, std::ostream& out) {
  const auto results = run_invariant_suite(seed);
  std::size_t failed = 0;
  for (const CheckResult& r : results) {
    out << (r.passed ? "[PASS] " : "[FAIL] ") << r.name << " (" << r.detail << ")\n";
    failed += r.passed ? 0 : 1;
  }
  out << results.size() - failed << "/" << results.size() << " checks passed\n";
  return failed == 0 ? kSuccess : kCheckFailure;
}

int do_compare(const CompareArgs& a, std::ostream& out) {
  const FidelityReport report = compare(a.spec, kSources.at(a.source));
  emit(kFormats.at(a.format) == ReportFormat::json ? fidelity_to_json(report) : fidelity_to_csv(report), a.out,
       out);
  return kSuccess;
}

int do_bench(const BenchArgs& a, std::ostream& out, std::ostream& err) {
  const auto mode = parse_bench_mode(a.mode);
  if (!mode) {
    err << "unknown bench mode '" << a.mode << "' (exact, eala-linear, eala-quadratic)\n";
    return kUsageError;
  }
  const auto records =
      bench_sweep(*mode, a.n_list, a.c, {.repeats = a.repeats, .seed = a.seed, .max_bytes = a.max_bytes});
  emit(kFormats.at(a.format) == ReportFormat::csv ? bench_to_csv(records) : bench_to_json(records), a.out, out);
  if (records.size() >= 3 && !a.out.empty() && a.out != "-") {
    out << "log-log slope: " << format_number(fit_loglog_slope(records)) << "\n";
  }
  return kSuccess;
}

int do_attend(const AttendArgs& a, std::ostream& err) {
  const Matrix q = read_tensor(a.q);
  const Matrix k = read_tensor(a.k);
  const Matrix v = read_tensor(a.v);
  Matrix output;
  if (a.mode == "exact") {
    output = exact_attention(q, k, v).output;
  } else if (a.mode == "eala") {
    EalaConfig cfg;
    cfg.path = kPaths.at(a.path);
    cfg.entropy_source = kSources.at(a.source);
    output = eala_attention(q, k, v, cfg).output;
  } else {
    err << "unknown attend mode '" << a.mode << "' (exact, eala)\n";
    return kUsageError;
  }
  write_tensor(a.out, output, kDtypes.at(a.dtype));
  return kSuccess;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Entropy-equal linear attention: checks, fidelity reports and benchmarks", "eala"};
  app.require_subcommand(1);

  std::uint64_t check_seed = 0;
  auto* check = app.add_subcommand("check", "Run the invariant suite");
  check->add_option("--seed", check_seed, "Seed for the property sweeps");

  CompareArgs cmp;
  auto* compare_cmd = app.add_subcommand("compare", "Fidelity of the linear weights vs softmax");
  compare_cmd->add_option("--n", cmp.spec.n, "Sequence length")->check(CLI::PositiveNumber);
  compare_cmd->add_option("--c", cmp.spec.c, "Feature dimension")->check(CLI::PositiveNumber);
  compare_cmd->add_option("--scale", cmp.spec.score_scale, "Target max |centered score|")
      ->check(CLI::NonNegativeNumber);
  compare_cmd->add_option("--seed", cmp.spec.seed, "Workload seed");
  compare_cmd->add_option("--entropy-source", cmp.source, "approx or exact")
      ->check(CLI::IsMember(keys(kSources)));
  compare_cmd->add_option("--format", cmp.format, "json or csv")
      ->check(CLI::IsMember(keys(kFormats)));
  compare_cmd->add_option("--out", cmp.out, "Report path (stdout when omitted)");

  BenchArgs bench;
  auto* bench_cmd = app.add_subcommand("bench", "Wall-time scaling sweep");
  bench_cmd->add_option("--mode", bench.mode, "exact, eala-linear or eala-quadratic")->required();
  bench_cmd->add_option("--n-list", bench.n_list, "Ascending sequence lengths")
      ->delimiter(',')
      ->required();
  bench_cmd->add_option("--c", bench.c, "Feature dimension")->check(CLI::PositiveNumber);
  bench_cmd->add_option("--repeats", bench.repeats, "Timed repeats per size")
      ->check(CLI::PositiveNumber);
  bench_cmd->add_option("--seed", bench.seed, "Input seed");
  bench_cmd->add_option("--max-bytes", bench.max_bytes, "Allocation-model limit");
  bench_cmd->add_option("--format", bench.format, "csv or json")
      ->check(CLI::IsMember(keys(kFormats)));
  bench_cmd->add_option("--out", bench.out, "Results path (stdout when omitted)");

  AttendArgs attend;
  auto* attend_cmd = app.add_subcommand("attend", "Single forward pass over EALT tensor files");
  attend_cmd->add_option("--q", attend.q, "Query tensor")->required();
  attend_cmd->add_option("--k", attend.k, "Key tensor")->required();
  attend_cmd->add_option("--v", attend.v, "Value tensor")->required();
  attend_cmd->add_option("--mode", attend.mode, "exact or eala");
  attend_cmd->add_option("--path", attend.path, "auto, quadratic or linear")
      ->check(CLI::IsMember(keys(kPaths)));
  attend_cmd->add_option("--entropy-source", attend.source, "approx or exact")
      ->check(CLI::IsMember(keys(kSources)));
  attend_cmd->add_option("--dtype", attend.dtype, "f32 or f64")
      ->check(CLI::IsMember(keys(kDtypes)));
  attend_cmd->add_option("--out", attend.out, "Output tensor")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kUsageError;
  }

  try {
    if (check->parsed()) return do_check(check_seed, out);
    if (compare_cmd->parsed()) return do_compare(cmp, out);
    if (bench_cmd->parsed()) return do_bench(bench, out, err);
    if (attend_cmd->parsed()) return do_attend(attend, err);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return is_file_error(e.code()) ? kIoError : kUsageError;
  }
  return kUsageError;
}

}  // namespace eala::cli
