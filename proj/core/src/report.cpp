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

#include "eala/report.hpp"

#include <charconv>
#include <cmath>
#include <json.hpp>
#include <sstream>

namespace eala {
namespace {

using Json = nlohmann::ordered_json;

Json number_or_null(double v) { return std::isfinite(v) ? Json(v) : Json(nullptr); }

Json optional_number(const std::optional<double>& v) {
  return v ? number_or_null(*v) : Json(nullptr);
}

Json summary_json(const SourceSummary& s) {
  Json j;
  j["mean_kl"] = s.mean_kl;
  j["max_kl"] = s.max_kl;
  j["invalid_weight_queries"] = s.invalid_weight_queries;
  j["argsort_match_rate"] = s.argsort_match_rate;
  j["output_max_rel_error"] = s.output_max_rel_error;
  j["mean_theta_rel_gap"] = s.mean_theta_rel_gap;
  j["max_theta_rel_gap"] = s.max_theta_rel_gap;
  return j;
}

std::string optional_field(const std::optional<double>& v) {
  return v ? format_number(*v) : std::string();
}

}  // namespace

std::string_view to_string(EntropySource source) noexcept {
  return source == EntropySource::exact ? "exact" : "approx";
}

std::string format_number(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, end);
}

std::string fidelity_to_json(const FidelityReport& report) {
  Json j;
  j["workload"] = {{"n", report.spec.n},
                   {"c", report.spec.c},
                   {"score_scale", report.spec.score_scale},
                   {"seed", report.spec.seed}};
  j["entropy_source"] = std::string(to_string(report.entropy_source));

  const SourceSummary& sel = report.selected();
  Json agg;
  agg["mean_entropy_error"] = report.mean_entropy_error;
  agg["max_entropy_error"] = report.max_entropy_error;
  agg["mean_kl"] = sel.mean_kl;
  agg["max_kl"] = sel.max_kl;
  agg["invalid_weight_queries"] = sel.invalid_weight_queries;
  agg["argsort_match_rate"] = sel.argsort_match_rate;
  agg["output_max_rel_error"] = sel.output_max_rel_error;
  j["aggregates"] = agg;
  j["sources"] = {{"approx", summary_json(report.approx)}, {"exact", summary_json(report.exact)}};

  Json queries = Json::array();
  for (const QueryFidelity& q : report.queries) {
    Json row;
    row["entropy_exact"] = q.entropy_exact;
    row["entropy_approx"] = q.entropy_approx;
    row["theta_closed"] = number_or_null(q.theta_closed);
    row["theta_uniform"] = std::isinf(q.theta_closed);
    row["theta_bisection"] = optional_number(q.theta_bisection);
    row["kl_exact_vs_eala"] = optional_number(q.kl_exact_vs_eala);
    row["weights_valid"] = q.kl_exact_vs_eala.has_value();
    row["argsort_match"] = q.argsort_match;
    queries.push_back(std::move(row));
  }
  j["queries"] = std::move(queries);
  return j.dump(2) + "\n";
}

std::string fidelity_to_csv(const FidelityReport& report) {
  std::ostringstream out;
  out << "query,entropy_exact,entropy_approx,theta_closed,theta_bisection,kl_exact_vs_eala,"
         "weights_valid,argsort_match\n";
  for (std::size_t i = 0; i < report.queries.size(); ++i) {
    const QueryFidelity& q = report.queries[i];
    out << i << ',' << format_number(q.entropy_exact) << ',' << format_number(q.entropy_approx)
        << ',' << format_number(q.theta_closed) << ',' << optional_field(q.theta_bisection) << ','
        << optional_field(q.kl_exact_vs_eala) << ',' << (q.kl_exact_vs_eala ? 1 : 0) << ','
        << (q.argsort_match ? 1 : 0) << '\n';
  }
  return out.str();
}

std::string bench_to_csv(std::span<const BenchRecord> records) {
  std::ostringstream out;
  out << "mode,n,c,wall_time,analytic_peak_bytes\n";
  for (const BenchRecord& r : records) {
    out << to_string(r.mode) << ',' << r.n << ',' << r.c << ',' << format_number(r.wall_time)
        << ',' << r.analytic_peak_bytes << '\n';
  }
  return out.str();
}

std::string bench_to_json(std::span<const BenchRecord> records) {
  Json arr = Json::array();
  for (const BenchRecord& r : records) {
    Json row;
    row["mode"] = std::string(to_string(r.mode));
    row["n"] = r.n;
    row["c"] = r.c;
    row["wall_time"] = r.wall_time;
    row["analytic_peak_bytes"] = r.analytic_peak_bytes;
    arr.push_back(std::move(row));
  }
  return arr.dump(2) + "\n";
}

}  // namespace eala
