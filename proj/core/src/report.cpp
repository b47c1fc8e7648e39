#include "tscale/report.hpp"

#include <json.hpp>

#include "tscale/format.hpp"

namespace tscale {

using nlohmann::ordered_json;

std::string render_verify_csv(const VerifySummary& summary) {
  std::string out = kVerifyCsvHeader;
  out += '\n';
  for (std::size_t n = 0; n < summary.reports.size(); ++n) {
    const BoundReport& r = summary.reports[n];
    const auto& s1 = r.bound.domain().scale1();
    const auto& s2 = r.bound.domain().scale2();
    const std::string index = std::to_string(summary.digests[n].index);
    for (std::size_t i = 0; i < r.bound.rows(); ++i) {
      for (std::size_t j = 0; j < r.bound.cols(); ++j) {
        const double b = r.bound(i, j);
        out += index;
        out += ',';
        out += format_double(s1[i]);
        out += ',';
        out += format_double(s2[j]);
        out += ',';
        if (r.witness) {
          const double w = (*r.witness)(i, j);
          out += format_double(w);
          out += ',';
          out += format_double(b);
          out += ',';
          out += format_double(b - w);
        } else {
          out += ',';
          out += format_double(b);
          out += ',';
        }
        out += '\n';
      }
    }
  }
  return out;
}

std::string render_verify_json(const VerifySummary& s, std::size_t count,
                               VariantSelection variants) {
  ordered_json j;
  j["theorem"] = std::string(to_string(s.theorem));
  j["seed"] = s.seed;
  j["count"] = count;
  j["witness_mode"] = std::string(to_string(s.witness_mode));
  j["exponent_variant"] = std::string(to_string(variants));
  j["evaluation_domain"] = std::string(BoundReport::kEvaluationDomain);
  j["instances_run"] = s.instances_run;
  j["instances_with_violation"] = s.instances_with_violation;
  j["worst_relative_violation"] = s.worst_relative_violation;
  j["witness_check_failures"] = s.witness_check_failures;

  ordered_json results = ordered_json::object();
  for (const char* key : {"first", "second"}) {
    auto it = s.variant_results.find(key);
    if (it == s.variant_results.end()) continue;
    results[key] = {
        {"dominated", it->second.instances_with_violation == 0},
        {"instances_with_violation", it->second.instances_with_violation},
        {"worst_relative_violation", it->second.worst_relative_violation},
    };
  }
  j["exponent_variants"] = results;

  ordered_json instances = ordered_json::array();
  for (const InstanceDigest& d : s.digests) {
    ordered_json e;
    e["index"] = d.index;
    e["dominated"] = d.dominated;
    e["violations"] = d.violation_count;
    e["max_violation"] = d.max_violation;
    e["relative_violation"] = d.relative_violation;
    e["min_slack"] = d.min_slack;
    e["max_bound"] = d.max_bound;
    e["hypothesis_issues"] = d.hypothesis_issues;
    e["witness_check_failures"] = d.witness_check_failures;
    if (d.second_variant_dominated) {
      e["second_variant"] = {{"dominated", *d.second_variant_dominated},
                             {"relative_violation", *d.second_variant_relative_violation}};
    }
    e["coefficients"] = d.coefficients;
    instances.push_back(std::move(e));
  }
  j["instances"] = std::move(instances);
  return j.dump(2) + "\n";
}

std::string render_converge_csv(const std::vector<ConvergenceRow>& rows) {
  std::string out = kConvergeCsvHeader;
  out += '\n';
  for (const auto& r : rows) {
    out += format_double(r.h) + "," + format_double(r.max_error) + ",";
    if (r.observed_order) out += format_double(*r.observed_order);
    out += '\n';
  }
  return out;
}

std::string render_converge_json(const ConvergenceSpec& spec, const std::vector<ConvergenceRow>& rows) {
  ordered_json j;
  j["operation"] = std::string(to_string(spec.operation));
  j["scale"] = spec.scale.describe();
  j["function"] = spec.function.describe();
  ordered_json arr = ordered_json::array();
  for (const auto& r : rows) {
    ordered_json e;
    e["h"] = r.h;
    e["max_error"] = r.max_error;
    e["observed_order"] = r.observed_order ? ordered_json(*r.observed_order) : ordered_json(nullptr);
    arr.push_back(std::move(e));
  }
  j["rows"] = std::move(arr);
  return j.dump(2) + "\n";
}

}  // namespace tscale
