#include "tscale/scenario.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "tscale/error.hpp"

namespace tscale {

using nlohmann::json;

std::string_view to_string(ReportFormat f) { return f == ReportFormat::Csv ? "csv" : "json"; }

Theorem parse_theorem(std::string_view name) {
  if (name == "kernel") return Theorem::Kernel;
  if (name == "corollary") return Theorem::Corollary;
  if (name == "system") return Theorem::System;
  if (name == "integrodynamic" || name == "integro_dynamic") return Theorem::IntegroDynamic;
  throw ConfigError("unknown theorem '" + std::string(name) +
                    "' (expected kernel, corollary, system or integrodynamic)");
}

WitnessMode parse_witness_mode(std::string_view name) {
  if (name == "equality") return WitnessMode::Equality;
  if (name == "strict_slack") return WitnessMode::StrictSlack;
  throw ConfigError("unknown witness_mode '" + std::string(name) + "'");
}

VariantSelection parse_variant_selection(std::string_view name) {
  if (name == "first") return VariantSelection::First;
  if (name == "second") return VariantSelection::Second;
  if (name == "both") return VariantSelection::Both;
  throw ConfigError("unknown exponent_variant '" + std::string(name) + "'");
}

namespace {

json parse_json(std::string_view text) {
  try {
    json j = json::parse(text.begin(), text.end(), nullptr, true, true);
    if (!j.is_object()) throw ConfigError("scenario must be a JSON object");
    return j;
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("malformed scenario: ") + e.what());
  }
}

void reject_unknown(const json& j, const std::set<std::string>& known, const std::string& where) {
  for (const auto& [key, _] : j.items()) {
    if (!known.count(key)) throw ConfigError("unknown key '" + key + "' in " + where);
  }
}

template <typename T>
T get(const json& j, const char* key, const std::string& where) {
  try {
    return j.at(key).get<T>();
  } catch (const json::exception&) {
    throw ConfigError("field '" + std::string(key) + "' in " + where + " is missing or has the wrong type");
  }
}

template <typename T>
T get_or(const json& j, const char* key, T fallback, const std::string& where) {
  if (!j.contains(key)) return fallback;
  return get<T>(j, key, where);
}

ScaleSpec parse_scale(const json& j, const std::string& where) {
  if (j.is_string()) return ScaleSpec::parse(j.get<std::string>());
  if (!j.is_object()) throw ConfigError(where + " must be a descriptor string or an object");
  reject_unknown(j, {"kind", "start", "end", "h", "q", "N", "points", "parts"}, where);
  ScaleSpec s;
  const auto kind = get<std::string>(j, "kind", where);
  if (kind == "integer_segment") s.kind = ScaleKind::IntegerSegment;
  else if (kind == "h_grid") s.kind = ScaleKind::HGrid;
  else if (kind == "q_grid") s.kind = ScaleKind::QGrid;
  else if (kind == "explicit") s.kind = ScaleKind::Explicit;
  else if (kind == "union") s.kind = ScaleKind::Union;
  else if (kind == "dense_mesh") s.kind = ScaleKind::DenseMesh;
  else throw ConfigError("unknown scale kind '" + kind + "' in " + where);
  s.start = get_or<double>(j, "start", s.start, where);
  s.end = get_or<double>(j, "end", s.end, where);
  s.h = get_or<double>(j, "h", s.h, where);
  s.q = get_or<double>(j, "q", s.q, where);
  s.n = get_or<int>(j, "N", s.n, where);
  s.points = get_or<std::vector<double>>(j, "points", {}, where);
  if (j.contains("parts")) {
    const json& parts = j.at("parts");
    if (!parts.is_array()) throw ConfigError("parts in " + where + " must be an array");
    for (const auto& p : parts) s.parts.push_back(parse_scale(p, where + ".parts"));
  }
  s.validate();
  return s;
}

CoefficientSpec parse_coefficient(const json& j, const std::string& where) {
  CoefficientSpec c;
  if (j.is_number()) {
    c.family = "constant";
    c.params = {j.get<double>()};
    return c;
  }
  if (j.is_string()) {
    const auto text = j.get<std::string>();
    const auto colon = text.find(':');
    c.family = text.substr(0, colon);
    if (colon != std::string::npos) {
      std::stringstream ss(text.substr(colon + 1));
      std::string item;
      while (std::getline(ss, item, ',')) {
        try {
          std::size_t used = 0;
          c.params.push_back(std::stod(item, &used));
          if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
          throw ConfigError("malformed parameter '" + item + "' in " + where);
        }
      }
    }
  } else if (j.is_object()) {
    reject_unknown(j, {"family", "params"}, where);
    c.family = get<std::string>(j, "family", where);
    c.params = get_or<std::vector<double>>(j, "params", {}, where);
  } else {
    throw ConfigError(where + " must be a number, a descriptor string or an object");
  }
  if (c.family != "random" && c.family != "separable") {
    c.family = std::string(to_string(parse_family(c.family)));
  }
  return c;
}

OutputSpec parse_output(const json& j) {
  OutputSpec out;
  if (!j.contains("output")) throw ConfigError("scenario needs an output section");
  const json& o = j.at("output");
  if (o.is_string()) {
    out.path = o.get<std::string>();
  } else {
    reject_unknown(o, {"path", "format"}, "output");
    out.path = get<std::string>(o, "path", "output");
    const auto fmt = get_or<std::string>(o, "format", "csv", "output");
    if (fmt == "csv") out.format = ReportFormat::Csv;
    else if (fmt == "json") out.format = ReportFormat::Json;
    else throw ConfigError("output format must be csv or json");
  }
  if (out.path.empty()) throw ConfigError("output path is empty");
  return out;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot read scenario file " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

VerifyScenario parse_verify_scenario(std::string_view text) {
  const json j = parse_json(text);
  reject_unknown(j, {"theorem", "scale1", "scale2", "functions", "seed", "count", "witness_mode",
                     "exponent_variant", "output"},
                 "scenario");
  VerifyScenario s;
  InstanceSpec& spec = s.instances;
  spec.theorem = parse_theorem(get<std::string>(j, "theorem", "scenario"));
  if (!j.contains("scale1")) throw ConfigError("scenario needs scale1");
  spec.scale1 = parse_scale(j.at("scale1"), "scale1");
  spec.scale2 = j.contains("scale2") ? parse_scale(j.at("scale2"), "scale2") : spec.scale1;
  if (j.contains("functions")) {
    const json& fns = j.at("functions");
    if (!fns.is_object()) throw ConfigError("functions must be an object");
    for (const auto& [name, value] : fns.items()) {
      spec.coefficients[name] = parse_coefficient(value, "functions." + name);
    }
  }
  spec.seed = get_or<std::uint64_t>(j, "seed", spec.seed, "scenario");
  const auto count = get_or<long long>(j, "count", 1, "scenario");
  if (count < 1) throw ConfigError("count must be at least 1");
  spec.count = static_cast<std::size_t>(count);
  spec.witness_mode = parse_witness_mode(get_or<std::string>(j, "witness_mode", "equality", "scenario"));
  spec.variants = parse_variant_selection(get_or<std::string>(j, "exponent_variant", "first", "scenario"));
  spec.keep_reports = true;
  spec.validate();
  s.output = parse_output(j);
  return s;
}

ConvergeScenario parse_converge_scenario(std::string_view text) {
  const json j = parse_json(text);
  reject_unknown(j, {"operation", "scale", "function", "levels", "output"}, "scenario");
  ConvergeScenario s;
  s.study.operation = parse_convergence_op(get<std::string>(j, "operation", "scenario"));
  if (!j.contains("scale")) throw ConfigError("scenario needs a scale");
  s.study.scale = parse_scale(j.at("scale"), "scale");
  const auto fn = get<std::string>(j, "function", "scenario");
  s.study.function = Function1D::parse(fn);
  s.study.levels = get_or<int>(j, "levels", 4, "scenario");
  s.study.validate();
  s.output = parse_output(j);
  return s;
}

VerifyScenario load_verify_scenario(const std::filesystem::path& path) {
  return parse_verify_scenario(read_file(path));
}

ConvergeScenario load_converge_scenario(const std::filesystem::path& path) {
  return parse_converge_scenario(read_file(path));
}

}  // namespace tscale
