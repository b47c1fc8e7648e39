#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "tscale/convergence.hpp"
#include "tscale/verify.hpp"

namespace tscale {

enum class ReportFormat { Csv, Json };

std::string_view to_string(ReportFormat f);

struct OutputSpec {
  std::filesystem::path path;
  ReportFormat format = ReportFormat::Csv;
};

struct VerifyScenario {
  InstanceSpec instances;
  OutputSpec output;
};

struct ConvergeScenario {
  ConvergenceSpec study;
  OutputSpec output;
};

/// Both parsers accept JSON with // and /* */ comments. Every field is
/// validated before anything is computed; problems raise ConfigError.
VerifyScenario parse_verify_scenario(std::string_view text);
ConvergeScenario parse_converge_scenario(std::string_view text);

VerifyScenario load_verify_scenario(const std::filesystem::path& path);
ConvergeScenario load_converge_scenario(const std::filesystem::path& path);

Theorem parse_theorem(std::string_view name);
WitnessMode parse_witness_mode(std::string_view name);
VariantSelection parse_variant_selection(std::string_view name);

}  // namespace tscale
