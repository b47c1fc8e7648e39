#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

namespace tscale::cli {

enum ExitCode : int {
  kOk = 0,
  kViolations = 1,
  kConfigError = 2,
  kDomainError = 3,
};

/// Full command line, argv[0] included.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int cmd_calc(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int cmd_verify(const std::filesystem::path& config, std::ostream& out, std::ostream& err);
int cmd_converge(const std::filesystem::path& config, std::ostream& out, std::ostream& err);

/// Output files of a verify run: `<base>.csv` and `<base>.json`, where base
/// is the configured path with any .csv/.json extension removed.
std::pair<std::filesystem::path, std::filesystem::path> verify_outputs(const std::filesystem::path& configured);

}  // namespace tscale::cli
