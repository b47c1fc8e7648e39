#include "tscale_cli/logging.hpp"

#include <cstdlib>
#include <string>

#include <spdlog/sinks/stdout_sinks.h>
#include <spdlog/spdlog.h>

namespace tscale::cli {

namespace {

std::shared_ptr<spdlog::logger>& logger() {
  static std::shared_ptr<spdlog::logger> instance = [] {
    auto l = spdlog::stderr_logger_st("tscale");
    l->set_pattern("[%l] %v");
    l->set_level(spdlog::level::err);
    return l;
  }();
  return instance;
}

}  // namespace

LogLevel log_level_from_env() {
  const char* v = std::getenv("TSCALE_LOG");
  if (!v) return LogLevel::Error;
  const std::string s(v);
  if (s == "debug") return LogLevel::Debug;
  if (s == "info") return LogLevel::Info;
  return LogLevel::Error;
}

void init_logging(LogLevel level) {
  switch (level) {
    case LogLevel::Error: logger()->set_level(spdlog::level::err); break;
    case LogLevel::Info: logger()->set_level(spdlog::level::info); break;
    case LogLevel::Debug: logger()->set_level(spdlog::level::debug); break;
  }
}

void log_info(std::string_view msg) { logger()->info("{}", msg); }
void log_debug(std::string_view msg) { logger()->debug("{}", msg); }
void log_error(std::string_view msg) { logger()->error("{}", msg); }

}  // namespace tscale::cli
