#pragma once

#include <string_view>

namespace tscale::cli {

enum class LogLevel { Error, Info, Debug };

/// Reads TSCALE_LOG (error | info | debug); unset or unknown means error.
LogLevel log_level_from_env();
void init_logging(LogLevel level);

void log_info(std::string_view msg);
void log_debug(std::string_view msg);
void log_error(std::string_view msg);

}  // namespace tscale::cli
