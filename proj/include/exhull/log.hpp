#pragma once

#include <cstdlib>
#include <iostream>
#include <string>
#include <string_view>

namespace exhull {

enum class LogLevel : int { error = 0, warn = 1, info = 2, debug = 3 };

namespace detail {

inline LogLevel parse_log_level(const char* s) {
    if (s == nullptr) return LogLevel::warn;
    std::string_view v(s);
    if (v == "error") return LogLevel::error;
    if (v == "warn") return LogLevel::warn;
    if (v == "info") return LogLevel::info;
    if (v == "debug") return LogLevel::debug;
    return LogLevel::warn;
}

}  // namespace detail

/// Diagnostics verbosity, read once from EXHULL_LOG (error|warn|info|debug).
inline LogLevel log_level() {
    static const LogLevel level = detail::parse_log_level(std::getenv("EXHULL_LOG"));
    return level;
}

inline void log(LogLevel level, const std::string& msg) {
    static constexpr const char* names[] = {"error", "warn", "info", "debug"};
    if (static_cast<int>(level) <= static_cast<int>(log_level())) {
        std::cerr << "[exhull] " << names[static_cast<int>(level)] << ": " << msg << "\n";
    }
}

inline void log_error(const std::string& msg) { log(LogLevel::error, msg); }
inline void log_warn(const std::string& msg) { log(LogLevel::warn, msg); }
inline void log_info(const std::string& msg) { log(LogLevel::info, msg); }
inline void log_debug(const std::string& msg) { log(LogLevel::debug, msg); }

}  // namespace exhull
