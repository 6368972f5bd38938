#pragma once

#include <sstream>
#include <string>

namespace vad {

enum class LogLevel { Error = 0, Warn = 1, Info = 2, Debug = 3 };

// Initialized from the VAD_LOG environment variable (error|warn|info|debug).
LogLevel log_level();
void set_log_level(LogLevel level);

void log_message(LogLevel level, const std::string& msg);

namespace detail {
template <class... Args>
void log_fmt(LogLevel level, Args&&... args) {
    if (level > log_level()) return;
    std::ostringstream os;
    (os << ... << std::forward<Args>(args));
    log_message(level, os.str());
}
} // namespace detail

template <class... Args> void log_error(Args&&... a) { detail::log_fmt(LogLevel::Error, std::forward<Args>(a)...); }
template <class... Args> void log_warn(Args&&... a)  { detail::log_fmt(LogLevel::Warn,  std::forward<Args>(a)...); }
template <class... Args> void log_info(Args&&... a)  { detail::log_fmt(LogLevel::Info,  std::forward<Args>(a)...); }
template <class... Args> void log_debug(Args&&... a) { detail::log_fmt(LogLevel::Debug, std::forward<Args>(a)...); }

} // namespace vad
