#ifndef ENTMON_LOG_HPP
#define ENTMON_LOG_HPP

#include <cstdio>
#include <string>

namespace entmon::log {

enum class Level { Error = 0, Warn = 1, Info = 2, Debug = 3 };

// Current verbosity; initialized once from the ENTMON_LOG environment
// variable ("error", "warn", "info", "debug"). Defaults to Warn.
Level level();
void set_level(Level lv);

void emit(Level lv, const std::string& msg);

inline void error(const std::string& msg) { emit(Level::Error, msg); }
inline void warn(const std::string& msg) { emit(Level::Warn, msg); }
inline void info(const std::string& msg) { emit(Level::Info, msg); }
inline void debug(const std::string& msg) { emit(Level::Debug, msg); }

} // namespace entmon::log

#endif
