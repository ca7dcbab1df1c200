#include "entmon/log.hpp"

#include <cstdlib>
#include <cstring>
#include <mutex>

namespace entmon::log {

namespace {

Level parse_env() {
    const char* v = std::getenv("ENTMON_LOG");
    if (!v) return Level::Warn;
    if (!std::strcmp(v, "error") || !std::strcmp(v, "0")) return Level::Error;
    if (!std::strcmp(v, "warn") || !std::strcmp(v, "1")) return Level::Warn;
    if (!std::strcmp(v, "info") || !std::strcmp(v, "2")) return Level::Info;
    if (!std::strcmp(v, "debug") || !std::strcmp(v, "3")) return Level::Debug;
    return Level::Warn;
}

Level g_level = parse_env();
std::mutex g_mutex;

const char* tag(Level lv) {
    switch (lv) {
        case Level::Error: return "error";
        case Level::Warn: return "warn";
        case Level::Info: return "info";
        default: return "debug";
    }
}

} // namespace

Level level() { return g_level; }
void set_level(Level lv) { g_level = lv; }

void emit(Level lv, const std::string& msg) {
    if (static_cast<int>(lv) > static_cast<int>(g_level)) return;
    std::lock_guard<std::mutex> lock(g_mutex);
    std::fprintf(stderr, "[entmon %s] %s\n", tag(lv), msg.c_str());
}

} // namespace entmon::log
