#include "config.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <thread>

namespace lis::cli {

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

template <typename T>
T parse_number(const std::string& key, const std::string& value) {
    T out{};
    const char* end = value.data() + value.size();
    auto [ptr, ec] = std::from_chars(value.data(), end, out);
    if (ec != std::errc() || ptr != end) throw UsageError("config: invalid value for " + key + ": '" + value + "'");
    return out;
}

}  // namespace

void Config::set(const std::string& key, const std::string& value) {
    if (key == "quadrature_m")
        quadrature_m = parse_number<int>(key, value);
    else if (key == "truncation")
        truncation = parse_number<double>(key, value);
    else if (key == "tw_npts")
        tw_npts = parse_number<int>(key, value);
    else if (key == "seed")
        seed = parse_number<std::uint64_t>(key, value);
    else if (key == "format")
        format = value;
    else if (key == "digits")
        digits = parse_number<int>(key, value);
    else if (key == "threads")
        threads = parse_number<int>(key, value);
    else
        throw UsageError("config: unknown key '" + key + "'");
}

void Config::validate() const {
    if (quadrature_m < 1) throw UsageError("config: quadrature_m must be positive");
    if (!(truncation > 0.0)) throw UsageError("config: truncation must be positive");
    if (tw_npts < 120) throw UsageError("config: tw_npts must be at least 120");
    if (format != "csv" && format != "json") throw UsageError("config: format must be csv or json");
    if (digits < 1 || digits > 17) throw UsageError("config: digits must be in 1..17");
    if (threads < 0) throw UsageError("config: threads must be non-negative");
}

int Config::thread_count() const {
    if (threads > 0) return threads;
    return std::max(1u, std::thread::hardware_concurrency());
}

Config parse_config(const std::string& text, Config base) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        line = trim(line);
        if (line.empty() || line[0] == '#') continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw UsageError("config: line " + std::to_string(lineno) + " is not key=value");
        base.set(trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
    }
    base.validate();
    return base;
}

Config load_config_from_env() {
    const char* path = std::getenv("LIS_CONFIG");
    if (!path || !*path) return {};
    std::ifstream f(path);
    if (!f) throw UsageError(std::string("config: cannot open LIS_CONFIG file ") + path);
    std::stringstream ss;
    ss << f.rdbuf();
    return parse_config(ss.str());
}

}  // namespace lis::cli
