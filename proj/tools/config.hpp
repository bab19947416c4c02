#pragma once

// Run configuration shared by all subcommands: LIS_CONFIG file, then flags.

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>

namespace lis::cli {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Config {
    int quadrature_m = 80;
    double truncation = 14.0;
    int tw_npts = 240;
    std::uint64_t seed = 20230105;
    std::string format = "csv";  // csv | json
    int digits = 15;
    int threads = 0;  // 0: hardware concurrency

    void set(const std::string& key, const std::string& value);
    void validate() const;
    int thread_count() const;
};

/// Parse "key = value" lines; blank lines and lines starting with '#' are skipped.
Config parse_config(const std::string& text, Config base = {});
/// Config from the file named by LIS_CONFIG, or defaults when unset.
Config load_config_from_env();

}  // namespace lis::cli
