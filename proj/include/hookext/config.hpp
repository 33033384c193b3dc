#pragma once

// Defaults for the command-line tool, optionally overridden by a JSON file
// named by HOOKEXT_CONFIG; command-line flags override both.

#include "hookext/report.hpp"

#include <filesystem>
#include <string>
#include <vector>

namespace hookext {

struct Settings {
    unsigned jobs = 1;
    bool use_cache = true;
    bool ascii = false;
    std::string format = "text";
    int max_a = 4;
    int max_b = 5;
    std::vector<long> primes{2, 3, 5};
    std::filesystem::path cache_file;

    static Settings defaults();  // jobs = logical CPUs, default cache path
};

/// Applies the keys of a config object: jobs, cache, ascii, format, max_a,
/// max_b, primes, cache_file.  Unknown keys and wrong types throw
/// std::invalid_argument.
void apply_config(Settings& s, const Json& config);

/// Defaults, overlaid with the file named by `config_path` when non-empty.
Settings load_settings(const std::string& config_path);

/// load_settings(getenv("HOOKEXT_CONFIG")).
Settings load_settings_from_env();

}  // namespace hookext
