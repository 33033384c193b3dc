#include "hookext/config.hpp"

#include "hookext/cache.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <stdexcept>
#include <thread>

namespace hookext {

Settings Settings::defaults()
{
    Settings s;
    s.jobs = std::max(1u, std::thread::hardware_concurrency());
    s.cache_file = default_cache_path();
    return s;
}

namespace {

template <class T>
T typed(const Json& v, const std::string& key)
{
    try {
        return v.get<T>();
    } catch (const Json::exception&) {
        throw std::invalid_argument("config key '" + key + "' has the wrong type");
    }
}

}  // namespace

void apply_config(Settings& s, const Json& config)
{
    if (!config.is_object())
        throw std::invalid_argument("config must be a JSON object");
    for (const auto& [key, v] : config.items()) {
        if (key == "jobs") {
            const int j = typed<int>(v, key);
            if (j < 1)
                throw std::invalid_argument("config jobs must be >= 1");
            s.jobs = static_cast<unsigned>(j);
        } else if (key == "cache") {
            s.use_cache = typed<bool>(v, key);
        } else if (key == "ascii") {
            s.ascii = typed<bool>(v, key);
        } else if (key == "format") {
            s.format = typed<std::string>(v, key);
            if (s.format != "text" && s.format != "json" && s.format != "csv")
                throw std::invalid_argument("config format must be text, json or csv");
        } else if (key == "max_a") {
            s.max_a = typed<int>(v, key);
        } else if (key == "max_b") {
            s.max_b = typed<int>(v, key);
        } else if (key == "primes") {
            s.primes = typed<std::vector<long>>(v, key);
        } else if (key == "cache_file") {
            s.cache_file = typed<std::string>(v, key);
        } else {
            throw std::invalid_argument("unknown config key '" + key + "'");
        }
    }
}

Settings load_settings(const std::string& config_path)
{
    Settings s = Settings::defaults();
    if (config_path.empty())
        return s;
    std::ifstream in(config_path);
    if (!in)
        throw std::invalid_argument("cannot read config file " + config_path);
    Json config;
    try {
        config = Json::parse(in);
    } catch (const Json::parse_error&) {
        throw std::invalid_argument("config file " + config_path + " is not valid JSON");
    }
    apply_config(s, config);
    return s;
}

Settings load_settings_from_env()
{
    const char* path = std::getenv("HOOKEXT_CONFIG");
    return load_settings(path ? path : "");
}

}  // namespace hookext
