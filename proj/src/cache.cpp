#include "hookext/cache.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <sstream>

namespace hookext {

namespace {

constexpr const char* kCodeVersion = "hookext 1.0.0; record schema 1";
constexpr const char* kFormat = "hookext-result-cache";

std::string hex64(std::uint64_t h)
{
    std::ostringstream os;
    os << std::hex << std::setw(16) << std::setfill('0') << h;
    return os.str();
}

std::string checksum(const Json& entries)
{
    return hex64(fnv1a(entries.dump()));
}

}  // namespace

std::uint64_t fnv1a(const std::string& data)
{
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : data) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

std::string code_version_hash()
{
    return hex64(fnv1a(kCodeVersion));
}

std::string cache_key(const CellKey& key)
{
    std::ostringstream os;
    os << key.a << ',' << key.b << ',' << key.k << ',' << key.i << ',' << to_string(key.target) << ','
       << code_version_hash();
    return os.str();
}

std::filesystem::path default_cache_path()
{
    if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg)
        return std::filesystem::path(xdg) / "hookext" / "results.json";
    if (const char* home = std::getenv("HOME"); home && *home)
        return std::filesystem::path(home) / ".cache" / "hookext" / "results.json";
    return ".hookext-cache.json";
}

ResultCache::ResultCache(std::filesystem::path file, std::ostream* warnings)
    : file_(std::move(file)), warnings_(warnings)
{
    std::ifstream in(file_, std::ios::binary);
    if (!in)
        return;
    auto warn = [&](const std::string& why) {
        if (warnings_)
            *warnings_ << "warning: ignoring cache " << file_.string() << ": " << why << "\n";
    };
    Json doc;
    try {
        doc = Json::parse(in);
    } catch (const Json::parse_error&) {
        warn("not valid JSON");
        return;
    }
    if (!doc.is_object() || doc.value("format", "") != kFormat || !doc.contains("entries") ||
        !doc["entries"].is_object() || !doc.contains("checksum")) {
        warn("unrecognised layout");
        return;
    }
    if (doc["checksum"] != checksum(doc["entries"])) {
        warn("checksum mismatch");
        return;
    }
    for (const auto& [k, v] : doc["entries"].items())
        entries_.emplace(k, v);
}

std::size_t ResultCache::size() const
{
    std::lock_guard lock(mutex_);
    return entries_.size();
}

std::optional<ResultRecord> ResultCache::lookup(const CellKey& key) const
{
    std::lock_guard lock(mutex_);
    auto it = entries_.find(cache_key(key));
    if (it == entries_.end())
        return std::nullopt;
    try {
        ResultRecord r = record_from_json(it->second);
        if (r.key != key)
            return std::nullopt;
        return r;
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

void ResultCache::store(const ResultRecord& r)
{
    Json j = to_json(r);
    j["wall_ms"] = r.wall_ms;
    std::lock_guard lock(mutex_);
    entries_[cache_key(r.key)] = std::move(j);
    dirty_ = true;
}

void ResultCache::flush()
{
    std::lock_guard lock(mutex_);
    if (!dirty_)
        return;
    Json entries = Json::object();
    for (const auto& [k, v] : entries_)
        entries[k] = v;
    Json doc;
    doc["format"] = kFormat;
    doc["code_version"] = code_version_hash();
    doc["entries"] = entries;
    doc["checksum"] = checksum(entries);

    if (file_.has_parent_path())
        std::filesystem::create_directories(file_.parent_path());
    const std::filesystem::path tmp = file_.string() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out)
            throw std::runtime_error("cannot write cache file " + tmp.string());
        out << doc.dump(1) << "\n";
    }
    std::filesystem::rename(tmp, file_);
    dirty_ = false;
}

bool ResultCache::clear(const std::filesystem::path& file)
{
    return std::filesystem::remove(file);
}

}  // namespace hookext
