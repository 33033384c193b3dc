#pragma once

// Single-file persistent store of result records.  The file holds the
// entries together with an FNV-1a checksum over them; a file that fails to
// parse or whose checksum does not match is ignored with a warning.

#include "hookext/report.hpp"

#include <cstdint>
#include <filesystem>
#include <map>
#include <mutex>
#include <optional>
#include <ostream>
#include <string>

namespace hookext {

std::uint64_t fnv1a(const std::string& data);

/// Hash of the code version and record schema; part of every cache key.
std::string code_version_hash();

std::string cache_key(const CellKey& key);

/// $XDG_CACHE_HOME/hookext/results.json, else ~/.cache/hookext/results.json,
/// else ./.hookext-cache.json.
std::filesystem::path default_cache_path();

class ResultCache {
public:
    /// Loads `file` if it exists.  Problems are reported on `warnings`.
    explicit ResultCache(std::filesystem::path file, std::ostream* warnings = nullptr);

    const std::filesystem::path& path() const { return file_; }
    std::size_t size() const;

    std::optional<ResultRecord> lookup(const CellKey& key) const;
    void store(const ResultRecord& r);

    /// Writes the file (through a temporary and a rename) if anything changed.
    void flush();

    /// Removes the cache file; returns whether one existed.
    static bool clear(const std::filesystem::path& file);

private:
    std::filesystem::path file_;
    std::ostream* warnings_;
    mutable std::mutex mutex_;
    std::map<std::string, Json> entries_;
    bool dirty_ = false;
};

}  // namespace hookext
