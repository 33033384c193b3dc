#pragma once

#include <string>
#include <utility>

namespace hookext {

/// Outcome of a structural or relation check.  `detail` names the first
/// violation on failure, or summarises what was checked on success.
struct CheckReport {
    bool passed = true;
    std::string detail;

    static CheckReport ok(std::string d = {}) { return {true, std::move(d)}; }
    static CheckReport fail(std::string d) { return {false, std::move(d)}; }

    explicit operator bool() const { return passed; }
};

}  // namespace hookext
