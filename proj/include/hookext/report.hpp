#pragma once

// Result records, their JSON/CSV serialization, and matrix dumps.

#include "hookext/ext.hpp"
#include "hookext/resolution.hpp"

#include "json.hpp"

#include <optional>
#include <string>
#include <vector>

namespace hookext {

using Json = nlohmann::ordered_json;

enum class TargetFamily { tensor, hook };

std::string to_string(TargetFamily f);
TargetFamily parse_target_family(const std::string& s);

/// The module M of a cell: Δ(a+k,1^{b-k}) or D_{a+k} (x) Λ^{b-k}.
Target cell_target(TargetFamily f, int a, int b, int k);

/// One cell of a sweep.  Ordered lexicographically in (a,b,k,i), then family.
struct CellKey {
    int a = 1, b = 0, k = 0, i = 1;
    TargetFamily target = TargetFamily::hook;

    friend auto operator<=>(const CellKey&, const CellKey&) = default;
    friend bool operator==(const CellKey&, const CellKey&) = default;
};

/// Throws std::invalid_argument unless a >= 1, b >= 0, 0 <= k <= b, i >= 1.
void validate_cell(const CellKey& key);

struct ResultRecord {
    CellKey key;
    std::string module;                  // "Δ(4,1^1)"
    AbelianGroup group;                  // Ext^i
    std::optional<AbelianGroup> expected;
    double wall_ms = 0;                  // not part of any deterministic output

    bool has_expectation() const { return expected.has_value(); }
    bool matches() const { return !expected || *expected == group; }
};

ResultRecord compute_record(const CellKey& key);

/// "0", "Z", "Z_2 ⊕ Z_4"; " + " instead of " ⊕ " when ascii.
std::string render_group(const AbelianGroup& g, bool ascii = false);
/// Inverse of render_group (either separator).
AbelianGroup parse_group(const std::string& s);

/// Module name with Δ, ⊗, Λ spelled out in ASCII when requested.
std::string render_module(const Target& m, bool ascii = false);

Json to_json(const ResultRecord& r, bool ascii = false);
ResultRecord record_from_json(const Json& j);

std::string csv_header();
std::string to_csv_row(const ResultRecord& r, bool ascii = false);
std::string csv_field(const std::string& s);

/// Multi-line human-readable record.
std::string to_text(const ResultRecord& r, bool ascii = false);

// ---------------------------------------------------------------------------
// matrix dumps

/// Basis element label: tableau bar notation for hook targets, "x (x) w"
/// for tensor targets.
std::string basis_label(const Target& m, const Monomial& x);

std::string dump_text(const Differential& d);
Json dump_json(const Differential& d);
std::string dump_csv(const Differential& d);

/// Inverse of dump_json / dump_csv on the matrix part.
DifferentialMatrix matrix_from_json(const Json& j);
DifferentialMatrix matrix_from_csv(const std::string& csv, std::size_t rows, std::size_t cols);

}  // namespace hookext
