#pragma once

// Sweeps over (a, b, k, i): tables of Ext groups and the verification
// checks, run on a worker pool and merged in a fixed order.

#include "hookext/cache.hpp"
#include "hookext/report.hpp"

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace hookext {

struct SweepSpec {
    int min_a = 1, max_a = 4;
    int min_b = 1, max_b = 5;
    std::optional<int> k;  // restrict to one k
    std::optional<int> i;  // restrict to one i
    TargetFamily target = TargetFamily::hook;
    std::vector<long> primes{2, 3, 5};
    unsigned jobs = 1;
    std::vector<std::string> theorems;  // empty: every check

    /// Throws std::invalid_argument on empty ranges or bad values.
    void validate() const;
};

/// Check groups accepted by `verify --theorem`, in run order.
const std::vector<std::string>& theorem_ids();

/// Calls f(0..n-1) on `jobs` threads.  The first exception (lowest index)
/// is rethrown after all workers finish.
void parallel_for(std::size_t n, unsigned jobs, const std::function<void(std::size_t)>& f);

/// Table cells in (a,b,k,i) order: 1 <= k <= b (k < b for tensor targets),
/// 1 <= i <= b.
std::vector<CellKey> table_cells(const SweepSpec& spec);

/// One record per cell of table_cells, reading and filling `cache` if given.
std::vector<ResultRecord> run_table(const SweepSpec& spec, ResultCache* cache = nullptr);

struct CheckOutcome {
    std::string theorem;
    std::string cell;
    bool passed = true;
    std::string detail;
    std::optional<ResultRecord> record;
};

struct TheoremTally {
    std::string theorem;
    std::size_t passed = 0, failed = 0;
};

struct VerifySummary {
    std::vector<CheckOutcome> outcomes;  // in run order
    std::vector<TheoremTally> tallies;
    std::size_t passed = 0, failed = 0;

    std::size_t total() const { return passed + failed; }
    const CheckOutcome* first_failure() const;
};

VerifySummary run_verify(const SweepSpec& spec, ResultCache* cache = nullptr);

std::string verify_text(const VerifySummary& s, bool ascii = false);
Json verify_json(const VerifySummary& s, bool ascii = false);

}  // namespace hookext
