#include "hookext/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace hookext {

const std::vector<std::string>& theorem_ids()
{
    static const std::vector<std::string> ids{"2.3", "3.1", "3.3", "3.4", "3.5", "4.1",
                                              "4.2", "4.4", "4.5", "4.6", "4.7"};
    return ids;
}

void SweepSpec::validate() const
{
    if (min_a < 1)
        throw std::invalid_argument("a ranges must start at 1 or above");
    if (min_b < 1)
        throw std::invalid_argument("b ranges must start at 1 or above");
    if (max_a < min_a || max_b < min_b)
        throw std::invalid_argument("empty range");
    if (k && (*k < 1 || *k > max_b))
        throw std::invalid_argument("empty range: k must lie in [1, max-b]");
    if (i && (*i < 1 || *i > max_b))
        throw std::invalid_argument("empty range: i must lie in [1, max-b]");
    if (jobs < 1)
        throw std::invalid_argument("jobs must be >= 1");
    for (long p : primes)
        if (!is_prime(p))
            throw std::invalid_argument(std::to_string(p) + " is not prime");
    for (const auto& t : theorems)
        if (std::find(theorem_ids().begin(), theorem_ids().end(), t) == theorem_ids().end())
            throw std::invalid_argument("unknown theorem '" + t + "'");
}

void parallel_for(std::size_t n, unsigned jobs, const std::function<void(std::size_t)>& f)
{
    std::vector<std::exception_ptr> errors(n);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t j = next++; j < n; j = next++) {
            try {
                f(j);
            } catch (...) {
                errors[j] = std::current_exception();
            }
        }
    };
    const unsigned threads = static_cast<unsigned>(std::min<std::size_t>(std::max(1u, jobs), n));
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < threads; ++t)
            pool.emplace_back(worker);
        for (auto& t : pool)
            t.join();
    }
    for (auto& e : errors)
        if (e)
            std::rethrow_exception(e);
}

std::vector<CellKey> table_cells(const SweepSpec& spec)
{
    spec.validate();
    std::vector<CellKey> cells;
    for (int a = spec.min_a; a <= spec.max_a; ++a)
        for (int b = spec.min_b; b <= spec.max_b; ++b) {
            const int k_max = spec.target == TargetFamily::tensor ? b - 1 : b;
            for (int k = 1; k <= k_max; ++k) {
                if (spec.k && k != *spec.k)
                    continue;
                for (int i = 1; i <= b; ++i)
                    if (!spec.i || i == *spec.i)
                        cells.push_back({a, b, k, i, spec.target});
            }
        }
    if (cells.empty())
        throw std::invalid_argument("empty range: no cells match");
    return cells;
}

namespace {

ResultRecord cached_record(const CellKey& key, ResultCache* cache)
{
    if (cache)
        if (auto r = cache->lookup(key))
            return *r;
    ResultRecord r = compute_record(key);
    if (cache)
        cache->store(r);
    return r;
}

}  // namespace

std::vector<ResultRecord> run_table(const SweepSpec& spec, ResultCache* cache)
{
    const auto cells = table_cells(spec);
    std::vector<ResultRecord> out(cells.size());
    parallel_for(cells.size(), spec.jobs, [&](std::size_t j) { out[j] = cached_record(cells[j], cache); });
    return out;
}

// ---------------------------------------------------------------------------
// verification

namespace {

using Task = std::function<CheckOutcome()>;

std::string cell_name(int a, int b, std::optional<int> k = {}, std::optional<int> i = {})
{
    std::ostringstream os;
    os << "a=" << a << " b=" << b;
    if (k)
        os << " k=" << *k;
    if (i)
        os << " i=" << *i;
    return os.str();
}

CheckOutcome from_report(std::string theorem, std::string cell, const CheckReport& r)
{
    return {std::move(theorem), std::move(cell), r.passed, r.detail, std::nullopt};
}

CheckOutcome from_record(std::string theorem, const ResultRecord& r)
{
    CheckOutcome o{std::move(theorem), cell_name(r.key.a, r.key.b, r.key.k, r.key.i), r.matches(), "", r};
    o.detail = "computed " + render_group(r.group) + ", expected " +
               (r.expected ? render_group(*r.expected) : std::string("(no closed form)"));
    return o;
}

class TaskBuilder {
public:
    TaskBuilder(const SweepSpec& spec, ResultCache* cache) : spec_(spec), cache_(cache) {}

    std::vector<Task> build()
    {
        for (const auto& id : theorem_ids())
            if (spec_.theorems.empty() ||
                std::find(spec_.theorems.begin(), spec_.theorems.end(), id) != spec_.theorems.end())
                add(id);
        return std::move(tasks_);
    }

private:
    const SweepSpec& spec_;
    ResultCache* cache_;
    std::vector<Task> tasks_;

    bool k_ok(int k) const { return !spec_.k || *spec_.k == k; }
    bool i_ok(int i) const { return !spec_.i || *spec_.i == i; }

    template <class F>
    void for_ab(F f)
    {
        for (int a = spec_.min_a; a <= spec_.max_a; ++a)
            for (int b = spec_.min_b; b <= spec_.max_b; ++b)
                f(a, b);
    }

    void record_task(const std::string& id, CellKey key)
    {
        ResultCache* cache = cache_;
        tasks_.push_back([id, key, cache] { return from_record(id, cached_record(key, cache)); });
    }

    void add(const std::string& id)
    {
        ResultCache* cache = cache_;
        if (id == "2.3") {
            // closed forms for i = 1, k, > k, and Ext^i equal to Ext^i(Λ^{k+1}, D_{k+1})
            for_ab([&](int a, int b) {
                for (int k = 1; k < b; ++k)
                    for (int i = 1; i <= b; ++i) {
                        if (!k_ok(k) || !i_ok(i))
                            continue;
                        const CellKey key{a, b, k, i, TargetFamily::tensor};
                        tasks_.push_back([id, key, cache] {
                            CheckOutcome o = from_record(id, cached_record(key, cache));
                            const AbelianGroup reduced =
                                ext_group(1, key.k, tensor_target(1, key.k, key.k), key.i).ext_group;
                            if (reduced != o.record->group) {
                                o.passed = false;
                                o.detail += "; Ext^i(Λ^{k+1}, D_{k+1}) is " + render_group(reduced);
                            }
                            return o;
                        });
                    }
            });
        } else if (id == "3.1") {
            for_ab([&](int a, int b) {
                for (int k = 1; k < b; ++k) {
                    if (!k_ok(k))
                        continue;
                    const std::string cell = cell_name(a, b, k);
                    tasks_.push_back([=] {
                        return from_report(id + " first differential", cell,
                                           check_first_differential_structure(a, b, k));
                    });
                    tasks_.push_back([=] { return from_report(id + " order of g_k", cell, check_generator_g(a, b, k)); });
                }
                for (int k = 1; k <= b; ++k)
                    for (int i = 2; i <= b; ++i)
                        if (b > 1 && k_ok(k) && i_ok(i))
                            tasks_.push_back([=] {
                                return from_report(id + " block recursion", cell_name(a, b, k, i),
                                                   check_block_recursion(a, b, i, k));
                            });
                for (int k = 1; k <= b; ++k) {
                    if (!k_ok(k))
                        continue;
                    tasks_.push_back([=] {
                        return from_report(id + " d.d = 0", cell_name(a, b, k) + " hook",
                                           check_complex(a, b, hook_target(a, b, k)));
                    });
                    tasks_.push_back([=] {
                        return from_report(id + " d.d = 0", cell_name(a, b, k) + " tensor",
                                           check_complex(a, b, tensor_target(a, b, k)));
                    });
                }
            });
        } else if (id == "3.3") {
            for_ab([&](int a, int b) {
                if (k_ok(1) && i_ok(1))
                    record_task(id, {a, b, 1, 1, TargetFamily::hook});
                if (b >= 2 && k_ok(1))
                    tasks_.push_back([=] {
                        return from_report(id + " projection factor", cell_name(a, b), check_projection_factor(a, b));
                    });
            });
        } else if (id == "3.4") {
            for_ab([&](int a, int b) {
                for (int k = 2; k < b; ++k) {
                    if (!k_ok(k))
                        continue;
                    tasks_.push_back([=] {
                        const KoszulFactor f = koszul_factor(a, b, k);
                        std::string detail = "factor " + f.next_parity_factor.get_str() +
                                             (f.next_parity_holds ? " holds" : " fails") + "; factor " +
                                             f.same_parity_factor.get_str() +
                                             (f.same_parity_holds ? " holds" : " fails");
                        return CheckOutcome{id + " koszul factor", cell_name(a, b, k), f.next_parity_holds, detail,
                                            std::nullopt};
                    });
                }
            });
        } else if (id == "3.5") {
            for_ab([&](int a, int b) {
                for (int k = 2; k <= b; ++k) {
                    if (!k_ok(k) || !i_ok(1))
                        continue;
                    const CellKey key{a, b, k, 1, TargetFamily::hook};
                    tasks_.push_back([id, key, cache] {
                        CheckOutcome o = from_record(id, cached_record(key, cache));
                        const AbelianGroup via = ext1_via_induced_maps(key.a, key.b, key.k);
                        if (via != o.record->group) {
                            o.passed = false;
                            o.detail += "; kernel of the induced map gives " + render_group(via);
                        }
                        return o;
                    });
                }
            });
        } else if (id == "4.1") {
            for_ab([&](int a, int b) {
                for (int k = 1; k <= b; ++k) {
                    if (!k_ok(k) || !i_ok(k))
                        continue;
                    const CellKey key{a, b, k, k, TargetFamily::hook};
                    tasks_.push_back([id, key, cache] {
                        CheckOutcome o = from_record(id, cached_record(key, cache));
                        const int r = key.a + key.b;
                        if (r < 2 || key.k > r - 1)
                            return o;
                        const Integer d = leading_binomial_gcd(r, key.k);
                        if (d * divisor_lcm(r, key.k) != r) {
                            o.passed = false;
                            o.detail += "; d_k · l_k != a+b";
                        }
                        return o;
                    });
                }
            });
        } else if (id == "4.2") {
            for_ab([&](int a, int b) {
                for (int k = 1; k <= b; ++k)
                    for (int i = k + 1; i <= b; ++i)
                        if (k_ok(k) && i_ok(i))
                            record_task(id, {a, b, k, i, TargetFamily::hook});
            });
        } else if (id == "4.4" || id == "4.5" || id == "4.6") {
            for_ab([&](int a, int b) {
                for (int k = 1; k <= b; ++k) {
                    if (!k_ok(k))
                        continue;
                    const std::string cell = cell_name(a, b, k);
                    if (id == "4.4")
                        tasks_.push_back([=] { return from_report(id + " gamma", cell, check_gamma(a, b, k)); });
                    else if (id == "4.5")
                        tasks_.push_back(
                            [=] { return from_report(id + " delta relations", cell, check_delta_relations(a, b, k)); });
                    else
                        tasks_.push_back([=] { return from_report(id + " cyclicity", cell, check_cyclicity(a, b, k)); });
                }
            });
        } else if (id == "4.7") {
            const std::vector<long> primes = spec_.primes;
            for_ab([&](int a, int b) {
                for (int k = 1; k <= b; ++k) {
                    if (!k_ok(k))
                        continue;
                    tasks_.push_back([=] { return modular_check(id, a, b, k, primes); });
                }
            });
        }
    }

    static CheckOutcome modular_check(const std::string& id, int a, int b, int k, const std::vector<long>& primes)
    {
        const Target m = hook_target(a, b, k);
        std::ostringstream fail;
        for (long p : primes) {
            for (int i = 0; i <= b; ++i) {
                const std::size_t direct = ext_modular(a, b, m, i, p);
                const std::size_t uc = universal_coefficient_dimension(a, b, m, i, p);
                if (direct != uc) {
                    fail << "p=" << p << " i=" << i << ": rank computation gives " << direct
                         << ", universal coefficients give " << uc;
                    return {id + " modular dimensions", cell_name(a, b, k), false, fail.str(), std::nullopt};
                }
                if (auto e = expected_modular_dimension(a, b, k, i, p); e && *e != direct) {
                    fail << "p=" << p << " i=" << i << ": dimension " << direct << ", expected " << *e;
                    return {id + " modular dimensions", cell_name(a, b, k), false, fail.str(), std::nullopt};
                }
            }
        }
        return {id + " modular dimensions", cell_name(a, b, k), true, "", std::nullopt};
    }
};

std::string theorem_of(const CheckOutcome& o)
{
    return o.theorem.substr(0, o.theorem.find(' '));
}

}  // namespace

const CheckOutcome* VerifySummary::first_failure() const
{
    for (const auto& o : outcomes)
        if (!o.passed)
            return &o;
    return nullptr;
}

VerifySummary run_verify(const SweepSpec& spec, ResultCache* cache)
{
    spec.validate();
    const std::vector<Task> tasks = TaskBuilder(spec, cache).build();
    if (tasks.empty())
        throw std::invalid_argument("empty range: no checks apply");

    VerifySummary s;
    s.outcomes.resize(tasks.size());
    parallel_for(tasks.size(), spec.jobs, [&](std::size_t j) { s.outcomes[j] = tasks[j](); });

    for (const auto& o : s.outcomes) {
        const std::string t = theorem_of(o);
        if (s.tallies.empty() || s.tallies.back().theorem != t)
            s.tallies.push_back({t, 0, 0});
        (o.passed ? s.tallies.back().passed : s.tallies.back().failed)++;
        (o.passed ? s.passed : s.failed)++;
    }
    return s;
}

std::string verify_text(const VerifySummary& s, bool ascii)
{
    std::ostringstream os;
    for (const auto& t : s.tallies)
        os << t.theorem << ": " << t.passed << "/" << t.passed + t.failed << " passed\n";
    if (const CheckOutcome* f = s.first_failure()) {
        os << s.failed << " of " << s.total() << " checks failed\n";
        os << "first counterexample: [" << f->theorem << "] " << f->cell << ": " << f->detail << "\n";
        if (f->record)
            os << to_json(*f->record, ascii).dump() << "\n";
    } else {
        os << "all " << s.total() << " checks passed\n";
    }
    return os.str();
}

Json verify_json(const VerifySummary& s, bool ascii)
{
    Json j;
    j["total"] = s.total();
    j["passed"] = s.passed;
    j["failed"] = s.failed;
    Json tallies = Json::array();
    for (const auto& t : s.tallies)
        tallies.push_back({{"theorem", t.theorem}, {"passed", t.passed}, {"failed", t.failed}});
    j["theorems"] = tallies;
    if (const CheckOutcome* f = s.first_failure()) {
        Json c;
        c["check"] = f->theorem;
        c["cell"] = f->cell;
        c["detail"] = f->detail;
        c["record"] = f->record ? to_json(*f->record, ascii) : Json(nullptr);
        j["first_failure"] = c;
    } else {
        j["first_failure"] = nullptr;
    }
    return j;
}

}  // namespace hookext
