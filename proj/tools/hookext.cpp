// Command-line front end: ext, verify, dump-matrix, table, cache clear.
//
// Exit codes: 0 success, 1 verification mismatch, 2 usage error.

#include "hookext/cache.hpp"
#include "hookext/config.hpp"
#include "hookext/report.hpp"
#include "hookext/sweep.hpp"

#include "CLI11.hpp"

#include <iomanip>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

using namespace hookext;

namespace {

constexpr int kOk = 0;
constexpr int kMismatch = 1;
constexpr int kUsage = 2;

struct Options {
    Settings settings;
    int a = 0, b = 0, k = 0, i = 0;
    std::optional<int> only_k, only_i;
    std::string target = "hook";
    std::vector<std::string> theorems;
    bool no_cache = false;
};

void add_output_flags(CLI::App* cmd, Options& o, bool csv = true)
{
    std::vector<std::string> formats{"text", "json"};
    if (csv)
        formats.push_back("csv");
    cmd->add_option("--format", o.settings.format, "output format")->check(CLI::IsMember(formats));
    cmd->add_flag("--ascii", o.settings.ascii, "ASCII group separators and module names");
}

void add_cache_flags(CLI::App* cmd, Options& o)
{
    cmd->add_option("--jobs", o.settings.jobs, "worker threads")->check(CLI::PositiveNumber);
    cmd->add_flag("--no-cache", o.no_cache, "neither read nor write the result cache");
}

void add_target_flag(CLI::App* cmd, Options& o)
{
    cmd->add_option("--target", o.target, "target family")->check(CLI::IsMember({"tensor", "hook"}));
}

std::unique_ptr<ResultCache> open_cache(const Options& o)
{
    if (o.no_cache || !o.settings.use_cache)
        return nullptr;
    return std::make_unique<ResultCache>(o.settings.cache_file, &std::cerr);
}

void close_cache(ResultCache* cache)
{
    if (!cache)
        return;
    try {
        cache->flush();
    } catch (const std::exception& e) {
        std::cerr << "warning: could not write cache: " << e.what() << "\n";
    }
}

SweepSpec sweep_spec(const Options& o)
{
    SweepSpec spec;
    spec.max_a = o.settings.max_a;
    spec.max_b = o.settings.max_b;
    spec.k = o.only_k;
    spec.i = o.only_i;
    spec.target = parse_target_family(o.target);
    spec.primes = o.settings.primes;
    spec.jobs = o.settings.jobs;
    spec.theorems = o.theorems;
    spec.validate();
    return spec;
}

int cmd_ext(const Options& o)
{
    const CellKey key{o.a, o.b, o.k, o.i, parse_target_family(o.target)};
    validate_cell(key);
    auto cache = open_cache(o);
    std::optional<ResultRecord> r;
    if (cache)
        r = cache->lookup(key);
    if (!r) {
        r = compute_record(key);
        if (cache)
            cache->store(*r);
    }
    close_cache(cache.get());

    const bool ascii = o.settings.ascii;
    if (o.settings.format == "json")
        std::cout << to_json(*r, ascii).dump(2) << "\n";
    else if (o.settings.format == "csv")
        std::cout << csv_header() << "\r\n" << to_csv_row(*r, ascii) << "\r\n";
    else
        std::cout << to_text(*r, ascii);
    return kOk;
}

int cmd_verify(const Options& o)
{
    const SweepSpec spec = sweep_spec(o);
    auto cache = open_cache(o);
    const VerifySummary s = run_verify(spec, cache.get());
    close_cache(cache.get());

    const bool ascii = o.settings.ascii;
    if (o.settings.format == "json") {
        std::cout << verify_json(s, ascii).dump(2) << "\n";
    } else if (o.settings.format == "csv") {
        std::cout << "check,cell,passed,detail\r\n";
        for (const auto& c : s.outcomes)
            std::cout << csv_field(c.theorem) << ',' << csv_field(c.cell) << ',' << (c.passed ? "true" : "false")
                      << ',' << csv_field(c.detail) << "\r\n";
    } else {
        std::cout << verify_text(s, ascii);
    }
    return s.failed == 0 ? kOk : kMismatch;
}

int cmd_dump(const Options& o)
{
    const CellKey key{o.a, o.b, o.k, o.i, parse_target_family(o.target)};
    validate_cell(key);
    if (o.i > o.b)
        throw std::invalid_argument("dump-matrix needs 1 <= i <= b");
    const Differential d = differential(o.a, o.b, o.i, cell_target(key.target, o.a, o.b, o.k));
    if (o.settings.format == "json")
        std::cout << dump_json(d).dump(2) << "\n";
    else if (o.settings.format == "csv")
        std::cout << dump_csv(d);
    else
        std::cout << dump_text(d);
    return kOk;
}

int cmd_table(const Options& o)
{
    const SweepSpec spec = sweep_spec(o);
    auto cache = open_cache(o);
    const auto records = run_table(spec, cache.get());
    close_cache(cache.get());

    const bool ascii = o.settings.ascii;
    if (o.settings.format == "json") {
        Json out = Json::array();
        for (const auto& r : records)
            out.push_back(to_json(r, ascii));
        std::cout << out.dump(2) << "\n";
    } else if (o.settings.format == "csv") {
        std::cout << csv_header() << "\r\n";
        for (const auto& r : records)
            std::cout << to_csv_row(r, ascii) << "\r\n";
    } else {
        std::cout << std::left << std::setw(3) << "a" << std::setw(3) << "b" << std::setw(3) << "k" << std::setw(3)
                  << "i" << std::setw(8) << "target" << std::setw(20) << "group" << std::setw(20) << "expected"
                  << "match\n";
        for (const auto& r : records) {
            // setw counts bytes, so pad by hand around the multi-byte ⊕
            auto pad = [](const std::string& s, std::size_t w) {
                std::size_t glyphs = 0;
                for (unsigned char c : s)
                    glyphs += (c & 0xC0) != 0x80;
                return s + std::string(glyphs < w ? w - glyphs : 1, ' ');
            };
            std::cout << std::setw(3) << r.key.a << std::setw(3) << r.key.b << std::setw(3) << r.key.k
                      << std::setw(3) << r.key.i << std::setw(8) << to_string(r.key.target)
                      << pad(render_group(r.group, ascii), 20)
                      << pad(r.expected ? render_group(*r.expected, ascii) : "-", 20)
                      << (r.expected ? (r.matches() ? "yes" : "NO") : "-") << "\n";
        }
    }
    return kOk;
}

}  // namespace

int main(int argc, char** argv)
{
    Options o;
    try {
        o.settings = load_settings_from_env();
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }

    CLI::App app{"Integral Ext groups between hook Weyl modules"};
    app.require_subcommand(1);

    auto* ext = app.add_subcommand("ext", "compute Ext^i(Δ(a,1^b), M) for one cell");
    ext->add_option("--a", o.a, "arm of the source hook")->required();
    ext->add_option("--b", o.b, "leg of the source hook")->required();
    ext->add_option("--k", o.k, "shift of the target")->required();
    ext->add_option("--i", o.i, "cohomological degree")->required();
    add_target_flag(ext, o);
    add_output_flags(ext, o);
    add_cache_flags(ext, o);

    auto* verify = app.add_subcommand("verify", "compare computed groups with the closed forms and run the checks");
    verify->add_option("--max-a", o.settings.max_a, "largest a");
    verify->add_option("--max-b", o.settings.max_b, "largest b");
    verify->add_option("--k", o.only_k, "restrict to one k");
    verify->add_option("--i", o.only_i, "restrict to one i");
    verify->add_option("--theorem", o.theorems, "restrict to check groups (repeatable)")
        ->check(CLI::IsMember(theorem_ids()));
    add_output_flags(verify, o);
    add_cache_flags(verify, o);

    auto* dump = app.add_subcommand("dump-matrix", "print the matrix of the i-th differential");
    dump->add_option("--a", o.a, "arm of the source hook")->required();
    dump->add_option("--b", o.b, "leg of the source hook")->required();
    dump->add_option("--k", o.k, "shift of the target")->required();
    dump->add_option("--i", o.i, "degree of the differential")->required();
    add_target_flag(dump, o);
    add_output_flags(dump, o);

    auto* table = app.add_subcommand("table", "tabulate Ext groups over a range");
    table->add_option("--max-a", o.settings.max_a, "largest a");
    table->add_option("--max-b", o.settings.max_b, "largest b");
    table->add_option("--k", o.only_k, "restrict to one k");
    table->add_option("--i", o.only_i, "restrict to one i");
    add_target_flag(table, o);
    add_output_flags(table, o);
    add_cache_flags(table, o);

    auto* cache = app.add_subcommand("cache", "manage the result cache");
    cache->require_subcommand(1);
    auto* clear = cache->add_subcommand("clear", "delete the cache file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e) == 0 ? kOk : kUsage;
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e) == 0 ? kOk : kUsage;
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }

    try {
        if (ext->parsed())
            return cmd_ext(o);
        if (verify->parsed())
            return cmd_verify(o);
        if (dump->parsed())
            return cmd_dump(o);
        if (table->parsed())
            return cmd_table(o);
        if (clear->parsed()) {
            const bool existed = ResultCache::clear(o.settings.cache_file);
            std::cout << (existed ? "removed " : "no cache at ") << o.settings.cache_file.string() << "\n";
            return kOk;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}
