#include "hookext/report.hpp"

#include <algorithm>
#include <chrono>
#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace hookext {

std::string to_string(TargetFamily f)
{
    return f == TargetFamily::hook ? "hook" : "tensor";
}

TargetFamily parse_target_family(const std::string& s)
{
    if (s == "hook")
        return TargetFamily::hook;
    if (s == "tensor")
        return TargetFamily::tensor;
    throw std::invalid_argument("unknown target '" + s + "' (expected hook or tensor)");
}

Target cell_target(TargetFamily f, int a, int b, int k)
{
    return f == TargetFamily::hook ? hook_target(a, b, k) : tensor_target(a, b, k);
}

void validate_cell(const CellKey& key)
{
    if (key.a < 1)
        throw std::invalid_argument("a must be >= 1");
    if (key.b < 0)
        throw std::invalid_argument("b must be >= 0");
    if (key.k < 0 || key.k > key.b)
        throw std::invalid_argument("k must satisfy 0 <= k <= b");
    if (key.i < 1)
        throw std::invalid_argument("i must be >= 1");
}

ResultRecord compute_record(const CellKey& key)
{
    validate_cell(key);
    const auto start = std::chrono::steady_clock::now();
    const Target m = cell_target(key.target, key.a, key.b, key.k);
    ResultRecord r;
    r.key = key;
    r.module = m.to_string();
    r.group = ext_group(key.a, key.b, m, key.i).ext_group;
    r.expected = expected_ext(key.a, key.b, m, key.i);
    r.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return r;
}

std::string render_group(const AbelianGroup& g, bool ascii)
{
    return g.to_string(ascii);
}

AbelianGroup parse_group(const std::string& s)
{
    AbelianGroup g;
    std::size_t pos = 0;
    while (pos <= s.size()) {
        std::size_t next = std::string::npos, skip = 0;
        for (const std::string sep : {" ⊕ ", " + "}) {
            const std::size_t at = s.find(sep, pos);
            if (at < next)
                next = at, skip = sep.size();
        }
        const std::string tok = s.substr(pos, next == std::string::npos ? std::string::npos : next - pos);
        if (tok == "Z")
            ++g.free_rank;
        else if (tok.rfind("Z_", 0) == 0 && tok.size() > 2)
            g.torsion.emplace_back(tok.substr(2));
        else if (tok != "0")
            throw std::invalid_argument("cannot parse group '" + s + "'");
        if (next == std::string::npos)
            break;
        pos = next + skip;
    }
    return g;
}

namespace {

void replace_all(std::string& s, const std::string& from, const std::string& to)
{
    for (std::size_t at = s.find(from); at != std::string::npos; at = s.find(from, at + to.size()))
        s.replace(at, from.size(), to);
}

Json integer_json(const Integer& x)
{
    if (x.fits_slong_p())
        return x.get_si();
    return x.get_str();
}

Integer integer_from_json(const Json& j)
{
    if (j.is_string())
        return Integer(j.get<std::string>());
    return Integer(j.get<long>());
}

}  // namespace

std::string render_module(const Target& m, bool ascii)
{
    std::string s = m.to_string();
    if (ascii) {
        replace_all(s, "Δ", "Delta");
        replace_all(s, "⊗", " (x) ");
        replace_all(s, "Λ", "L");
    }
    return s;
}

Json to_json(const ResultRecord& r, bool ascii)
{
    Json j;
    j["a"] = r.key.a;
    j["b"] = r.key.b;
    j["k"] = r.key.k;
    j["i"] = r.key.i;
    j["target"] = to_string(r.key.target);
    j["module"] = render_module(cell_target(r.key.target, r.key.a, r.key.b, r.key.k), ascii);
    j["group"] = render_group(r.group, ascii);
    j["free_rank"] = r.group.free_rank;
    Json factors = Json::array();
    for (const auto& t : r.group.torsion)
        factors.push_back(integer_json(t));
    j["invariant_factors"] = factors;
    j["expected"] = r.expected ? Json(render_group(*r.expected, ascii)) : Json(nullptr);
    j["match"] = r.expected ? Json(r.matches()) : Json(nullptr);
    return j;
}

ResultRecord record_from_json(const Json& j)
{
    ResultRecord r;
    r.key.a = j.at("a").get<int>();
    r.key.b = j.at("b").get<int>();
    r.key.k = j.at("k").get<int>();
    r.key.i = j.at("i").get<int>();
    r.key.target = parse_target_family(j.at("target").get<std::string>());
    validate_cell(r.key);
    r.module = cell_target(r.key.target, r.key.a, r.key.b, r.key.k).to_string();
    r.group.free_rank = j.at("free_rank").get<std::size_t>();
    for (const auto& f : j.at("invariant_factors"))
        r.group.torsion.push_back(integer_from_json(f));
    if (!j.at("expected").is_null())
        r.expected = parse_group(j.at("expected").get<std::string>());
    if (j.contains("wall_ms"))
        r.wall_ms = j.at("wall_ms").get<double>();
    return r;
}

std::string csv_field(const std::string& s)
{
    if (s.find_first_of(",\"\r\n") == std::string::npos)
        return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"')
            out += '"';
        out += c;
    }
    return out + "\"";
}

std::string csv_header()
{
    return "a,b,k,i,target,group,expected,match";
}

std::string to_csv_row(const ResultRecord& r, bool ascii)
{
    std::ostringstream os;
    os << r.key.a << ',' << r.key.b << ',' << r.key.k << ',' << r.key.i << ',' << to_string(r.key.target) << ','
       << csv_field(render_group(r.group, ascii)) << ','
       << (r.expected ? csv_field(render_group(*r.expected, ascii)) : "") << ','
       << (r.expected ? (r.matches() ? "true" : "false") : "");
    return os.str();
}

std::string to_text(const ResultRecord& r, bool ascii)
{
    const Target m = cell_target(r.key.target, r.key.a, r.key.b, r.key.k);
    const std::string source = render_module(Target::hook(HookShape(r.key.a, r.key.b)), ascii);
    std::ostringstream os;
    os << "Ext^" << r.key.i << "(" << source << ", " << render_module(m, ascii) << ") = "
       << render_group(r.group, ascii) << "\n";
    if (r.expected)
        os << "expected: " << render_group(*r.expected, ascii) << (r.matches() ? " (match)" : " (MISMATCH)") << "\n";
    else
        os << "expected: no closed form\n";
    return os.str();
}

// ---------------------------------------------------------------------------

std::string basis_label(const Target& m, const Monomial& x)
{
    return m.is_hook() ? render_tableau(x) : render_tensor(x);
}

namespace {

Json blocks_json(const HomSpaceBasis& basis)
{
    Json out = Json::array();
    for (const auto& blk : basis.blocks()) {
        Json b;
        b["weight"] = blk.weight.parts;
        b["offset"] = blk.offset;
        b["size"] = blk.basis.size();
        Json labels = Json::array();
        for (const auto& x : blk.basis)
            labels.push_back(basis_label(basis.target(), x));
        b["labels"] = labels;
        out.push_back(b);
    }
    return out;
}

void text_blocks(std::ostream& os, const char* title, const HomSpaceBasis& basis)
{
    os << title << ":\n";
    for (const auto& blk : basis.blocks()) {
        os << "  [" << blk.offset << "," << blk.offset + blk.basis.size() << ") weight " << blk.weight.to_string()
           << "\n";
        for (std::size_t j = 0; j < blk.basis.size(); ++j)
            os << "    " << blk.offset + j << ": " << basis_label(basis.target(), blk.basis[j]) << "\n";
    }
}

std::vector<std::size_t> block_starts(const HomSpaceBasis& basis)
{
    std::vector<std::size_t> s;
    for (const auto& blk : basis.blocks())
        if (blk.offset > 0)
            s.push_back(blk.offset);
    return s;
}

}  // namespace

std::string dump_text(const Differential& d)
{
    std::ostringstream os;
    os << "d_" << d.i << " : Hom(P_" << d.i - 1 << ", M) -> Hom(P_" << d.i << ", M), a=" << d.a << " b=" << d.b
       << " M=" << d.target.to_string() << "\n";
    os << "rows " << d.matrix.rows() << ", cols " << d.matrix.cols() << "\n";
    text_blocks(os, "column blocks", d.domain);
    text_blocks(os, "row blocks", d.codomain);

    const IntMatrix m = d.matrix.dense();
    std::size_t width = 1;
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c)
            width = std::max(width, m(r, c).get_str().size());
    const auto col_starts = block_starts(d.domain);
    const auto row_starts = block_starts(d.codomain);
    auto is_start = [](const std::vector<std::size_t>& v, std::size_t x) {
        return std::find(v.begin(), v.end(), x) != v.end();
    };

    os << "matrix:\n";
    const std::size_t line = m.cols() * (width + 1) + 2 * col_starts.size();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        if (is_start(row_starts, r))
            os << std::string(line, '-') << "\n";
        for (std::size_t c = 0; c < m.cols(); ++c) {
            if (is_start(col_starts, c))
                os << " |";
            os << " " << std::setw(static_cast<int>(width)) << m(r, c).get_str();
        }
        os << "\n";
    }
    return os.str();
}

Json dump_json(const Differential& d)
{
    Json j;
    j["a"] = d.a;
    j["b"] = d.b;
    j["i"] = d.i;
    j["target"] = d.target.is_hook() ? "hook" : "tensor";
    j["module"] = d.target.to_string();
    j["rows"] = d.matrix.rows();
    j["cols"] = d.matrix.cols();
    j["column_blocks"] = blocks_json(d.domain);
    j["row_blocks"] = blocks_json(d.codomain);
    Json entries = Json::array();
    for (const auto& [rc, x] : d.matrix.entries())
        entries.push_back(Json::array({rc.first, rc.second, integer_json(x)}));
    j["entries"] = entries;
    return j;
}

std::string dump_csv(const Differential& d)
{
    std::ostringstream os;
    os << "row,col,value\r\n";
    for (const auto& [rc, x] : d.matrix.entries())
        os << rc.first << ',' << rc.second << ',' << x.get_str() << "\r\n";
    return os.str();
}

DifferentialMatrix matrix_from_json(const Json& j)
{
    DifferentialMatrix m(j.at("rows").get<std::size_t>(), j.at("cols").get<std::size_t>());
    for (const auto& e : j.at("entries")) {
        const auto r = e.at(0).get<std::size_t>(), c = e.at(1).get<std::size_t>();
        if (r >= m.rows() || c >= m.cols())
            throw std::invalid_argument("matrix entry out of range");
        m.add(r, c, integer_from_json(e.at(2)));
    }
    return m;
}

DifferentialMatrix matrix_from_csv(const std::string& csv, std::size_t rows, std::size_t cols)
{
    DifferentialMatrix m(rows, cols);
    std::istringstream in(csv);
    std::string line;
    bool header = true;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        if (line.empty())
            continue;
        if (header) {
            header = false;
            if (line != "row,col,value")
                throw std::invalid_argument("triplet CSV must start with row,col,value");
            continue;
        }
        std::istringstream fields(line);
        std::string r, c, v;
        if (!std::getline(fields, r, ',') || !std::getline(fields, c, ',') || !std::getline(fields, v))
            throw std::invalid_argument("malformed triplet line '" + line + "'");
        const std::size_t ri = std::stoul(r), ci = std::stoul(c);
        if (ri >= rows || ci >= cols)
            throw std::invalid_argument("matrix entry out of range");
        m.add(ri, ci, Integer(v));
    }
    return m;
}

}  // namespace hookext
