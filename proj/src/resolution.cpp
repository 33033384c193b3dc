#include "hookext/resolution.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace hookext {

Target Target::tensor(int s, int t)
{
    if (s < 0 || t < 0)
        throw std::invalid_argument("tensor target needs s, t >= 0");
    return Target{Kind::tensor, s, t};
}

Target Target::hook(const HookShape& shape)
{
    return Target{Kind::hook, shape.arm, shape.leg};
}

std::string Target::to_string() const
{
    std::ostringstream os;
    if (is_hook())
        os << "Δ" << shape().to_string();
    else
        os << "D_" << divided << "⊗Λ^" << exterior;
    return os.str();
}

WeightBasis target_weight_basis(const Target& m, const Weight& w, int letters)
{
    if (m.is_hook())
        return hook_semistandard_basis(m.shape(), w, letters);
    return tensor_weight_basis(m.divided, m.exterior, w, letters);
}

Combination project_to_target(const Target& m, const Monomial& x)
{
    if (m.is_hook())
        return straighten(m.shape(), x);
    Monomial y = x;
    const int sign = canonicalize_word(y.word);
    if (sign == 0)
        return {};
    return Combination(y, sign);
}

Combination phi(int t, const Weight& source, const Monomial& x, const Target& m)
{
    if (t < 1)
        throw std::invalid_argument("phi needs t >= 1");
    if (t >= static_cast<int>(source.length()))
        return {};
    Combination out;
    for (const auto& [y, c] : merge_letters(x, t))
        out.add(project_to_target(m, y), c);
    return out;
}

HomSpaceBasis::HomSpaceBasis(int a, int b, int i, const Target& m)
    : degree_(i), letters_(b + 1), target_(m)
{
    if (a < 1 || b < 0)
        throw std::invalid_argument("hom_space needs a >= 1 and b >= 0");
    if (i < 0)
        throw std::invalid_argument("hom_space needs i >= 0");
    if (m.degree() != a + b)
        throw std::invalid_argument("target " + m.to_string() + " has degree " +
                                    std::to_string(m.degree()) + ", expected " + std::to_string(a + b));
    if (i > b)
        return;
    for (const auto& w : resolution_compositions(a, b, i)) {
        Block blk{w, target_weight_basis(m, w, letters_), dimension_};
        dimension_ += blk.basis.size();
        block_of_.emplace(w, blocks_.size());
        blocks_.push_back(std::move(blk));
    }
}

std::size_t HomSpaceBasis::block_index(const Weight& w) const
{
    auto it = block_of_.find(w);
    if (it == block_of_.end())
        throw std::out_of_range("weight " + w.to_string() + " is not a summand of P_" +
                                std::to_string(degree_));
    return it->second;
}

std::optional<std::size_t> HomSpaceBasis::flat_index(const Weight& w, const Monomial& x) const
{
    auto it = block_of_.find(w);
    if (it == block_of_.end())
        return std::nullopt;
    const Block& blk = blocks_[it->second];
    auto j = blk.basis.index_of(x);
    if (!j)
        return std::nullopt;
    return blk.offset + *j;
}

std::pair<const HomSpaceBasis::Block*, const Monomial*> HomSpaceBasis::element(std::size_t flat) const
{
    if (flat >= dimension_)
        throw std::out_of_range("flat index past the end of the Hom space");
    auto it = std::upper_bound(blocks_.begin(), blocks_.end(), flat,
                               [](std::size_t f, const Block& b) { return f < b.offset; });
    const Block& blk = *std::prev(it);
    return {&blk, &blk.basis[flat - blk.offset]};
}

void HomSpaceBasis::accumulate(IntVector& v, const Weight& w, const Combination& x) const
{
    if (v.size() != dimension_)
        v.resize(dimension_);
    for (const auto& [y, c] : x) {
        auto j = flat_index(w, y);
        if (!j)
            throw std::logic_error("element " + render_tableau(y) + " is not a basis element of weight " +
                                   w.to_string());
        v[*j] += c;
    }
}

HomSpaceBasis hom_space(int a, int b, int i, const Target& m)
{
    if (i > b)
        throw std::invalid_argument("hom_space needs i <= b");
    return HomSpaceBasis(a, b, i, m);
}

void DifferentialMatrix::add(std::size_t r, std::size_t c, const Integer& x)
{
    if (x == 0)
        return;
    auto [it, inserted] = entries_.try_emplace({r, c}, x);
    if (!inserted) {
        it->second += x;
        if (it->second == 0)
            entries_.erase(it);
    }
}

Integer DifferentialMatrix::at(std::size_t r, std::size_t c) const
{
    auto it = entries_.find({r, c});
    return it == entries_.end() ? Integer(0) : it->second;
}

IntMatrix DifferentialMatrix::dense() const
{
    IntMatrix m(rows_, cols_);
    for (const auto& [rc, x] : entries_)
        m(rc.first, rc.second) = x;
    return m;
}

namespace {

Weight merge_parts(const Weight& w, int t)
{
    std::vector<int> p;
    p.reserve(w.length() - 1);
    for (std::size_t j = 0; j < w.length(); ++j) {
        if (static_cast<int>(j) == t)
            continue;
        p.push_back(static_cast<int>(j) == t - 1 ? w[j] + w[j + 1] : w[j]);
    }
    return Weight(std::move(p));
}

}  // namespace

Differential differential(int a, int b, int i, const Target& m)
{
    if (i < 1 || i > b)
        throw std::invalid_argument("differential needs 1 <= i <= b, got i=" + std::to_string(i));
    Differential d;
    d.a = a;
    d.b = b;
    d.i = i;
    d.target = m;
    d.domain = HomSpaceBasis(a, b, i - 1, m);
    d.codomain = HomSpaceBasis(a, b, i, m);
    d.matrix = DifferentialMatrix(d.codomain.dimension(), d.domain.dimension());

    for (const auto& blk : d.domain.blocks()) {
        const int parts = static_cast<int>(blk.weight.length());
        for (std::size_t j = 0; j < blk.basis.size(); ++j) {
            const std::size_t col = blk.offset + j;
            for (int t = 1; t < parts; ++t) {
                const Weight merged = merge_parts(blk.weight, t);
                const int sign = (t % 2 == 1) ? 1 : -1;
                for (const auto& [y, c] : phi(t, blk.weight, blk.basis[j], m)) {
                    auto row = d.codomain.flat_index(merged, y);
                    if (!row)
                        throw std::logic_error("phi produced " + render_tableau(y) +
                                               " outside the basis of weight " + merged.to_string());
                    d.matrix.add(*row, col, c * sign);
                }
            }
        }
    }
    return d;
}

DifferentialMatrix differential_matrix(int a, int b, int i, const Target& m)
{
    return differential(a, b, i, m).matrix;
}

CheckReport check_complex(int a, int b, const Target& m)
{
    for (int i = 1; i < b; ++i) {
        const IntMatrix d = differential_matrix(a, b, i, m).dense();
        const IntMatrix next = differential_matrix(a, b, i + 1, m).dense();
        if (!(next * d).is_zero())
            return CheckReport::fail("d_" + std::to_string(i + 1) + " d_" + std::to_string(i) + " != 0");
    }
    return CheckReport::ok();
}

namespace {

bool has_letter_one_in_word(const Monomial& x)
{
    return !x.word.empty() && x.word.front() == 1;
}

std::string at(std::size_t r, std::size_t c)
{
    return "(" + std::to_string(r) + "," + std::to_string(c) + ")";
}

}  // namespace

CheckReport check_first_differential_structure(int a, int b, int k)
{
    if (a < 1 || k < 1 || k >= b)
        throw std::invalid_argument("first-differential structure needs a >= 1 and 1 <= k < b");
    const Target m = Target::tensor(a + k, b - k);
    const Differential d = differential(a, b, 1, m);
    const DifferentialMatrix& e = d.matrix;

    const std::size_t blk = binom(b, k).get_ui();
    const std::size_t p = binom(b - 1, k - 1).get_ui();
    const std::size_t q = binom(b - 1, k).get_ui();
    const std::size_t dom0 = binom(b, k).get_ui();
    const std::size_t dom = binom(b + 1, k + 1).get_ui();

    if (e.cols() != dom || e.rows() != static_cast<std::size_t>(b) * blk)
        return CheckReport::fail("matrix is " + std::to_string(e.rows()) + "x" + std::to_string(e.cols()) +
                                 ", expected " + std::to_string(b * blk) + "x" + std::to_string(dom));
    if (d.codomain.blocks().size() != static_cast<std::size_t>(b))
        return CheckReport::fail("codomain does not have b blocks");

    // the split into "no 1 in the exterior part" / "one 1 there" must be a
    // prefix/suffix split of every block
    const auto& dblk = d.domain.blocks().front();
    for (std::size_t j = 0; j < dblk.basis.size(); ++j)
        if (has_letter_one_in_word(dblk.basis[j]) != (j >= dom0))
            return CheckReport::fail("domain basis element " + std::to_string(j) +
                                     " breaks the B_0/B_1 split");
    for (std::size_t t = 0; t < d.codomain.blocks().size(); ++t) {
        const auto& cb = d.codomain.blocks()[t];
        if (cb.basis.size() != blk)
            return CheckReport::fail("row block " + std::to_string(t + 1) + " has size " +
                                     std::to_string(cb.basis.size()));
        for (std::size_t j = 0; j < cb.basis.size(); ++j)
            if (has_letter_one_in_word(cb.basis[j]) != (j >= p))
                return CheckReport::fail("row block " + std::to_string(t + 1) + " element " +
                                         std::to_string(j) + " breaks the split");
    }

    // (1) first block = (A | B)
    for (std::size_t r = 0; r < blk; ++r)
        for (std::size_t c = 0; c < dom; ++c) {
            Integer want = 0;
            if (c < dom0 && c == r)
                want = r < p ? a + 1 : 1;
            if (c >= dom0 && r >= p && c - dom0 == r - p)
                want = a;
            if (e.at(r, c) != want)
                return CheckReport::fail("first block entry " + at(r, c) + " is " + e.at(r, c).get_str() +
                                         ", expected " + want.get_str());
        }

    // (2), (3)
    for (std::size_t t = 2; t <= static_cast<std::size_t>(b); ++t) {
        const std::size_t r0 = (t - 1) * blk;
        const Integer want_sum = (t % 2 == 0) ? -2 : 2;
        for (std::size_t r = r0; r < r0 + blk; ++r) {
            const bool upper = r - r0 < p;
            Integer sum = 0;
            for (std::size_t c = 0; c < dom; ++c) {
                const Integer x = e.at(r, c);
                sum += x;
                if (x != 0 && upper != (c < dom0))
                    return CheckReport::fail("row block " + std::to_string(t) + " entry " + at(r, c) +
                                             " lies outside its diagonal sub-block");
            }
            if (sum != want_sum)
                return CheckReport::fail("row " + std::to_string(r) + " of block " + std::to_string(t) +
                                         " sums to " + sum.get_str() + ", expected " + want_sum.get_str());
        }
    }

    // (4) last row (0 ... 0 ±2)
    const std::size_t last = e.rows() - 1;
    for (std::size_t c = 0; c + 1 < dom; ++c)
        if (e.at(last, c) != 0)
            return CheckReport::fail("last row has non-zero entry at column " + std::to_string(c));
    if (abs(e.at(last, dom - 1)) != 2)
        return CheckReport::fail("last row ends in " + e.at(last, dom - 1).get_str() + ", expected ±2");

    return CheckReport::ok("block sizes p=" + std::to_string(p) + " q=" + std::to_string(q));
}

namespace {

// Same element up to the number of ambient letters.
bool same_element(const Monomial& x, const Monomial& y)
{
    if (x.word != y.word)
        return false;
    const std::size_t n = std::max(x.exps.size(), y.exps.size());
    for (std::size_t l = 0; l < n; ++l) {
        const int ex = l < x.exps.size() ? x.exps[l] : 0;
        const int ey = l < y.exps.size() ? y.exps[l] : 0;
        if (ex != ey)
            return false;
    }
    return true;
}

// Number of leading basis elements whose weight has first part above `a`,
// after checking they match `small` element by element.
std::optional<std::string> compare_leading(const HomSpaceBasis& big, const HomSpaceBasis& small, int a,
                                           std::size_t& leading)
{
    leading = 0;
    std::size_t bi = 0;
    for (const auto& blk : big.blocks()) {
        if (blk.weight[0] <= a)
            break;
        if (bi >= small.blocks().size())
            return "extra block " + blk.weight.to_string();
        const auto& sb = small.blocks()[bi++];
        if (sb.weight != blk.weight || sb.basis.size() != blk.basis.size())
            return "block " + blk.weight.to_string() + " does not match " + sb.weight.to_string();
        for (std::size_t j = 0; j < blk.basis.size(); ++j)
            if (!same_element(blk.basis[j], sb.basis[j]))
                return "basis element " + render_tableau(blk.basis[j]) + " differs";
        leading += blk.basis.size();
    }
    if (bi != small.blocks().size())
        return std::string("smaller complex has unmatched blocks");
    return std::nullopt;
}

}  // namespace

CheckReport check_block_recursion(int a, int b, int i, int k)
{
    if (i <= 1 || b <= 1)
        throw std::invalid_argument("block recursion needs i > 1 and b > 1");
    if (k < 1 || k > b || i > b)
        throw std::invalid_argument("block recursion needs 1 <= k <= b and i <= b");
    const Target m = Target::hook(HookShape(a, b).shift(k));
    const Differential big = differential(a, b, i, m);
    const Differential small = differential(a + 1, b - 1, i - 1, m);

    std::size_t rows = 0, cols = 0;
    if (auto err = compare_leading(big.codomain, small.codomain, a, rows))
        return CheckReport::fail("rows: " + *err);
    if (auto err = compare_leading(big.domain, small.domain, a, cols))
        return CheckReport::fail("columns: " + *err);

    for (std::size_t r = 0; r < big.matrix.rows(); ++r)
        for (std::size_t c = 0; c < cols; ++c) {
            const Integer x = big.matrix.at(r, c);
            if (r < rows) {
                const Integer y = small.matrix.at(r, c);
                if (x != y)
                    return CheckReport::fail("top-left entry " + at(r, c) + " is " + x.get_str() +
                                             ", smaller differential has " + y.get_str());
            } else if (x != 0) {
                return CheckReport::fail("bottom-left entry " + at(r, c) + " is " + x.get_str());
            }
        }
    return CheckReport::ok("top-left " + std::to_string(rows) + "x" + std::to_string(cols));
}

}  // namespace hookext
