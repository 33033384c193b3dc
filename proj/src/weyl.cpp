#include "hookext/weyl.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace hookext {

int Monomial::divided_degree() const
{
    return std::accumulate(exps.begin(), exps.end(), 0);
}

std::vector<int> Monomial::expanded_word() const
{
    std::vector<int> w;
    w.reserve(divided_degree() + word.size());
    for (int l = 1; l <= letters(); ++l)
        w.insert(w.end(), exps[l - 1], l);
    w.insert(w.end(), word.begin(), word.end());
    return w;
}

Weight Monomial::content() const
{
    std::vector<int> c = exps;
    for (int l : word)
        if (l >= 1 && l <= letters())
            ++c[l - 1];
    return Weight(std::move(c));
}

int Monomial::min_row_letter() const
{
    for (int l = 1; l <= letters(); ++l)
        if (exps[l - 1] > 0)
            return l;
    return 0;
}

bool BasisLess::operator()(const Monomial& x, const Monomial& y) const
{
    auto wx = x.expanded_word();
    auto wy = y.expanded_word();
    if (wx != wy)
        return wx < wy;
    // Same letters, different split between the two factors: only happens
    // across different (s,t), never inside one weight space.
    if (x.exps != y.exps)
        return x.exps > y.exps;
    return x.word < y.word;
}

int canonicalize_word(std::vector<int>& word)
{
    int sign = 1;
    // insertion sort, counting transpositions
    for (std::size_t i = 1; i < word.size(); ++i) {
        for (std::size_t j = i; j > 0 && word[j - 1] >= word[j]; --j) {
            if (word[j - 1] == word[j])
                return 0;
            std::swap(word[j - 1], word[j]);
            sign = -sign;
        }
    }
    for (std::size_t i = 1; i < word.size(); ++i)
        if (word[i - 1] == word[i])
            return 0;
    return sign;
}

bool is_semistandard(const HookTableau& t)
{
    for (std::size_t i = 1; i < t.word.size(); ++i)
        if (t.word[i - 1] >= t.word[i])
            return false;
    if (t.word.empty())
        return true;
    const int m = t.min_row_letter();
    return m != 0 && m < t.word.front();
}

namespace {

std::string letter(int l)
{
    return l < 10 ? std::to_string(l) : "{" + std::to_string(l) + "}";
}

std::string render_row(const Monomial& m)
{
    std::string s;
    for (int l = 1; l <= m.letters(); ++l) {
        const int e = m.exps[l - 1];
        if (e == 0)
            continue;
        s += letter(l);
        if (e > 1)
            s += "^(" + std::to_string(e) + ")";
    }
    return s;
}

std::string render_word(const Monomial& m)
{
    std::string s;
    for (int l : m.word)
        s += letter(l);
    return s;
}

}  // namespace

std::string render_tableau(const Monomial& m)
{
    return render_row(m) + "|" + render_word(m);
}

std::string render_tensor(const Monomial& m)
{
    return render_row(m) + " (x) " + render_word(m);
}

void Combination::add(const Monomial& m, const Integer& c)
{
    if (c == 0)
        return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

void Combination::add(const Combination& other, const Integer& scale)
{
    if (scale == 0)
        return;
    for (const auto& [m, c] : other.terms_)
        add(m, c * scale);
}

Combination Combination::scaled(const Integer& c) const
{
    Combination out;
    out.add(*this, c);
    return out;
}

Integer Combination::coefficient(const Monomial& m) const
{
    auto it = terms_.find(m);
    return it == terms_.end() ? Integer(0) : it->second;
}

WeightBasis::WeightBasis(std::vector<Monomial> elements) : elements_(std::move(elements))
{
    std::sort(elements_.begin(), elements_.end(), BasisLess{});
    for (std::size_t i = 0; i < elements_.size(); ++i)
        index_.emplace(elements_[i], i);
}

std::optional<std::size_t> WeightBasis::index_of(const Monomial& m) const
{
    auto it = index_.find(m);
    if (it == index_.end())
        return std::nullopt;
    return it->second;
}

WeightBasis tensor_weight_basis(int s, int t, const Weight& weight, int letters)
{
    if (s < 0 || t < 0)
        throw std::invalid_argument("tensor_weight_basis needs s, t >= 0");
    if (weight.degree() != s + t)
        throw std::invalid_argument("weight " + weight.to_string() + " does not have degree " +
                                    std::to_string(s + t));
    if (static_cast<int>(weight.length()) > letters)
        throw std::invalid_argument("weight " + weight.to_string() + " has more than " +
                                    std::to_string(letters) + " parts");
    for (int p : weight.parts)
        if (p < 0)
            throw std::invalid_argument("weight parts must be non-negative");

    const Weight w = weight.padded(letters);
    std::vector<int> support;
    for (int l = 1; l <= letters; ++l)
        if (w.parts[l - 1] > 0)
            support.push_back(l);

    std::vector<Monomial> out;
    if (t > static_cast<int>(support.size()))
        return WeightBasis{};

    // choose the exterior letters as a t-subset of the support
    std::vector<bool> pick(support.size(), false);
    std::fill(pick.begin(), pick.begin() + t, true);
    do {
        Monomial m;
        m.exps = w.parts;
        for (std::size_t j = 0; j < support.size(); ++j) {
            if (pick[j]) {
                m.word.push_back(support[j]);
                --m.exps[support[j] - 1];
            }
        }
        out.push_back(std::move(m));
    } while (std::prev_permutation(pick.begin(), pick.end()));
    return WeightBasis(std::move(out));
}

WeightBasis tensor_weight_basis(int s, int t, const Weight& weight)
{
    return tensor_weight_basis(s, t, weight, static_cast<int>(weight.length()));
}

WeightBasis hook_semistandard_basis(const HookShape& shape, const Weight& weight, int letters)
{
    if (weight.degree() != shape.degree())
        throw std::invalid_argument("weight " + weight.to_string() + " does not match shape " +
                                    shape.to_string());
    const WeightBasis all = tensor_weight_basis(shape.arm, shape.leg, weight, letters);
    std::vector<Monomial> out;
    for (const auto& m : all)
        if (is_semistandard(m))
            out.push_back(m);
    return WeightBasis(std::move(out));
}

WeightBasis hook_semistandard_basis(const HookShape& shape, const Weight& weight)
{
    return hook_semistandard_basis(shape, weight, static_cast<int>(weight.length()));
}

Combination straighten(const HookShape& shape, const std::vector<int>& row_exps,
                       const std::vector<int>& column)
{
    Monomial m{row_exps, column};
    if (m.divided_degree() != shape.arm || m.exterior_degree() != shape.leg)
        throw std::invalid_argument("tableau " + render_tableau(m) + " does not fit shape " +
                                    shape.to_string());
    for (int l : column)
        if (l < 1 || l > m.letters())
            throw std::invalid_argument("column letter out of range in " + render_tableau(m));

    const int sign = canonicalize_word(m.word);
    if (sign == 0)
        return {};
    if (is_semistandard(m))
        return Combination(m, sign);

    // first column letter j1 <= smallest row letter i1: rewrite modulo im θ.
    // Every term produced has all column letters above its smallest row
    // letter, so the recursion below returns after one more level.
    const int i1 = m.min_row_letter();
    const int j1 = m.word.front();
    Combination out;
    for (int l = 1; l <= m.letters(); ++l) {
        if (m.exps[l - 1] == 0 || (j1 == i1 && l == i1))
            continue;
        std::vector<int> exps = m.exps;
        --exps[l - 1];
        ++exps[j1 - 1];
        std::vector<int> col = m.word;
        col.front() = l;
        out.add(straighten(shape, exps, col), -sign);
    }
    return out;
}

Combination straighten(const HookShape& shape, const Monomial& m)
{
    return straighten(shape, m.exps, m.word);
}

Combination theta(int s, int t, const Monomial& m)
{
    if (t < 1)
        throw std::invalid_argument("theta needs t >= 1");
    if (m.divided_degree() != s + 1 || m.exterior_degree() != t - 1)
        throw std::invalid_argument("theta: " + render_tensor(m) + " is not in D_" +
                                    std::to_string(s + 1) + " (x) Λ^" + std::to_string(t - 1));
    Combination out;
    for (int l = 1; l <= m.letters(); ++l) {
        if (m.exps[l - 1] == 0)
            continue;
        Monomial n = m;
        --n.exps[l - 1];
        n.word.insert(n.word.begin(), l);
        const int sign = canonicalize_word(n.word);
        if (sign != 0)
            out.add(n, sign);
    }
    return out;
}

Combination theta(int s, int t, const Combination& x)
{
    Combination out;
    for (const auto& [m, c] : x)
        out.add(theta(s, t, m), c);
    return out;
}

Combination pi0_project(const HookShape& shape, const Combination& x)
{
    Combination out;
    for (const auto& [m, c] : x)
        out.add(straighten(shape, m), c);
    return out;
}

Combination i_embed(const HookShape& shape, const HookTableau& t)
{
    if (shape.leg < 1)
        throw std::invalid_argument("i_embed needs a shape with leg >= 1");
    const HookShape source = shape.shift(1);
    if (t.divided_degree() != source.arm || t.exterior_degree() != source.leg ||
        !is_semistandard(t))
        throw std::invalid_argument("i_embed: " + render_tableau(t) +
                                    " is not a semi-standard tableau of shape " +
                                    source.to_string());
    return theta(shape.arm, shape.leg, t);
}

Combination merge_letters(const Monomial& m, int t)
{
    if (t < 1 || t >= m.letters())
        throw std::invalid_argument("merge_letters: t=" + std::to_string(t) + " out of range");
    Monomial n;
    n.exps.reserve(m.exps.size());
    for (int l = 1; l <= m.letters(); ++l) {
        if (l == t + 1)
            continue;
        n.exps.push_back(l == t ? m.exps[t - 1] + m.exps[t] : m.exps[l - 1]);
    }
    n.exps.push_back(0);
    n.word.reserve(m.word.size());
    for (int l : m.word)
        n.word.push_back(l > t ? l - 1 : l);
    // the substitution is monotone, so the word stays sorted unless it repeats
    const int sign = canonicalize_word(n.word);
    if (sign == 0)
        return {};
    return Combination(n, binom(m.exps[t - 1] + m.exps[t], m.exps[t - 1]) * sign);
}

}  // namespace hookext
