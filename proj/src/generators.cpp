#include "hookext/ext.hpp"

#include <algorithm>
#include <stdexcept>

namespace hookext {

namespace {

// letters -> exponents, e.g. {{1, a-1}, {i, k+1}}
Monomial monomial(int letters, std::initializer_list<std::pair<int, int>> exps, std::vector<int> word)
{
    Monomial m;
    m.exps.assign(letters, 0);
    for (auto [l, e] : exps)
        m.exps[l - 1] += e;
    m.word = std::move(word);
    return m;
}

// 1, 2, ..., last with the listed letters removed
std::vector<int> run(int first, int last, std::initializer_list<int> skip = {})
{
    std::vector<int> w;
    for (int l = first; l <= last; ++l)
        if (std::find(skip.begin(), skip.end(), l) == skip.end())
            w.push_back(l);
    return w;
}

// (head, 1, ..., 1) with `at_value` at position `pos` (1-based), total length len.
Weight weight_with(int head, int len, int pos = 0, int at_value = 1)
{
    std::vector<int> p(len, 1);
    p[0] = head;
    if (pos >= 2)
        p[pos - 1] = at_value;
    return Weight(std::move(p));
}

void add_term(const HomSpaceBasis& basis, IntVector& v, const Weight& w, const Monomial& m,
              const Integer& c)
{
    basis.accumulate(v, w, project_to_target(basis.target(), m).scaled(c));
}

IntVector scaled(const IntVector& v, const Integer& c)
{
    IntVector out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        out[i] = v[i] * c;
    return out;
}

IntVector minus(const IntVector& x, const IntVector& y)
{
    IntVector out(x.size());
    for (std::size_t i = 0; i < x.size(); ++i)
        out[i] = x[i] - y[i];
    return out;
}

std::string cell(int a, int b, int k)
{
    return "(a,b,k)=(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(k) + ")";
}

}  // namespace

Cochain generator_g(int a, int b, int k)
{
    if (a < 1 || k < 1 || k >= b)
        throw std::invalid_argument("generator_g needs a >= 1 and 1 <= k < b");
    const HomSpaceBasis basis(a, b, 1, tensor_target(a, b, k));
    Cochain g{1, IntVector(basis.dimension())};
    for (const auto& blk : basis.blocks()) {
        // block 1 has weight (a+1,1,...,1); block t >= 2 has its 2 at position t
        int t = 1;
        if (blk.weight[0] == a)
            for (std::size_t j = 1; j < blk.weight.length(); ++j)
                if (blk.weight[j] == 2)
                    t = static_cast<int>(j) + 1;
        for (std::size_t j = 0; j < blk.basis.size(); ++j) {
            const bool one_in_word = !blk.basis[j].word.empty() && blk.basis[j].word.front() == 1;
            Integer c;
            if (t == 1)
                c = one_in_word ? Integer(a) : binom(a + 1, 2);
            else
                c = (t % 2 == 0 ? -1 : 1) * (one_in_word ? 1 : a);
            g.coords[blk.offset + j] = c;
        }
    }
    return g;
}

Cochain generator_gamma(int a, int b, int k)
{
    if (a < 1 || k < 1 || k > b)
        throw std::invalid_argument("generator_gamma needs a >= 1 and 1 <= k <= b");
    const int n = b + 1;
    const int q = b - k + 1;
    const HomSpaceBasis basis(a, b, k, tensor_target(a, b, k));
    Cochain g{k, IntVector(basis.dimension())};
    add_term(basis, g.coords, weight_with(a + k, q), monomial(n, {{1, a + k}}, run(2, q)), binom(a + k, k + 1));
    for (int i = 2; i <= q; ++i)
        add_term(basis, g.coords, weight_with(a, q, i, k + 1), monomial(n, {{1, a - 1}, {i, k + 1}}, run(1, q, {i})),
                 i % 2 == 0 ? -1 : 1);
    return g;
}

Cochain gamma_preimage(int a, int b, int k)
{
    if (a < 1 || k < 1 || k > b)
        throw std::invalid_argument("gamma_preimage needs a >= 1 and 1 <= k <= b");
    const int n = b + 1;
    const int q = b - k + 1;
    const HomSpaceBasis basis(a, b, k - 1, tensor_target(a, b, k));
    Cochain x{k - 1, IntVector(basis.dimension())};
    const Integer lead = binom(a + k - 1, k);
    for (int j = 2; j <= q + 1; ++j)
        add_term(basis, x.coords, weight_with(a + k - 1, q + 1),
                 monomial(n, {{1, a + k - 1}, {j, 1}}, run(2, q + 1, {j})), lead * (j % 2 == 0 ? 1 : -1));
    for (int i = 2; i <= q; ++i)
        for (int j = i + 1; j <= q + 1; ++j)
            add_term(basis, x.coords, weight_with(a, q + 1, i, k),
                     monomial(n, {{1, a - 1}, {i, k}, {j, 1}}, run(1, q + 1, {i, j})),
                     (j - i - 1) % 2 == 0 ? 1 : -1);
    return x;
}

Cochain delta_one(int a, int b, int k)
{
    if (a < 1 || k < 1 || k > b)
        throw std::invalid_argument("delta_one needs a >= 1 and 1 <= k <= b");
    const int q = b - k + 1;
    const HomSpaceBasis basis(a, b, k, hook_target(a, b, k));
    Cochain d{k, IntVector(basis.dimension())};
    add_term(basis, d.coords, weight_with(a + k, q), monomial(b + 1, {{1, a + k}}, run(2, q)), 1);
    return d;
}

Cochain delta(int a, int b, int k, int i, int j)
{
    const int q = b - k + 1;
    if (a < 1 || k < 1 || k > b || i < 2 || i > q || j < 0 || j > k)
        throw std::invalid_argument("delta needs 1 <= k <= b, 2 <= i <= b-k+1, 0 <= j <= k");
    if (j == 0)
        return delta_one(a, b, k);
    const HomSpaceBasis basis(a, b, k, hook_target(a, b, k));
    Cochain d{k, IntVector(basis.dimension())};
    add_term(basis, d.coords, weight_with(a + k - j, q, i, j + 1),
             monomial(b + 1, {{1, a + k - j}, {i, j}}, run(2, q)), 1);
    return d;
}

CheckReport check_generator_g(int a, int b, int k)
{
    const Cokernel coker(differential_matrix(a, b, 1, tensor_target(a, b, k)).dense());
    const Cochain g = generator_g(a, b, k);
    const auto ord = coker.order(g.coords);
    if (!ord || *ord != 2)
        return CheckReport::fail(cell(a, b, k) + ": g_k has order " + (ord ? ord->get_str() : "infinity"));
    return CheckReport::ok();
}

CheckReport check_gamma(int a, int b, int k)
{
    const Target m = tensor_target(a, b, k);
    const IntMatrix d = differential_matrix(a, b, k, m).dense();
    const Cochain gamma = generator_gamma(a, b, k);
    const Cochain pre = gamma_preimage(a, b, k);
    const IntVector image = d * pre.coords;
    if (image != scaled(gamma.coords, k + 1))
        return CheckReport::fail(cell(a, b, k) + ": d(A) != (k+1)·Gamma_k");
    // the order statement concerns Ext^k = Z_{r_k}, which needs k < b
    if (auto p = prime_power_base(k + 1); p && k < b) {
        const auto ord = Cokernel(d).order(gamma.coords);
        if (!ord || *ord != *p)
            return CheckReport::fail(cell(a, b, k) + ": Gamma_k has order " + (ord ? ord->get_str() : "infinity") +
                                     ", expected " + std::to_string(*p));
    }
    return CheckReport::ok();
}

CheckReport check_delta_relations(int a, int b, int k)
{
    const Cokernel coker(differential_matrix(a, b, k, hook_target(a, b, k)).dense());
    const int q = b - k + 1;
    const Cochain d1 = delta_one(a, b, k);
    for (int i = 2; i <= q - 1; ++i)
        for (int j = 0; j <= k; ++j) {
            const Cochain dij = delta(a, b, k, i, j);
            const Integer c = binom(a + k + i - 2, j);
            if (!coker.contains(minus(dij.coords, scaled(d1.coords, c))))
                return CheckReport::fail(cell(a, b, k) + ": relation fails at (i,j)=(" + std::to_string(i) + "," +
                                         std::to_string(j) + ")");
        }
    return CheckReport::ok();
}

CheckReport check_cyclicity(int a, int b, int k)
{
    const IntMatrix e = differential_matrix(a, b, k, hook_target(a, b, k)).dense();
    const Cochain d1 = delta_one(a, b, k);
    const Cokernel quotient(e.with_column(d1.coords));
    if (quotient.group().is_trivial())
        return CheckReport::ok();
    for (std::size_t j = 0; j < e.rows(); ++j) {
        IntVector unit(e.rows());
        unit[j] = 1;
        if (!quotient.contains(unit))
            return CheckReport::fail(cell(a, b, k) + ": basis vector " + std::to_string(j) +
                                     " is not a multiple of delta_1 modulo the image");
    }
    return CheckReport::fail(cell(a, b, k) + ": quotient by delta_1 is " + quotient.group().to_string());
}

CheckReport check_projection_factor(int a, int b)
{
    if (b < 2)
        throw std::invalid_argument("projection factor needs b >= 2");
    const IntMatrix proj = induced_map_matrix(ModuleMap::projection, a, b, 1, 1);
    const IntVector image = proj * generator_g(a, b, 1).coords;
    const Integer factor = Integer((a + parity(b) - 1) * (a + b)) / 2;
    const Cokernel coker(differential_matrix(a, b, 1, hook_target(a, b, 1)).dense());
    if (!coker.contains(minus(image, scaled(delta_one(a, b, 1).coords, factor))))
        return CheckReport::fail("(a,b)=(" + std::to_string(a) + "," + std::to_string(b) +
                                 "): pi0*(g_1) is not " + factor.get_str() + "·S_1 modulo the image");
    return CheckReport::ok("factor " + factor.get_str());
}

KoszulFactor koszul_factor(int a, int b, int k)
{
    if (k <= 1 || k >= b)
        throw std::invalid_argument("koszul_factor needs 1 < k < b");
    KoszulFactor r;
    r.next_parity_factor = a + parity(b - k + 1) - 1;
    r.same_parity_factor = a + parity(b - k) - 1;
    const IntVector image = induced_map_matrix(ModuleMap::koszul, a, b, k, 1) * generator_g(a, b, k).coords;
    const IntVector lower = generator_g(a, b, k - 1).coords;
    const Cokernel coker(differential_matrix(a, b, 1, tensor_target(a, b, k - 1)).dense());
    r.next_parity_holds = coker.contains(minus(image, scaled(lower, r.next_parity_factor)));
    r.same_parity_holds = coker.contains(minus(image, scaled(lower, r.same_parity_factor)));
    return r;
}

AbelianGroup ext1_via_induced_maps(int a, int b, int k)
{
    if (k < 2 || k > b)
        throw std::invalid_argument("ext1_via_induced_maps needs 2 <= k <= b");
    // Ext^1(Δ(h), Δ(h(k))) is the kernel of Z_2 = Ext^1(h, D_{a+k-1} (x) Λ^{b-k+1})
    // -> Ext^1(h, next), generated by g_{k-1}; trivial kernel iff the image is non-zero.
    IntVector image;
    IntMatrix relations;
    if (k == 2) {
        image = induced_map_matrix(ModuleMap::projection, a, b, 1, 1) * generator_g(a, b, 1).coords;
        relations = differential_matrix(a, b, 1, hook_target(a, b, 1)).dense();
    } else {
        image = induced_map_matrix(ModuleMap::koszul, a, b, k - 1, 1) * generator_g(a, b, k - 1).coords;
        relations = differential_matrix(a, b, 1, tensor_target(a, b, k - 2)).dense();
    }
    return Cokernel(relations).contains(image) ? AbelianGroup::cyclic(2) : AbelianGroup{};
}

}  // namespace hookext
