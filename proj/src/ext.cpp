#include "hookext/ext.hpp"

#include <stdexcept>

namespace hookext {

Target tensor_target(int a, int b, int k)
{
    if (k < 0 || k > b)
        throw std::invalid_argument("tensor target needs 0 <= k <= b");
    return Target::tensor(a + k, b - k);
}

Target hook_target(int a, int b, int k)
{
    return Target::hook(HookShape(a, b).shift(k));
}

namespace {

void require_degree(int a, int b, const Target& m)
{
    if (a < 1 || b < 0)
        throw std::invalid_argument("need a >= 1 and b >= 0");
    if (m.degree() != a + b)
        throw std::invalid_argument("target " + m.to_string() + " does not have degree " +
                                    std::to_string(a + b));
}

// Matrix of d_i : C^{i-1} -> C^i, with the right shape even when one side is 0.
IntMatrix cochain_differential(int a, int b, const Target& m, int i)
{
    const std::size_t rows = i > b ? 0 : HomSpaceBasis(a, b, i, m).dimension();
    if (i < 1 || i > b) {
        const std::size_t cols = (i - 1 >= 0 && i - 1 <= b) ? HomSpaceBasis(a, b, i - 1, m).dimension() : 0;
        return IntMatrix(rows, cols);
    }
    return differential_matrix(a, b, i, m).dense();
}

std::size_t cochain_dimension(int a, int b, const Target& m, int i)
{
    if (i < 0 || i > b)
        return 0;
    return HomSpaceBasis(a, b, i, m).dimension();
}

}  // namespace

ExtResult ext_group(int a, int b, const Target& m, int i)
{
    require_degree(a, b, m);
    if (i < 1)
        throw std::invalid_argument("ext_group needs i >= 1 (use cohomology_free_rank for Hom)");
    ExtResult r{a, b, i, m, {}, {}};
    if (i > b)
        return r;
    r.e_group = cokernel_invariants(differential_matrix(a, b, i, m).dense());
    r.ext_group = r.e_group.torsion_part();
    return r;
}

AbelianGroup ext_by_homology(int a, int b, const Target& m, int i)
{
    require_degree(a, b, m);
    if (i < 1)
        throw std::invalid_argument("ext_by_homology needs i >= 1");
    if (i > b)
        return {};
    const IntMatrix incoming = cochain_differential(a, b, m, i);
    const IntMatrix outgoing = cochain_differential(a, b, m, i + 1);
    const std::size_t dim = incoming.rows();

    // Columns rank.. of V span ker(outgoing); coordinates of im(incoming) in
    // the basis given by V are V^{-1}·incoming, read off by solving.
    const SmithForm snf = smith_normal_form(outgoing);
    const std::size_t kernel_rank = dim - snf.rank;
    const Cokernel v_solver(snf.V);
    IntMatrix image(kernel_rank, incoming.cols());
    for (std::size_t c = 0; c < incoming.cols(); ++c) {
        auto z = v_solver.preimage(incoming.column(c));
        if (!z)
            throw std::logic_error("unimodular transform is not invertible");
        for (std::size_t j = 0; j < snf.rank; ++j)
            if ((*z)[j] != 0)
                throw std::logic_error("image of d_i is not inside ker d_{i+1}");
        for (std::size_t j = 0; j < kernel_rank; ++j)
            image(j, c) = (*z)[snf.rank + j];
    }
    return cokernel_invariants(image).torsion_part();
}

std::size_t cohomology_free_rank(int a, int b, const Target& m, int i)
{
    require_degree(a, b, m);
    if (i < 0 || i > b)
        return 0;
    const std::size_t dim = cochain_dimension(a, b, m, i);
    const std::size_t in = i >= 1 ? rank(cochain_differential(a, b, m, i)) : 0;
    const std::size_t out = rank(cochain_differential(a, b, m, i + 1));
    return dim - in - out;
}

std::size_t ext_modular(int a, int b, const Target& m, int i, long p)
{
    require_degree(a, b, m);
    if (!is_prime(p))
        throw std::invalid_argument("ext_modular: " + std::to_string(p) + " is not prime");
    if (i < 0 || i > b)
        return 0;
    const std::size_t dim = cochain_dimension(a, b, m, i);
    const std::size_t in = i >= 1 ? rank_mod_p(cochain_differential(a, b, m, i), p) : 0;
    const std::size_t out = rank_mod_p(cochain_differential(a, b, m, i + 1), p);
    return dim - in - out;
}

std::size_t universal_coefficient_dimension(int a, int b, const Target& m, int i, long p)
{
    require_degree(a, b, m);
    if (!is_prime(p))
        throw std::invalid_argument("universal_coefficient_dimension: p is not prime");
    if (i < 0 || i > b)
        return 0;
    auto p_count = [p](const AbelianGroup& g) {
        std::size_t n = 0;
        for (const auto& t : g.torsion)
            if (mpz_divisible_ui_p(t.get_mpz_t(), static_cast<unsigned long>(p)))
                ++n;
        return n;
    };
    std::size_t dim = cohomology_free_rank(a, b, m, i);
    if (i >= 1)
        dim += p_count(ext_group(a, b, m, i).ext_group);
    dim += p_count(ext_group(a, b, m, i + 1).ext_group);
    return dim;
}

namespace {

// k with m = Δ(a+k,1^{b-k}) or D_{a+k} (x) Λ^{b-k}, if m has that form.
std::optional<int> shift_of(int a, int b, const Target& m)
{
    const int k = m.divided - a;
    if (k < 0 || k > b || m.exterior != b - k)
        return std::nullopt;
    return k;
}

}  // namespace

std::optional<AbelianGroup> expected_ext(int a, int b, const Target& m, int i)
{
    require_degree(a, b, m);
    if (i < 1)
        return std::nullopt;
    if (i > b)
        return AbelianGroup{};
    auto k = shift_of(a, b, m);
    if (!k || *k == 0)
        return std::nullopt;
    // D_{a+b} (x) Λ^0 is the hook module Δ(a+b)
    const bool hook = m.is_hook() || *k == b;
    if (hook) {
        if (i > *k)
            return AbelianGroup{};
        if (i == *k)
            return AbelianGroup::cyclic(leading_binomial_gcd(a + b, *k));
        if (i == 1)
            return parity(a + b + *k) == 1 ? AbelianGroup::cyclic(2) : AbelianGroup{};
        return std::nullopt;
    }
    if (i > *k)
        return AbelianGroup{};
    if (i == *k)
        return AbelianGroup::cyclic(interior_binomial_gcd(*k));
    if (i == 1)
        return AbelianGroup::cyclic(2);
    return std::nullopt;
}

std::optional<std::size_t> expected_modular_dimension(int a, int b, int k, int i, long p)
{
    if (!is_prime(p))
        throw std::invalid_argument("expected_modular_dimension: p is not prime");
    if (a < 1 || k < 1 || k > b)
        return std::nullopt;
    if (i == 0) {
        if (k < 2)
            return std::nullopt;
        return (p == 2 && parity(a + b + k) == 1) ? 1 : 0;
    }
    if (i == k) {
        for (int j = 1; j <= k; ++j)
            if (!mpz_divisible_ui_p(binom(a + b, j).get_mpz_t(), static_cast<unsigned long>(p)))
                return 0;
        return 1;
    }
    return std::nullopt;
}

InducedMap induced_map(ModuleMap f, int a, int b, int k, int i)
{
    if (i < 0 || i > b)
        throw std::invalid_argument("induced_map needs 0 <= i <= b");
    InducedMap out;
    switch (f) {
    case ModuleMap::projection:
        out.source = tensor_target(a, b, k);
        out.target = hook_target(a, b, k);
        break;
    case ModuleMap::koszul:
        if (k < 1)
            throw std::invalid_argument("θ* needs k >= 1");
        out.source = tensor_target(a, b, k);
        out.target = tensor_target(a, b, k - 1);
        break;
    case ModuleMap::embedding:
        if (k + 1 > b)
            throw std::invalid_argument("i* needs k < b");
        out.source = hook_target(a, b, k + 1);
        out.target = tensor_target(a, b, k);
        break;
    }
    const HomSpaceBasis src(a, b, i, out.source);
    const HomSpaceBasis dst(a, b, i, out.target);
    out.matrix = IntMatrix(dst.dimension(), src.dimension());

    const HookShape shape = HookShape(a, b).shift(k);
    for (const auto& blk : src.blocks()) {
        for (std::size_t j = 0; j < blk.basis.size(); ++j) {
            const Monomial& x = blk.basis[j];
            Combination y;
            switch (f) {
            case ModuleMap::projection:
                y = straighten(shape, x);
                break;
            case ModuleMap::koszul:
                y = theta(out.target.divided, out.target.exterior, x);
                break;
            case ModuleMap::embedding:
                y = i_embed(shape, x);
                break;
            }
            IntVector col(dst.dimension());
            dst.accumulate(col, blk.weight, y);
            for (std::size_t r = 0; r < col.size(); ++r)
                out.matrix(r, blk.offset + j) = col[r];
        }
    }
    return out;
}

IntMatrix induced_map_matrix(ModuleMap f, int a, int b, int k, int i)
{
    return induced_map(f, a, b, k, i).matrix;
}

CheckReport check_vanishing(int a, int b, int k, int i)
{
    if (i <= k)
        throw std::invalid_argument("check_vanishing needs i > k");
    const auto r = ext_group(a, b, hook_target(a, b, k), i);
    if (!r.ext_group.is_trivial())
        return CheckReport::fail("Ext^" + std::to_string(i) + " is " + r.ext_group.to_string());
    return CheckReport::ok();
}

}  // namespace hookext
