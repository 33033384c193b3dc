#pragma once

// The projective resolution P_*(a,b) of Δ(a,1^b) and the integer matrices
// of Hom(P_*(a,b), M) for M a tensor product D_s (x) Λ^t or a hook Weyl
// module.  Hom(D(a_1,...,a_m), M) is identified with the weight space of M
// at (a_1,...,a_m), on n = b+1 letters.

#include "hookext/check.hpp"
#include "hookext/weyl.hpp"
#include "hookext/zlinalg.hpp"

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace hookext {

/// Target module of the Hom complex.
struct Target {
    enum class Kind { tensor, hook };

    Kind kind = Kind::tensor;
    int divided = 0;   // D_divided (x) Λ^exterior, or the hook (divided, 1^exterior)
    int exterior = 0;

    static Target tensor(int s, int t);
    static Target hook(const HookShape& shape);

    int degree() const { return divided + exterior; }
    HookShape shape() const { return HookShape(divided, exterior); }
    bool is_hook() const { return kind == Kind::hook; }

    /// "D_3⊗Λ^2" or "Δ(4,1^1)".
    std::string to_string() const;

    friend bool operator==(const Target&, const Target&) = default;
};

/// Weight-space basis of the target: all monomials, or semi-standard tableaux.
WeightBasis target_weight_basis(const Target& m, const Weight& w, int letters);

/// Class of a D (x) Λ monomial in the target (identity, or straightening).
Combination project_to_target(const Target& m, const Monomial& x);

/// The map Hom(D(..,a_t,a_{t+1},..), M) -> Hom(D(..,a_t+a_{t+1},..), M)
/// induced by the diagonal, on one basis element.  Zero when t is not
/// below the number of parts of `source`.
Combination phi(int t, const Weight& source, const Monomial& x, const Target& m);

/// Hom(P_i(a,b), M) as blocks of weight-space bases, block order descending
/// lexicographic in the weight.
class HomSpaceBasis {
public:
    struct Block {
        Weight weight;
        WeightBasis basis;
        std::size_t offset = 0;
    };

    HomSpaceBasis() = default;
    HomSpaceBasis(int a, int b, int i, const Target& m);

    int degree() const { return degree_; }
    int letters() const { return letters_; }
    const Target& target() const { return target_; }
    std::size_t dimension() const { return dimension_; }
    const std::vector<Block>& blocks() const { return blocks_; }

    std::size_t block_index(const Weight& w) const;
    std::optional<std::size_t> flat_index(const Weight& w, const Monomial& x) const;

    /// Block and element behind a flat index.
    std::pair<const Block*, const Monomial*> element(std::size_t flat) const;

    /// Coordinates of a combination living in the block of weight w.
    void accumulate(IntVector& v, const Weight& w, const Combination& x) const;

private:
    int degree_ = 0;
    int letters_ = 0;
    Target target_;
    std::size_t dimension_ = 0;
    std::vector<Block> blocks_;
    std::map<Weight, std::size_t> block_of_;
};

HomSpaceBasis hom_space(int a, int b, int i, const Target& m);

/// Sparse integer matrix of Hom(θ_i(a,b), M): Hom(P_{i-1}, M) -> Hom(P_i, M).
/// Column j is the image of the j-th domain basis element.
class DifferentialMatrix {
public:
    using Entries = std::map<std::pair<std::size_t, std::size_t>, Integer>;

    DifferentialMatrix() = default;
    DifferentialMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const Entries& entries() const { return entries_; }

    void add(std::size_t r, std::size_t c, const Integer& x);
    Integer at(std::size_t r, std::size_t c) const;

    IntMatrix dense() const;

    friend bool operator==(const DifferentialMatrix&, const DifferentialMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    Entries entries_;
};

/// A differential together with the bases it is written in.
struct Differential {
    int a = 0, b = 0, i = 0;
    Target target;
    HomSpaceBasis domain;    // Hom(P_{i-1}, M)
    HomSpaceBasis codomain;  // Hom(P_i, M)
    DifferentialMatrix matrix;
};

/// Requires 1 <= i <= b.
Differential differential(int a, int b, int i, const Target& m);
DifferentialMatrix differential_matrix(int a, int b, int i, const Target& m);

/// d_{i+1} · d_i = 0 for 1 <= i < b.
CheckReport check_complex(int a, int b, const Target& m);

/// Block shape of the first differential into D_{a+k} (x) Λ^{b-k}: the first
/// row block is (diag(a+1,..,1,..) | a·I in the lower rows), the other row
/// blocks split along the presence of the letter 1 in the exterior part,
/// their row sums are ±2, and the last row is (0 ... 0 ±2).  Needs 1 <= k < b.
CheckReport check_first_differential_structure(int a, int b, int k);

/// The top-left block of the i-th differential into Δ(a+k,1^(b-k)) equals
/// the (i-1)-th differential of (a+1, b-1) into the same module, and the
/// bottom-left block vanishes.  Needs i > 1 and b > 1.
CheckReport check_block_recursion(int a, int b, int i, int k);

}  // namespace hookext
