#pragma once

// Exact integer linear algebra: Smith normal form, cokernels of integer
// matrices, lattice membership and ranks over prime fields.

#include "hookext/combinatorics.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace hookext {

using IntVector = std::vector<Integer>;

/// Dense row-major integer matrix.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

    static IntMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    IntVector column(std::size_t c) const;
    IntMatrix transposed() const;

    /// New matrix with the columns of `extra` appended.
    IntMatrix with_columns(const IntMatrix& extra) const;
    IntMatrix with_column(const IntVector& v) const;

    bool is_zero() const;

    friend IntMatrix operator*(const IntMatrix& x, const IntMatrix& y);
    friend IntVector operator*(const IntMatrix& x, const IntVector& v);
    friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Integer> data_;
};

/// Finitely generated abelian group Z^free_rank (+) Z_{t_1} (+) ... with
/// t_1 | t_2 | ... and every t_j >= 2.
struct AbelianGroup {
    std::size_t free_rank = 0;
    std::vector<Integer> torsion;

    static AbelianGroup cyclic(const Integer& order);  // Z_order, 0 when order == 1
    static AbelianGroup trivial() { return {}; }

    bool is_trivial() const { return free_rank == 0 && torsion.empty(); }
    AbelianGroup torsion_part() const { return {0, torsion}; }
    Integer order() const;  // product of torsion; only meaningful when free_rank == 0

    /// "0", "Z", "Z_2 ⊕ Z_4", ...; `ascii` joins with " + " instead.
    std::string to_string(bool ascii = false) const;

    friend bool operator==(const AbelianGroup&, const AbelianGroup&) = default;
};

/// U·A·V = S, U and V unimodular, S diagonal with s_1 | s_2 | ... >= 0.
struct SmithForm {
    IntMatrix U;
    IntMatrix S;
    IntMatrix V;
    std::size_t rank = 0;

    IntVector diagonal() const;
};

SmithForm smith_normal_form(const IntMatrix& a);

/// Non-zero diagonal of the Smith form without tracking transforms.
IntVector smith_diagonal(const IntMatrix& a);

/// Z^rows / column span of A.
AbelianGroup cokernel_invariants(const IntMatrix& a);

/// Some y with A·y = v, if one exists.
std::optional<IntVector> lattice_membership(const IntMatrix& a, const IntVector& v);

/// Least m >= 1 with m·v in the column span of A; nothing when v has a
/// non-zero free component (infinite order).
std::optional<Integer> order_in_cokernel(const IntMatrix& a, const IntVector& v);

/// Rank over the field with p elements.
std::size_t rank_mod_p(const IntMatrix& a, long p);

/// Rank over the rationals.
std::size_t rank(const IntMatrix& a);

/// Z^rows / column span of A with a coordinate map, for answering many
/// membership and order queries against the same relations.
class Cokernel {
public:
    explicit Cokernel(const IntMatrix& relations);

    const AbelianGroup& group() const { return group_; }
    std::size_t ambient_dimension() const { return ambient_; }

    /// Coordinates of the class of v in the Smith basis: entry j < rank is
    /// reduced modulo s_j, entries past the rank are free coordinates.
    IntVector coordinates(const IntVector& v) const;

    bool contains(const IntVector& v) const;
    std::optional<Integer> order(const IntVector& v) const;

    /// Solves A·y = v when possible.
    std::optional<IntVector> preimage(const IntVector& v) const;

private:
    std::size_t ambient_ = 0;
    SmithForm smith_;
    IntVector diagonal_;
    AbelianGroup group_;
};

}  // namespace hookext
