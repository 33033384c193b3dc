#pragma once

// Weight-space bases of D_s (x) Λ^t and of hook Weyl modules, the
// straightening law, and the maps of the short exact sequence
//   0 -> Δ(a+1,1^(b-1)) --i--> D_a (x) Λ^b --π0--> Δ(a,1^b) -> 0.

#include "hookext/combinatorics.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace hookext {

/// x_1^(e_1) ... x_n^(e_n) (x) w_1 ^ ... ^ w_t.
///
/// `exps[l-1]` is the divided-power exponent of letter l; the length of
/// `exps` is the ambient number of letters n.  `word` holds exterior letters
/// in 1..n, strictly increasing once canonical.
struct Monomial {
    std::vector<int> exps;
    std::vector<int> word;

    int letters() const { return static_cast<int>(exps.size()); }
    int divided_degree() const;
    int exterior_degree() const { return static_cast<int>(word.size()); }

    /// Divided-power part written as a weakly increasing letter word,
    /// followed by the exterior word.  Basis orders compare this.
    std::vector<int> expanded_word() const;

    /// Multiplicity of each letter, divided and exterior parts together.
    Weight content() const;

    /// Smallest letter with positive exponent, 0 if the divided part is empty.
    int min_row_letter() const;

    friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// A monomial read in a hook Weyl module: row = divided part, column = word.
using HookTableau = Monomial;
using TensorMonomial = Monomial;

struct BasisLess {
    bool operator()(const Monomial& x, const Monomial& y) const;
};

/// Sort an exterior word in place.  Returns the sign of the sorting
/// permutation, or 0 when a letter repeats.
int canonicalize_word(std::vector<int>& word);

/// First row letter strictly smaller than the first column letter.
bool is_semistandard(const HookTableau& t);

/// Bar notation: `1^(2)3|24` for tableaux, `1^(2)3 (x) 24` for
/// tensor monomials.
std::string render_tableau(const Monomial& m);
std::string render_tensor(const Monomial& m);

/// Finitely supported integer combination of monomials, iterated in basis
/// order, never storing zero coefficients.
class Combination {
public:
    using Terms = std::map<Monomial, Integer, BasisLess>;

    Combination() = default;
    Combination(const Monomial& m, const Integer& c) { add(m, c); }

    void add(const Monomial& m, const Integer& c);
    void add(const Combination& other, const Integer& scale = 1);
    Combination scaled(const Integer& c) const;

    Integer coefficient(const Monomial& m) const;
    bool empty() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    Terms::const_iterator begin() const { return terms_.begin(); }
    Terms::const_iterator end() const { return terms_.end(); }

    friend bool operator==(const Combination&, const Combination&) = default;

private:
    Terms terms_;
};

/// Ordered basis of one weight space, ascending in BasisLess.
class WeightBasis {
public:
    WeightBasis() = default;
    explicit WeightBasis(std::vector<Monomial> elements);

    std::size_t size() const { return elements_.size(); }
    bool empty() const { return elements_.empty(); }
    const Monomial& operator[](std::size_t i) const { return elements_[i]; }
    std::optional<std::size_t> index_of(const Monomial& m) const;

    std::vector<Monomial>::const_iterator begin() const { return elements_.begin(); }
    std::vector<Monomial>::const_iterator end() const { return elements_.end(); }

private:
    std::vector<Monomial> elements_;
    std::map<Monomial, std::size_t, BasisLess> index_;
};

/// Monomials of D_s (x) Λ^t on `letters` letters with the given content.
WeightBasis tensor_weight_basis(int s, int t, const Weight& weight, int letters);
WeightBasis tensor_weight_basis(int s, int t, const Weight& weight);

/// Semi-standard tableaux of the hook shape with the given content.
WeightBasis hook_semistandard_basis(const HookShape& shape, const Weight& weight, int letters);
WeightBasis hook_semistandard_basis(const HookShape& shape, const Weight& weight);

/// Class of row (x) column in Δ(shape), expanded in semi-standard tableaux.
/// `column` may be unsorted and may repeat letters.
Combination straighten(const HookShape& shape, const std::vector<int>& row_exps,
                       const std::vector<int>& column);
Combination straighten(const HookShape& shape, const Monomial& m);

/// Koszul-dual map D_{s+1} (x) Λ^{t-1} -> D_s (x) Λ^t: pull one letter out of
/// the divided part and wedge it on the left.
Combination theta(int s, int t, const Combination& x);
Combination theta(int s, int t, const Monomial& m);

/// π0 : D_a (x) Λ^b -> Δ(a,1^b).
Combination pi0_project(const HookShape& shape, const Combination& x);

/// i : Δ(a+1,1^(b-1)) -> D_a (x) Λ^b, given by θ on a semi-standard tableau.
Combination i_embed(const HookShape& shape, const HookTableau& t);

/// The letter substitution j -> j-1 for j > t acting on D (x) Λ: letters t
/// and t+1 merge with coefficient C(e_t + e_{t+1}, e_t), the exterior word
/// dies on a repeat.  Letter count is kept (a zero exponent is appended).
Combination merge_letters(const Monomial& m, int t);

}  // namespace hookext
