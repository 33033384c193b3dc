#pragma once

// Independent reference computations used by the tests.  None of these
// call into the library's algorithms; they only share its value types.

#include "hookext/weyl.hpp"
#include "hookext/zlinalg.hpp"

#include <map>
#include <optional>
#include <vector>

namespace oracle {

using hookext::Integer;
using hookext::IntMatrix;
using hookext::Monomial;

/// Binomial coefficient from Pascal's rule (memoized rows).
Integer pascal(int n, int k);

/// gcd(C(r,1), ..., C(r,k)).
Integer binomial_gcd(int r, int k);

/// lcm of those i <= k that divide r.
Integer divisor_lcm(int r, int k);

/// All compositions of a+b of length b+1-i with a <= first part <= a+i,
/// by exhaustive search, sorted descending.
std::vector<std::vector<int>> compositions(int a, int b, int i);

/// Every (divided exponents, strictly increasing word) pair of degrees
/// (s, t) on `letters` letters with the given content.
std::vector<Monomial> tensor_monomials(int s, int t, const std::vector<int>& weight, int letters);

/// Smallest row letter strictly below every column letter, column strictly
/// increasing.
bool semistandard(const Monomial& m);

/// Expanded word: row letters repeated, then the column.
std::vector<int> word_of(const Monomial& m);

/// θ on one monomial: move one row letter to the front of the column.
std::map<std::vector<int>, Integer> theta_expand(const Monomial& m);

/// Determinant by fraction-free elimination.
Integer bareiss_determinant(std::vector<std::vector<Integer>> m);

/// Invariant factors (non-zero, in divisibility order) as quotients of
/// consecutive gcds of k x k minors.
std::vector<Integer> minor_gcd_invariants(const IntMatrix& a);

/// Coordinates of the class of x in Δ(s,1^t) over the semistandard basis,
/// found by solving x = Σ c_T T + θ(y) over Q and checking integrality.
/// Returned keyed by the expanded word of T; nullopt if not integral.
std::optional<std::map<std::vector<int>, Integer>> straighten_by_reduction(int s, int t, const Monomial& x);

}  // namespace oracle
