#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace hookext {

/// Exact integers of unbounded magnitude.  Everything in the library that
/// can grow (matrix entries, binomials, invariant factors) uses this type.
using Integer = mpz_class;

/// The hook partition (arm, 1^leg) of degree arm + leg.
struct HookShape {
    int arm = 1;
    int leg = 0;

    HookShape() = default;
    HookShape(int arm, int leg);

    int degree() const { return arm + leg; }

    /// (arm + k, 1^(leg - k)); requires 0 <= k <= leg.
    HookShape shift(int k) const;

    std::string to_string() const;

    friend bool operator==(const HookShape&, const HookShape&) = default;
};

/// A composition (a_1, ..., a_m).  Compared lexicographically.
struct Weight {
    std::vector<int> parts;

    Weight() = default;
    Weight(std::initializer_list<int> p) : parts(p) {}
    explicit Weight(std::vector<int> p) : parts(std::move(p)) {}

    int degree() const;
    std::size_t length() const { return parts.size(); }
    int operator[](std::size_t i) const { return parts[i]; }

    /// Pad with zeros to `letters` entries (no-op when already that long).
    Weight padded(std::size_t letters) const;

    std::string to_string() const;

    friend auto operator<=>(const Weight&, const Weight&) = default;
    friend bool operator==(const Weight&, const Weight&) = default;
};

/// Binomial coefficient, 0 when k < 0 or k > n.
Integer binom(long n, long k);

/// gcd(C(k+1,1), ..., C(k+1,k)); equals p when k+1 is a power of the prime p,
/// and 1 otherwise.  Requires k >= 1.
Integer interior_binomial_gcd(int k);

/// gcd(C(r,1), ..., C(r,k)) for 1 <= k <= r-1.
Integer leading_binomial_gcd(int r, int k);

/// lcm of the i <= k that divide r.  r / divisor_lcm(r, k) equals
/// leading_binomial_gcd(r, k).
Integer divisor_lcm(int r, int k);

/// Non-negative remainder of m modulo 2.
int parity(long m);

bool is_prime(long p);

/// The prime p when m = p^e with e >= 1, nothing otherwise.
std::optional<long> prime_power_base(long m);

/// Compositions (a_1, ..., a_{b+1-i}) of a+b into positive parts with
/// a <= a_1 <= a+i, sorted descending lexicographically.  These index the
/// summands of the i-th term of the hook resolution.
std::vector<Weight> resolution_compositions(int a, int b, int i);

}  // namespace hookext
