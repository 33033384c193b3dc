#include "hookext/combinatorics.hpp"

#include "doctest.h"
#include "oracles.hpp"

#include <stdexcept>

using namespace hookext;

TEST_CASE("binomials")
{
    CHECK(binom(30, 15) == Integer("155117520"));
    CHECK(binom(7, 0) == 1);
    CHECK(binom(0, 0) == 1);
    CHECK(binom(5, 6) == 0);
    CHECK(binom(5, -1) == 0);
    for (int n = 0; n <= 60; ++n)
        for (int k = 0; k <= n; ++k)
            REQUIRE(binom(n, k) == oracle::pascal(n, k));
}

TEST_CASE("interior binomial gcd")
{
    CHECK(interior_binomial_gcd(2) == 3);
    CHECK(interior_binomial_gcd(5) == 1);
    CHECK(interior_binomial_gcd(3) == 2);
    CHECK(interior_binomial_gcd(1) == 2);
    CHECK_THROWS_AS(interior_binomial_gcd(0), std::invalid_argument);
    for (int k = 1; k <= 32; ++k) {
        REQUIRE(interior_binomial_gcd(k) == oracle::binomial_gcd(k + 1, k));
        REQUIRE(interior_binomial_gcd(k) == leading_binomial_gcd(k + 1, k));
        const auto p = prime_power_base(k + 1);
        REQUIRE(interior_binomial_gcd(k) == (p ? Integer(*p) : Integer(1)));
    }
}

TEST_CASE("leading binomial gcd and the divisor lcm")
{
    CHECK(leading_binomial_gcd(6, 2) == 3);
    CHECK(leading_binomial_gcd(6, 1) == 6);
    CHECK(leading_binomial_gcd(12, 4) == 1);
    CHECK(divisor_lcm(12, 4) == 12);
    CHECK(divisor_lcm(6, 2) == 2);
    CHECK(divisor_lcm(5, 1) == 1);
    for (int r = 2; r <= 64; ++r)
        for (int k = 1; k <= r - 1; ++k) {
            REQUIRE(leading_binomial_gcd(r, k) == oracle::binomial_gcd(r, k));
            REQUIRE(divisor_lcm(r, k) == oracle::divisor_lcm(r, k));
            REQUIRE(leading_binomial_gcd(r, k) * divisor_lcm(r, k) == r);
            if (k + 1 <= r - 1) {
                const Integer next = leading_binomial_gcd(r, k + 1);
                REQUIRE(leading_binomial_gcd(r, k) % next == 0);
            }
        }
}

TEST_CASE("parity")
{
    CHECK(parity(4) == 0);
    CHECK(parity(5) == 1);
    CHECK(parity(-3) == 1);
    CHECK(parity(-4) == 0);
}

TEST_CASE("primes and prime powers")
{
    CHECK(is_prime(2));
    CHECK(is_prime(97));
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime(91));
    CHECK(prime_power_base(8) == 2);
    CHECK(prime_power_base(9) == 3);
    CHECK_FALSE(prime_power_base(6).has_value());
    CHECK_FALSE(prime_power_base(1).has_value());
}

TEST_CASE("hook shapes")
{
    const HookShape h(2, 3);
    CHECK(h.degree() == 5);
    CHECK(h.shift(2) == HookShape(4, 1));
    CHECK(h.to_string() == "(2,1^3)");
    CHECK_THROWS_AS(h.shift(4), std::invalid_argument);
    CHECK_THROWS_AS(HookShape(0, 2), std::invalid_argument);
}

TEST_CASE("resolution compositions")
{
    CHECK(resolution_compositions(2, 3, 0) == std::vector<Weight>{{2, 1, 1, 1}});
    CHECK(resolution_compositions(2, 3, 1) == std::vector<Weight>{{3, 1, 1}, {2, 2, 1}, {2, 1, 2}});
    CHECK(resolution_compositions(2, 3, 3) == std::vector<Weight>{{5}});
    CHECK_THROWS_AS(resolution_compositions(2, 3, 4), std::invalid_argument);
    CHECK_THROWS_AS(resolution_compositions(0, 3, 1), std::invalid_argument);

    for (int a = 1; a <= 5; ++a)
        for (int b = 0; b <= 6; ++b)
            for (int i = 0; i <= b; ++i) {
                const auto got = resolution_compositions(a, b, i);
                const auto want = oracle::compositions(a, b, i);
                REQUIRE(got.size() == want.size());
                for (std::size_t j = 0; j < got.size(); ++j) {
                    REQUIRE(got[j].parts == want[j]);
                    REQUIRE(got[j].length() == static_cast<std::size_t>(b + 1 - i));
                    REQUIRE(got[j].degree() == a + b);
                }
                if (i == 0)
                    REQUIRE(got.size() == 1);
            }
}
