#include "hookext/zlinalg.hpp"

#include "doctest.h"
#include "oracles.hpp"

#include <random>
#include <stdexcept>

using namespace hookext;

namespace {

IntMatrix random_matrix(std::mt19937& rng, std::size_t max_dim, int bound)
{
    std::uniform_int_distribution<std::size_t> dim(1, max_dim);
    std::uniform_int_distribution<int> entry(-bound, bound);
    IntMatrix m(dim(rng), dim(rng));
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c)
            m(r, c) = entry(rng);
    return m;
}

std::vector<Integer> nonzero(const IntVector& d)
{
    std::vector<Integer> out;
    for (const auto& x : d)
        if (x != 0)
            out.push_back(x);
    return out;
}

Integer det(const IntMatrix& m)
{
    std::vector<std::vector<Integer>> rows(m.rows(), std::vector<Integer>(m.cols()));
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c)
            rows[r][c] = m(r, c);
    return oracle::bareiss_determinant(rows);
}

}  // namespace

TEST_CASE("smith normal form examples")
{
    CHECK(smith_diagonal(IntMatrix{{2, 4}, {6, 8}}) == IntVector{2, 4});
    CHECK(smith_diagonal(IntMatrix{{3, 0}, {0, 5}}) == IntVector{1, 15});
    CHECK(smith_diagonal(IntMatrix{{0, 0}, {0, 0}}).empty());
    CHECK(smith_normal_form(IntMatrix{{0, 0}, {0, 0}}).rank == 0);
    CHECK(cokernel_invariants(IntMatrix{{2, 4}, {6, 8}}).to_string() == "Z_2 ⊕ Z_4");
    CHECK(cokernel_invariants(IntMatrix{{3, 0}, {0, 5}}).to_string() == "Z_15");
    CHECK(cokernel_invariants(IntMatrix{{2}, {0}}).to_string() == "Z ⊕ Z_2");
    CHECK(cokernel_invariants(IntMatrix{{2}, {0}}).to_string(true) == "Z + Z_2");
    CHECK(cokernel_invariants(IntMatrix{{1, 0}, {0, 1}}).to_string() == "0");
    CHECK(cokernel_invariants(IntMatrix(3, 0)).free_rank == 3);
}

TEST_CASE("smith form transforms and divisibility on random matrices")
{
    std::mt19937 rng(7);
    for (int trial = 0; trial < 300; ++trial) {
        const IntMatrix a = random_matrix(rng, 7, 20);
        const SmithForm f = smith_normal_form(a);
        REQUIRE(f.U * a * f.V == f.S);
        const Integer du = det(f.U), dv = det(f.V);
        REQUIRE((du == 1 || du == -1));
        REQUIRE((dv == 1 || dv == -1));
        const IntVector d = f.diagonal();
        for (std::size_t j = 0; j < d.size(); ++j) {
            REQUIRE(d[j] >= 0);
            if (j + 1 < d.size() && d[j] != 0)
                REQUIRE(d[j + 1] % d[j] == 0);
        }
        for (std::size_t r = 0; r < f.S.rows(); ++r)
            for (std::size_t c = 0; c < f.S.cols(); ++c)
                if (r != c)
                    REQUIRE(f.S(r, c) == 0);
        REQUIRE(nonzero(d) == oracle::minor_gcd_invariants(a));
        REQUIRE(rank(a) == nonzero(d).size());
    }
}

TEST_CASE("large intermediate values stay exact")
{
    IntMatrix a(4, 4);
    for (std::size_t r = 0; r < 4; ++r)
        for (std::size_t c = 0; c < 4; ++c)
            a(r, c) = Integer("1000000000000000000000") * Integer(static_cast<long>(r * 4 + c + 1)) +
                      Integer(static_cast<long>(r == c));
    REQUIRE(nonzero(smith_diagonal(a)) == oracle::minor_gcd_invariants(a));
}

TEST_CASE("lattice membership and orders")
{
    const IntMatrix a{{2, 0}, {0, 3}};
    CHECK(lattice_membership(a, IntVector{4, 9}) == IntVector{2, 3});
    CHECK_FALSE(lattice_membership(a, IntVector{1, 0}).has_value());
    CHECK(order_in_cokernel(a, IntVector{1, 0}) == Integer(2));
    CHECK(order_in_cokernel(a, IntVector{1, 1}) == Integer(6));
    CHECK(order_in_cokernel(a, IntVector{0, 3}) == Integer(1));
    CHECK_FALSE(order_in_cokernel(IntMatrix{{2}, {0}}, IntVector{0, 1}).has_value());

    std::mt19937 rng(11);
    for (int trial = 0; trial < 100; ++trial) {
        const IntMatrix m = random_matrix(rng, 5, 6);
        IntVector x(m.cols());
        for (auto& v : x)
            v = static_cast<long>(rng() % 11) - 5;
        const IntVector y = m * x;
        const Cokernel c(m);
        REQUIRE(c.contains(y));
        auto pre = c.preimage(y);
        REQUIRE(pre.has_value());
        REQUIRE(m * *pre == y);
    }
}

TEST_CASE("rank modulo p")
{
    const IntMatrix a{{2, 4}, {6, 8}};
    CHECK(rank_mod_p(a, 2) == 0);
    CHECK(rank_mod_p(a, 3) == 2);
    CHECK(rank_mod_p(IntMatrix{{3, 0}, {0, 5}}, 3) == 1);
    CHECK_THROWS_AS(rank_mod_p(a, 4), std::invalid_argument);

    std::mt19937 rng(3);
    for (int trial = 0; trial < 200; ++trial) {
        const IntMatrix m = random_matrix(rng, 6, 9);
        for (long p : {2L, 3L, 5L, 7L}) {
            std::size_t expected = 0;
            for (const auto& s : nonzero(smith_diagonal(m)))
                if (s % p != 0)
                    ++expected;
            REQUIRE(rank_mod_p(m, p) == expected);
        }
    }
}

TEST_CASE("abelian groups")
{
    CHECK(AbelianGroup::cyclic(1).is_trivial());
    CHECK(AbelianGroup::cyclic(6).to_string() == "Z_6");
    const AbelianGroup g{1, {2, 4}};
    CHECK(g.torsion_part() == AbelianGroup{0, {2, 4}});
    CHECK(g.torsion_part().order() == 8);
}

TEST_CASE("more spec examples")
{
    CHECK(lattice_membership(IntMatrix{{2, 4}, {6, 8}}, IntVector{2, 6}) == IntVector{1, 0});
    CHECK_FALSE(lattice_membership(IntMatrix{{2}}, IntVector{3}).has_value());
    CHECK(lattice_membership(IntMatrix::identity(3), IntVector{4, -1, 7}) == IntVector{4, -1, 7});
    CHECK(order_in_cokernel(IntMatrix{{2}}, IntVector{1}) == Integer(2));
    CHECK(cokernel_invariants(IntMatrix{{2}}) == AbelianGroup{0, {2}});
    CHECK(oracle::minor_gcd_invariants(IntMatrix{{2, 4}, {6, 8}}) == std::vector<Integer>{2, 4});
    CHECK(oracle::minor_gcd_invariants(IntMatrix{{3, 0}, {0, 5}}) == std::vector<Integer>{1, 15});
    CHECK(oracle::minor_gcd_invariants(IntMatrix(3, 2)).empty());
    const SmithForm z = smith_normal_form(IntMatrix(2, 3));
    CHECK(z.S.is_zero());
    CHECK(z.U == IntMatrix::identity(2));
    CHECK(z.V == IntMatrix::identity(3));
    CHECK(smith_normal_form(IntMatrix::identity(4)).S == IntMatrix::identity(4));
    CHECK_THROWS_AS(lattice_membership(IntMatrix{{2}}, IntVector{1, 2}), std::invalid_argument);
}

TEST_CASE("cokernel invariants ignore permutations and zero columns")
{
    std::mt19937 rng(5);
    for (int trial = 0; trial < 100; ++trial) {
        const IntMatrix a = random_matrix(rng, 5, 9);
        const AbelianGroup g = cokernel_invariants(a);
        IntMatrix p(a.rows(), a.cols());
        for (std::size_t r = 0; r < a.rows(); ++r)
            for (std::size_t c = 0; c < a.cols(); ++c)
                p(a.rows() - 1 - r, (c + 1) % a.cols()) = a(r, c);
        REQUIRE(cokernel_invariants(p) == g);
        REQUIRE(cokernel_invariants(a.with_column(IntVector(a.rows()))) == g);
    }
}

TEST_CASE("element orders match membership of multiples")
{
    std::mt19937 rng(13);
    for (int trial = 0; trial < 100; ++trial) {
        const IntMatrix a = random_matrix(rng, 4, 6);
        IntVector v(a.rows());
        for (auto& x : v)
            x = static_cast<long>(rng() % 7) - 3;
        const auto ord = order_in_cokernel(a, v);
        auto multiple = [&](long m) {
            IntVector w = v;
            for (auto& x : w)
                x *= m;
            return w;
        };
        if (!ord) {
            for (long m = 1; m <= 50; ++m)
                REQUIRE_FALSE(lattice_membership(a, multiple(m)).has_value());
            continue;
        }
        const long m = ord->get_si();
        REQUIRE(lattice_membership(a, multiple(m)).has_value());
        for (long j = 1; j < m; ++j)
            REQUIRE_FALSE(lattice_membership(a, multiple(j)).has_value());
    }
}
