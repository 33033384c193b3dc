#include "hookext/combinatorics.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace hookext {

HookShape::HookShape(int arm_, int leg_) : arm(arm_), leg(leg_)
{
    if (arm < 1 || leg < 0)
        throw std::invalid_argument("hook shape needs arm >= 1 and leg >= 0, got (" +
                                    std::to_string(arm) + "," + std::to_string(leg) + ")");
}

HookShape HookShape::shift(int k) const
{
    if (k < 0 || k > leg)
        throw std::invalid_argument("hook shift k=" + std::to_string(k) + " outside [0," +
                                    std::to_string(leg) + "]");
    return HookShape(arm + k, leg - k);
}

std::string HookShape::to_string() const
{
    std::ostringstream os;
    os << "(" << arm;
    if (leg > 0)
        os << ",1^" << leg;
    os << ")";
    return os.str();
}

int Weight::degree() const
{
    return std::accumulate(parts.begin(), parts.end(), 0);
}

Weight Weight::padded(std::size_t letters) const
{
    Weight w = *this;
    if (w.parts.size() < letters)
        w.parts.resize(letters, 0);
    return w;
}

std::string Weight::to_string() const
{
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < parts.size(); ++i)
        os << (i ? "," : "") << parts[i];
    os << ")";
    return os.str();
}

Integer binom(long n, long k)
{
    if (n < 0 || k < 0 || k > n)
        return 0;
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

Integer interior_binomial_gcd(int k)
{
    if (k < 1)
        throw std::invalid_argument("interior_binomial_gcd needs k >= 1");
    Integer g = 0;
    for (int j = 1; j <= k; ++j)
        g = gcd(g, binom(k + 1, j));
    return g;
}

Integer leading_binomial_gcd(int r, int k)
{
    if (k < 1 || k > r - 1)
        throw std::invalid_argument("leading_binomial_gcd needs 1 <= k <= r-1");
    Integer g = 0;
    for (int j = 1; j <= k; ++j)
        g = gcd(g, binom(r, j));
    return g;
}

Integer divisor_lcm(int r, int k)
{
    if (k < 1 || k > r - 1)
        throw std::invalid_argument("divisor_lcm needs 1 <= k <= r-1");
    Integer l = 1;
    for (int i = 1; i <= k; ++i)
        if (r % i == 0)
            l = lcm(l, Integer(i));
    return l;
}

int parity(long m)
{
    return static_cast<int>(((m % 2) + 2) % 2);
}

bool is_prime(long p)
{
    if (p < 2)
        return false;
    for (long d = 2; d * d <= p; ++d)
        if (p % d == 0)
            return false;
    return true;
}

std::optional<long> prime_power_base(long m)
{
    if (m < 2)
        return std::nullopt;
    long p = 2;
    while (m % p != 0)
        ++p;
    while (m % p == 0)
        m /= p;
    if (m != 1)
        return std::nullopt;
    return p;
}

std::vector<Weight> resolution_compositions(int a, int b, int i)
{
    if (a < 1 || b < 0)
        throw std::invalid_argument("resolution_compositions needs a >= 1 and b >= 0");
    if (i < 0 || i > b)
        throw std::invalid_argument("resolution_compositions needs 0 <= i <= b, got i=" +
                                    std::to_string(i));
    const int length = b + 1 - i;
    const int total = a + b;
    std::vector<Weight> out;
    std::vector<int> parts(length);

    // Parts are filled left to right, largest values first, so the output is
    // already in descending lexicographic order.
    std::function<void(int, int)> fill = [&](int pos, int remaining) {
        const int slots_after = length - pos - 1;
        if (slots_after == 0) {
            if (pos == 0 && (remaining < a || remaining > a + i))
                return;
            parts[pos] = remaining;
            out.emplace_back(parts);
            return;
        }
        int hi = remaining - slots_after;
        int lo = 1;
        if (pos == 0) {
            hi = std::min(hi, a + i);
            lo = a;
        }
        for (int v = hi; v >= lo; --v) {
            parts[pos] = v;
            fill(pos + 1, remaining - v);
        }
    };
    if (length > 0)
        fill(0, total);
    return out;
}

}  // namespace hookext
