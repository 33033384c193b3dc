#include "hookext/zlinalg.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace hookext {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows)
{
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_)
            throw std::invalid_argument("IntMatrix: ragged initializer");
        for (long x : r)
            data_.emplace_back(x);
    }
}

IntMatrix IntMatrix::identity(std::size_t n)
{
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = 1;
    return m;
}

IntVector IntMatrix::column(std::size_t c) const
{
    IntVector v(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        v[r] = (*this)(r, c);
    return v;
}

IntMatrix IntMatrix::transposed() const
{
    IntMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            t(c, r) = (*this)(r, c);
    return t;
}

IntMatrix IntMatrix::with_columns(const IntMatrix& extra) const
{
    if (extra.rows_ != rows_)
        throw std::invalid_argument("with_columns: row count mismatch");
    IntMatrix out(rows_, cols_ + extra.cols_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c)
            out(r, c) = (*this)(r, c);
        for (std::size_t c = 0; c < extra.cols_; ++c)
            out(r, cols_ + c) = extra(r, c);
    }
    return out;
}

IntMatrix IntMatrix::with_column(const IntVector& v) const
{
    if (v.size() != rows_)
        throw std::invalid_argument("with_column: length mismatch");
    IntMatrix col(rows_, 1);
    for (std::size_t r = 0; r < rows_; ++r)
        col(r, 0) = v[r];
    return with_columns(col);
}

bool IntMatrix::is_zero() const
{
    return std::all_of(data_.begin(), data_.end(), [](const Integer& x) { return x == 0; });
}

IntMatrix operator*(const IntMatrix& x, const IntMatrix& y)
{
    if (x.cols_ != y.rows_)
        throw std::invalid_argument("matrix product: dimension mismatch");
    IntMatrix out(x.rows_, y.cols_);
    for (std::size_t i = 0; i < x.rows_; ++i)
        for (std::size_t k = 0; k < x.cols_; ++k) {
            const Integer& xik = x(i, k);
            if (xik == 0)
                continue;
            for (std::size_t j = 0; j < y.cols_; ++j)
                if (y(k, j) != 0)
                    out(i, j) += xik * y(k, j);
        }
    return out;
}

IntVector operator*(const IntMatrix& x, const IntVector& v)
{
    if (x.cols_ != v.size())
        throw std::invalid_argument("matrix-vector product: dimension mismatch");
    IntVector out(x.rows_);
    for (std::size_t i = 0; i < x.rows_; ++i)
        for (std::size_t k = 0; k < x.cols_; ++k)
            if (x(i, k) != 0 && v[k] != 0)
                out[i] += x(i, k) * v[k];
    return out;
}

AbelianGroup AbelianGroup::cyclic(const Integer& order)
{
    AbelianGroup g;
    Integer o = abs(order);
    if (o == 0)
        g.free_rank = 1;
    else if (o > 1)
        g.torsion.push_back(o);
    return g;
}

Integer AbelianGroup::order() const
{
    Integer o = 1;
    for (const auto& t : torsion)
        o *= t;
    return o;
}

std::string AbelianGroup::to_string(bool ascii) const
{
    if (is_trivial())
        return "0";
    const std::string sep = ascii ? " + " : " ⊕ ";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < free_rank; ++i) {
        os << (first ? "" : sep) << "Z";
        first = false;
    }
    for (const auto& t : torsion) {
        os << (first ? "" : sep) << "Z_" << t.get_str();
        first = false;
    }
    return os.str();
}

IntVector SmithForm::diagonal() const
{
    IntVector d;
    for (std::size_t i = 0; i < rank; ++i)
        d.push_back(S(i, i));
    return d;
}

namespace {

int cmp_abs(const Integer& x, const Integer& y)
{
    return mpz_cmpabs(x.get_mpz_t(), y.get_mpz_t());
}

// Elementary unimodular operations on A, mirrored on U (rows) and V (columns)
// when those are tracked.
class SmithReducer {
public:
    SmithReducer(IntMatrix a, IntMatrix* u, IntMatrix* v) : a_(std::move(a)), u_(u), v_(v) {}

    std::size_t run()
    {
        const std::size_t m = a_.rows(), n = a_.cols();
        std::size_t t = 0;
        for (; t < std::min(m, n); ++t) {
            auto piv = find_pivot(t, t);
            if (!piv)
                break;
            swap_rows(t, piv->first);
            swap_cols(t, piv->second);
            reduce_pivot(t);
            if (a_(t, t) < 0)
                negate_row(t);
        }
        return t;
    }

    IntMatrix& matrix() { return a_; }

private:
    // Smallest non-zero magnitude in the lower-right block; stops at a unit.
    std::optional<std::pair<std::size_t, std::size_t>> find_pivot(std::size_t r0, std::size_t c0) const
    {
        std::optional<std::pair<std::size_t, std::size_t>> best;
        const Integer* best_val = nullptr;
        for (std::size_t r = r0; r < a_.rows(); ++r)
            for (std::size_t c = c0; c < a_.cols(); ++c) {
                const Integer& x = a_(r, c);
                if (x == 0)
                    continue;
                if (!best_val || cmp_abs(x, *best_val) < 0) {
                    best = {r, c};
                    best_val = &x;
                    if (x == 1 || x == -1)
                        return best;
                }
            }
        return best;
    }

    void reduce_pivot(std::size_t t)
    {
        const std::size_t m = a_.rows(), n = a_.cols();
        Integer q;
        for (;;) {
            bool clean = true;
            for (std::size_t i = t + 1; i < m; ++i) {
                if (a_(i, t) == 0)
                    continue;
                mpz_tdiv_q(q.get_mpz_t(), a_(i, t).get_mpz_t(), a_(t, t).get_mpz_t());
                if (q != 0)
                    add_row_multiple(i, t, -q);
                if (a_(i, t) != 0)
                    clean = false;
            }
            for (std::size_t j = t + 1; j < n; ++j) {
                if (a_(t, j) == 0)
                    continue;
                mpz_tdiv_q(q.get_mpz_t(), a_(t, j).get_mpz_t(), a_(t, t).get_mpz_t());
                if (q != 0)
                    add_col_multiple(j, t, -q);
                if (a_(t, j) != 0)
                    clean = false;
            }
            if (!clean) {
                // a remainder smaller than the pivot is left in row/column t
                std::size_t br = t, bc = t;
                for (std::size_t i = t + 1; i < m; ++i)
                    if (a_(i, t) != 0 && cmp_abs(a_(i, t), a_(br, bc)) < 0)
                        br = i, bc = t;
                for (std::size_t j = t + 1; j < n; ++j)
                    if (a_(t, j) != 0 && cmp_abs(a_(t, j), a_(br, bc)) < 0)
                        br = t, bc = j;
                swap_rows(t, br);
                swap_cols(t, bc);
                continue;
            }
            if (a_(t, t) == 1 || a_(t, t) == -1)
                return;
            // pivot must divide the remaining block
            bool divides = true;
            for (std::size_t i = t + 1; i < m && divides; ++i)
                for (std::size_t j = t + 1; j < n; ++j) {
                    if (a_(i, j) != 0 && !mpz_divisible_p(a_(i, j).get_mpz_t(), a_(t, t).get_mpz_t())) {
                        add_row_multiple(t, i, 1);
                        divides = false;
                        break;
                    }
                }
            if (divides)
                return;
        }
    }

    void add_row_multiple(std::size_t dst, std::size_t src, const Integer& f)
    {
        for (std::size_t c = 0; c < a_.cols(); ++c)
            if (a_(src, c) != 0)
                a_(dst, c) += f * a_(src, c);
        if (u_)
            for (std::size_t c = 0; c < u_->cols(); ++c)
                if ((*u_)(src, c) != 0)
                    (*u_)(dst, c) += f * (*u_)(src, c);
    }

    void add_col_multiple(std::size_t dst, std::size_t src, const Integer& f)
    {
        for (std::size_t r = 0; r < a_.rows(); ++r)
            if (a_(r, src) != 0)
                a_(r, dst) += f * a_(r, src);
        if (v_)
            for (std::size_t r = 0; r < v_->rows(); ++r)
                if ((*v_)(r, src) != 0)
                    (*v_)(r, dst) += f * (*v_)(r, src);
    }

    void swap_rows(std::size_t i, std::size_t j)
    {
        if (i == j)
            return;
        for (std::size_t c = 0; c < a_.cols(); ++c)
            swap(a_(i, c), a_(j, c));
        if (u_)
            for (std::size_t c = 0; c < u_->cols(); ++c)
                swap((*u_)(i, c), (*u_)(j, c));
    }

    void swap_cols(std::size_t i, std::size_t j)
    {
        if (i == j)
            return;
        for (std::size_t r = 0; r < a_.rows(); ++r)
            swap(a_(r, i), a_(r, j));
        if (v_)
            for (std::size_t r = 0; r < v_->rows(); ++r)
                swap((*v_)(r, i), (*v_)(r, j));
    }

    void negate_row(std::size_t i)
    {
        for (std::size_t c = 0; c < a_.cols(); ++c)
            a_(i, c) = -a_(i, c);
        if (u_)
            for (std::size_t c = 0; c < u_->cols(); ++c)
                (*u_)(i, c) = -(*u_)(i, c);
    }

    IntMatrix a_;
    IntMatrix* u_;
    IntMatrix* v_;
};

}  // namespace

SmithForm smith_normal_form(const IntMatrix& a)
{
    SmithForm f;
    f.U = IntMatrix::identity(a.rows());
    f.V = IntMatrix::identity(a.cols());
    SmithReducer red(a, &f.U, &f.V);
    f.rank = red.run();
    f.S = std::move(red.matrix());
    return f;
}

IntVector smith_diagonal(const IntMatrix& a)
{
    SmithReducer red(a, nullptr, nullptr);
    const std::size_t r = red.run();
    IntVector d(r);
    for (std::size_t i = 0; i < r; ++i)
        d[i] = red.matrix()(i, i);
    return d;
}

AbelianGroup cokernel_invariants(const IntMatrix& a)
{
    const IntVector d = smith_diagonal(a);
    AbelianGroup g;
    g.free_rank = a.rows() - d.size();
    for (const auto& s : d)
        if (s > 1)
            g.torsion.push_back(s);
    return g;
}

std::optional<IntVector> lattice_membership(const IntMatrix& a, const IntVector& v)
{
    return Cokernel(a).preimage(v);
}

std::optional<Integer> order_in_cokernel(const IntMatrix& a, const IntVector& v)
{
    return Cokernel(a).order(v);
}

std::size_t rank(const IntMatrix& a)
{
    return smith_diagonal(a).size();
}

std::size_t rank_mod_p(const IntMatrix& a, long p)
{
    if (!is_prime(p))
        throw std::invalid_argument("rank_mod_p: " + std::to_string(p) + " is not prime");
    const std::size_t m = a.rows(), n = a.cols();
    std::vector<long> w(m * n);
    for (std::size_t r = 0; r < m; ++r)
        for (std::size_t c = 0; c < n; ++c)
            w[r * n + c] = static_cast<long>(mpz_fdiv_ui(a(r, c).get_mpz_t(), static_cast<unsigned long>(p)));

    auto inverse = [p](long x) {
        // Fermat: x^(p-2)
        long result = 1, base = x % p;
        for (long e = p - 2; e > 0; e >>= 1) {
            if (e & 1)
                result = static_cast<long>((__int128)result * base % p);
            base = static_cast<long>((__int128)base * base % p);
        }
        return result;
    };

    std::size_t rk = 0;
    for (std::size_t c = 0; c < n && rk < m; ++c) {
        std::size_t piv = rk;
        while (piv < m && w[piv * n + c] == 0)
            ++piv;
        if (piv == m)
            continue;
        if (piv != rk)
            for (std::size_t k = 0; k < n; ++k)
                std::swap(w[piv * n + k], w[rk * n + k]);
        const long inv = inverse(w[rk * n + c]);
        for (std::size_t r = rk + 1; r < m; ++r) {
            const long x = w[r * n + c];
            if (x == 0)
                continue;
            const long f = static_cast<long>((__int128)x * inv % p);
            for (std::size_t k = c; k < n; ++k) {
                if (w[rk * n + k] == 0)
                    continue;
                long y = static_cast<long>((w[r * n + k] - (__int128)f * w[rk * n + k]) % p);
                w[r * n + k] = y < 0 ? y + p : y;
            }
        }
        ++rk;
    }
    return rk;
}

Cokernel::Cokernel(const IntMatrix& relations) : ambient_(relations.rows()), smith_(smith_normal_form(relations))
{
    diagonal_ = smith_.diagonal();
    group_.free_rank = ambient_ - smith_.rank;
    for (const auto& s : diagonal_)
        if (s > 1)
            group_.torsion.push_back(s);
}

IntVector Cokernel::coordinates(const IntVector& v) const
{
    if (v.size() != ambient_)
        throw std::invalid_argument("Cokernel: vector length " + std::to_string(v.size()) +
                                    " does not match " + std::to_string(ambient_));
    IntVector w = smith_.U * v;
    for (std::size_t j = 0; j < smith_.rank; ++j)
        mpz_fdiv_r(w[j].get_mpz_t(), w[j].get_mpz_t(), diagonal_[j].get_mpz_t());
    return w;
}

bool Cokernel::contains(const IntVector& v) const
{
    const IntVector w = coordinates(v);
    return std::all_of(w.begin(), w.end(), [](const Integer& x) { return x == 0; });
}

std::optional<Integer> Cokernel::order(const IntVector& v) const
{
    const IntVector w = coordinates(v);
    for (std::size_t j = smith_.rank; j < w.size(); ++j)
        if (w[j] != 0)
            return std::nullopt;
    Integer m = 1;
    for (std::size_t j = 0; j < smith_.rank; ++j)
        if (w[j] != 0)
            m = lcm(m, Integer(diagonal_[j] / gcd(diagonal_[j], w[j])));
    return m;
}

std::optional<IntVector> Cokernel::preimage(const IntVector& v) const
{
    if (v.size() != ambient_)
        throw std::invalid_argument("lattice membership: vector length mismatch");
    const IntVector w = smith_.U * v;
    IntVector z(smith_.V.rows());
    for (std::size_t j = 0; j < w.size(); ++j) {
        if (j < smith_.rank) {
            if (!mpz_divisible_p(w[j].get_mpz_t(), diagonal_[j].get_mpz_t()))
                return std::nullopt;
            z[j] = w[j] / diagonal_[j];
        } else if (w[j] != 0) {
            return std::nullopt;
        }
    }
    return smith_.V * z;
}

}  // namespace hookext
