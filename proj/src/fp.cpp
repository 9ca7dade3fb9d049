#include "v1ss/fp.hpp"

#include <algorithm>

namespace v1ss {

i64 checked_add(i64 a, i64 b)
{
    i64 r;
    if (__builtin_add_overflow(a, b, &r))
        throw CalcError("integer overflow in addition");
    return r;
}

i64 checked_sub(i64 a, i64 b)
{
    i64 r;
    if (__builtin_sub_overflow(a, b, &r))
        throw CalcError("integer overflow in subtraction");
    return r;
}

i64 checked_mul(i64 a, i64 b)
{
    i64 r;
    if (__builtin_mul_overflow(a, b, &r))
        throw CalcError("integer overflow in multiplication");
    return r;
}

bool is_prime(i64 n)
{
    if (n < 2)
        return false;
    for (i64 d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

i64 fp_pow(i64 a, i64 e, const Prime& p)
{
    i64 r = 1, b = fp_norm(a, p);
    while (e > 0) {
        if (e & 1)
            r = fp_mul(r, b, p);
        b = fp_mul(b, b, p);
        e >>= 1;
    }
    return r;
}

i64 fp_inv(i64 a, const Prime& p)
{
    a = fp_norm(a, p);
    if (a == 0)
        throw CalcError("fp_inv: zero has no inverse");
    return fp_pow(a, p.p - 2, p);
}

int padic_valuation(i64 i, const Prime& p)
{
    if (i == 0)
        throw CalcError("padic_valuation: undefined at 0");
    int v = 0;
    while (i % p.p == 0) {
        i /= p.p;
        ++v;
    }
    return v;
}

i64 lucas_binomial(i64 i, i64 j, const Prime& p)
{
    if (i < 0 || j < 0)
        throw CalcError("lucas_binomial: negative input");
    i64 n = checked_add(i, j), k = i, r = 1;
    while (n > 0 || k > 0) {
        i64 nd = n % p.p, kd = k % p.p;
        if (kd > nd)
            return 0;
        /* binomial(nd, kd) for digits < p, exact in 64 bits */
        i64 c = 1;
        for (i64 x = 0; x < kd; ++x)
            c = c * (nd - x) / (x + 1);
        r = fp_mul(r, fp_norm(c, p), p);
        n /= p.p;
        k /= p.p;
    }
    return r;
}

FpMatrix FpMatrix::identity(int n)
{
    FpMatrix m(n, n);
    for (int i = 0; i < n; ++i)
        m.at(i, i) = 1;
    return m;
}

void FpMatrix::reduce_entries(const Prime& p)
{
    for (auto& x : a)
        x = fp_norm(x, p);
}

FpMatrix matmul(const FpMatrix& x, const FpMatrix& y, const Prime& p)
{
    if (x.cols != y.rows)
        throw CalcError("matmul: dimension mismatch");
    FpMatrix r(x.rows, y.cols);
    for (int i = 0; i < x.rows; ++i)
        for (int k = 0; k < x.cols; ++k) {
            i64 v = x.at(i, k);
            if (v == 0)
                continue;
            for (int j = 0; j < y.cols; ++j)
                r.at(i, j) = (r.at(i, j) + v * y.at(k, j)) % p.p;
        }
    return r;
}

RrefResult rref(FpMatrix m, const Prime& p)
{
    m.reduce_entries(p);
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < m.cols && row < m.rows; ++col) {
        int piv = -1;
        for (int r = row; r < m.rows; ++r)
            if (m.at(r, col) != 0) {
                piv = r;
                break;
            }
        if (piv < 0)
            continue;
        if (piv != row)
            for (int c = 0; c < m.cols; ++c)
                std::swap(m.at(piv, c), m.at(row, c));
        i64 inv = fp_inv(m.at(row, col), p);
        for (int c = 0; c < m.cols; ++c)
            m.at(row, c) = fp_mul(m.at(row, c), inv, p);
        for (int r = 0; r < m.rows; ++r) {
            if (r == row || m.at(r, col) == 0)
                continue;
            i64 f = m.at(r, col);
            for (int c = 0; c < m.cols; ++c)
                m.at(r, c) = fp_sub(m.at(r, c), fp_mul(f, m.at(row, c), p), p);
        }
        pivots.push_back(col);
        ++row;
    }
    return {std::move(m), std::move(pivots)};
}

int rank(const FpMatrix& m, const Prime& p)
{
    return static_cast<int>(rref(m, p).pivot_columns.size());
}

std::vector<std::vector<i64>> kernel_basis(const FpMatrix& m, const Prime& p)
{
    RrefResult rr = rref(m, p);
    const auto& piv = rr.pivot_columns;
    std::vector<bool> is_piv(m.cols, false);
    for (int c : piv)
        is_piv[c] = true;
    std::vector<std::vector<i64>> basis;
    for (int free = 0; free < m.cols; ++free) {
        if (is_piv[free])
            continue;
        std::vector<i64> v(m.cols, 0);
        v[free] = 1;
        for (size_t r = 0; r < piv.size(); ++r)
            v[piv[r]] = fp_norm(-rr.reduced.at(static_cast<int>(r), free), p);
        basis.push_back(std::move(v));
    }
    return basis;
}

HomologyData homology_data(const FpMatrix& d_out, const FpMatrix& d_in, const Prime& p)
{
    if (d_out.cols != d_in.rows)
        throw CalcError("homology_data: middle dimensions disagree");
    /* d_out . d_in must vanish */
    FpMatrix comp = matmul(d_out, d_in, p);
    for (i64 v : comp.a)
        if (fp_norm(v, p) != 0)
            throw CalcError("homology_data: d_out * d_in != 0 (inconsistent differential rules)");

    auto cycles = kernel_basis(d_out, p);
    RowSpace image(p, d_in.rows);
    for (int c = 0; c < d_in.cols; ++c) {
        std::vector<i64> col(d_in.rows);
        for (int r = 0; r < d_in.rows; ++r)
            col[r] = d_in.at(r, c);
        image.add(std::move(col));
    }
    HomologyData h;
    RowSpace seen(p, d_in.rows);
    for (auto& r : image.rows())
        seen.add(r);
    for (auto& z : cycles) {
        auto res = seen.reduce(z);
        bool nonzero = false;
        for (i64 v : res)
            if (v)
                nonzero = true;
        if (nonzero) {
            seen.add(z);
            h.representatives.push_back(z);
        }
    }
    h.dim = static_cast<int>(cycles.size()) - image.dim();
    if (h.dim != static_cast<int>(h.representatives.size()))
        throw CalcError("homology_data: internal dimension mismatch");
    return h;
}

bool RowSpace::add(std::vector<i64> v)
{
    Prime p(p_);
    v = reduce(std::move(v));
    int piv = -1;
    for (int c = 0; c < width_; ++c)
        if (v[c] != 0) {
            piv = c;
            break;
        }
    if (piv < 0)
        return false;
    i64 inv = fp_inv(v[piv], p);
    for (auto& x : v)
        x = fp_mul(x, inv, p);
    /* clear the new pivot column from existing rows */
    for (auto& row : rows_) {
        i64 f = row[piv];
        if (f == 0)
            continue;
        for (int c = 0; c < width_; ++c)
            row[c] = fp_sub(row[c], fp_mul(f, v[c], p), p);
    }
    /* keep rows ordered by pivot */
    size_t pos = 0;
    while (pos < pivots_.size() && pivots_[pos] < piv)
        ++pos;
    rows_.insert(rows_.begin() + pos, std::move(v));
    pivots_.insert(pivots_.begin() + pos, piv);
    return true;
}

std::vector<i64> RowSpace::reduce(std::vector<i64> v) const
{
    Prime p(p_);
    if (static_cast<int>(v.size()) != width_)
        throw CalcError("RowSpace::reduce: width mismatch");
    for (auto& x : v)
        x = fp_norm(x, p);
    for (size_t r = 0; r < rows_.size(); ++r) {
        i64 f = v[pivots_[r]];
        if (f == 0)
            continue;
        for (int c = 0; c < width_; ++c)
            v[c] = fp_sub(v[c], fp_mul(f, rows_[r][c], p), p);
    }
    return v;
}

bool RowSpace::contains(std::vector<i64> v) const
{
    v = reduce(std::move(v));
    for (i64 x : v)
        if (x)
            return false;
    return true;
}

}  // namespace v1ss
