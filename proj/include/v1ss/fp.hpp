#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace v1ss {

using i64 = std::int64_t;

struct CalcError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/* checked signed arithmetic: overflow is an error, never wraparound */
i64 checked_add(i64 a, i64 b);
i64 checked_sub(i64 a, i64 b);
i64 checked_mul(i64 a, i64 b);

bool is_prime(i64 n);

/* Odd prime field parameter.  p = 3 is admitted for cheap runs even where
 * the statements being replayed assume p >= 5; reports carry a flag. */
struct Prime {
    i64 p;
    explicit Prime(i64 q) : p(q)
    {
        if (q < 3 || q % 2 == 0 || !is_prime(q))
            throw CalcError("Prime: need an odd prime >= 3, got " + std::to_string(q));
    }
    bool below_paper_bound() const { return p < 5; }
};

inline i64 fp_norm(i64 a, const Prime& p)
{
    i64 r = a % p.p;
    return r < 0 ? r + p.p : r;
}
inline i64 fp_add(i64 a, i64 b, const Prime& p) { return (a + b) % p.p; }
inline i64 fp_sub(i64 a, i64 b, const Prime& p) { return fp_norm(a - b, p); }
inline i64 fp_mul(i64 a, i64 b, const Prime& p) { return (a * b) % p.p; }
i64 fp_pow(i64 a, i64 e, const Prime& p);
i64 fp_inv(i64 a, const Prime& p);

/* v_p(i) for i != 0; rejects i = 0 */
int padic_valuation(i64 i, const Prime& p);

/* binomial(i+j, i) mod p by Lucas' theorem, digitwise in base p */
i64 lucas_binomial(i64 i, i64 j, const Prime& p);

struct FpMatrix {
    int rows = 0, cols = 0;
    std::vector<i64> a;  /* row-major, entries in [0, p) */

    FpMatrix() = default;
    FpMatrix(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, 0) {}
    i64& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
    i64 at(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }
    static FpMatrix identity(int n);
    void reduce_entries(const Prime& p);
};

FpMatrix matmul(const FpMatrix& x, const FpMatrix& y, const Prime& p);

struct RrefResult {
    FpMatrix reduced;
    std::vector<int> pivot_columns;
};

RrefResult rref(FpMatrix m, const Prime& p);
int rank(const FpMatrix& m, const Prime& p);

/* basis of ker(m) acting on column vectors; count = cols - rank */
std::vector<std::vector<i64>> kernel_basis(const FpMatrix& m, const Prime& p);

struct HomologyData {
    int dim = 0;
    std::vector<std::vector<i64>> representatives;  /* cycles spanning ker/im */
};

/* homology at the middle of  . --d_in--> . --d_out--> .
 * requires d_out * d_in = 0 (else an inconsistent rule set is signalled) */
HomologyData homology_data(const FpMatrix& d_out, const FpMatrix& d_in, const Prime& p);

/* Incrementally maintained row space in reduced echelon form. */
class RowSpace {
public:
    RowSpace(const Prime& p, int width) : p_(p.p), width_(width) {}
    int dim() const { return static_cast<int>(rows_.size()); }
    int width() const { return width_; }
    /* returns true if v was independent (the space grew) */
    bool add(std::vector<i64> v);
    /* residue of v after reduction against the stored rows */
    std::vector<i64> reduce(std::vector<i64> v) const;
    bool contains(std::vector<i64> v) const;
    const std::vector<std::vector<i64>>& rows() const { return rows_; }
    const std::vector<int>& pivots() const { return pivots_; }

private:
    i64 p_;
    int width_;
    std::vector<std::vector<i64>> rows_;  /* kept in rref */
    std::vector<int> pivots_;
};

}  // namespace v1ss
