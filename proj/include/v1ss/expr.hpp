#pragma once

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "v1ss/algebra.hpp"

namespace v1ss {

/* predicate on a free integer exponent, evaluated exactly */
struct Pred {
    enum Type { All, Range, VpEq, VpGe, NotMult } type = All;
    i64 lo = 0, hi = 0; /* Range: lo <= i <= hi */
    int k = 0;          /* VpEq / VpGe */
    bool eval(i64 i, const Prime& p) const;
    std::string str() const;

    static Pred all() { return Pred{}; }
    static Pred range(i64 lo, i64 hi) { return Pred{Range, lo, hi, 0}; }
    static Pred vp_eq(int k) { return Pred{VpEq, 0, 0, k}; }
    static Pred vp_ge(int k) { return Pred{VpGe, 0, 0, k}; }
    static Pred not_mult() { return Pred{NotMult, 0, 0, 0}; } /* p does not divide i */
};

struct ExprNode;
using Expr = std::shared_ptr<const ExprNode>;

struct ExprNode {
    enum Op {
        Sum,
        Tensor,
        Shift,
        LeafE,     /* exterior algebra on one generator */
        LeafP,     /* polynomial */
        LeafPh,    /* truncated height h */
        LeafPl,    /* Laurent */
        LeafGamma, /* divided power (expands to height-p surrogates in-window) */
        SpanL,     /* explicit finite span */
        SpanF,     /* span of one exponent family with a predicate */
        One
    } op = One;
    std::vector<Expr> args;
    i64 ds = 0, dt = 0;
    std::string name;
    i64 s = 0, t = 0;
    int h = 0;
    std::vector<std::tuple<std::string, i64, i64>> span; /* label, s, t */
    Pred pred;
    i64 fs = 0, ft = 0; /* SpanF: per-unit-exponent direction; (s,t) is the offset */
};

Expr E(const std::string& name, i64 s, i64 t);
Expr P(const std::string& name, i64 s, i64 t);
Expr Ph(const std::string& name, i64 s, i64 t, int h);
Expr Pl(const std::string& name, i64 s, i64 t);
Expr Gamma(const std::string& name, i64 s, i64 t);
Expr span_list(std::vector<std::tuple<std::string, i64, i64>> entries);
/* family  {name^j : pred(j)}  of elements with bidegree offset + j*dir */
Expr span_family(const std::string& name, i64 dir_s, i64 dir_t, i64 off_s, i64 off_t, Pred pr);
Expr tensor(std::vector<Expr> xs);
Expr dsum(std::vector<Expr> xs);
Expr shift(i64 ds, i64 dt, Expr x);
Expr one();
Expr zero();

/* single-degree leaves (s = 0) for total-graded module formulas */
Expr Ed(const std::string& name, i64 deg);
Expr Pd(const std::string& name, i64 deg);
Expr Phd(const std::string& name, i64 deg, int h);
Expr Pld(const std::string& name, i64 deg);
Expr span_list_d(std::vector<std::pair<std::string, i64>> entries);

std::string expr_string(const Expr& e);

struct PoincareSeries {
    i64 lo = 0, hi = -1;
    std::map<i64, i64> coeff; /* degree -> dimension, zeros omitted */
    i64 at(i64 n) const
    {
        auto it = coeff.find(n);
        return it == coeff.end() ? 0 : it->second;
    }
};

/* exact dimension counts; total grading requires every leaf to have s = 0 */
PoincareSeries series_total(const Expr& e, i64 lo, i64 hi, const Prime& p);
std::map<std::pair<i64, i64>, i64> series_bigraded(const Expr& e, const Window& w, const Prime& p);

struct EqualVerdict {
    bool equal = true;
    i64 degree = 0; /* first mismatch */
    i64 got = 0, want = 0;
};
EqualVerdict equal_in_window(const Expr& a, const Expr& b, i64 lo, i64 hi, const Prime& p);

struct FreeRankCert {
    bool periodic = false;
    i64 rank = 0;
    i64 euler = 0;
    std::multiset<i64> generator_degrees;
    i64 certified_from = 0; /* series is periodic for degrees >= this */
    i64 first_violation = 0;
};
/* certifies that the series is eventually |periodic|-periodic inside the
 * range and reads off the free-module data; range must span >= 2 periods */
FreeRankCert free_rank_certificate(const Expr& e, i64 period, i64 lo, i64 hi, const Prime& p);

struct LesResult {
    bool consistent = true;
    i64 fail_degree = 0;
    std::map<i64, i64> boundary_rank; /* rank of the degree -1 connecting map out of C_n */
};
/* exactness bookkeeping for  ... -> A_n -> B_n -> C_n -> A_{n-1} -> ...
 * ranks solved upward from a degree below the support of all three terms */
LesResult les_consistency(const Expr& A, const Expr& B, const Expr& C, i64 lo, i64 hi,
                          const Prime& p);

struct CofiberMap {
    /* generator-level map data: each source family either dies or maps
     * isomorphically onto the paired image family (degreewise) */
    std::vector<std::pair<Expr, Expr>> images; /* (source family, image family) */
    std::vector<Expr> kernel_families;         /* source families mapped to zero */
};

/* series of the cofiber C of f: A -> B:
 * dim C_n = dim B_n - rank_n + dim A_{n-1} - rank_{n-1} */
PoincareSeries cofiber_series(const Expr& A, const Expr& B, const CofiberMap& f, i64 lo, i64 hi,
                              const Prime& p);

}  // namespace v1ss
