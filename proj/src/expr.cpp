#include "v1ss/expr.hpp"

#include <algorithm>

namespace v1ss {

bool Pred::eval(i64 i, const Prime& p) const
{
    switch (type) {
        case All: return true;
        case Range: return i >= lo && i <= hi;
        case VpEq: return i != 0 && padic_valuation(i, p) == k;
        case VpGe: return i == 0 || padic_valuation(i, p) >= k; /* v_p(0) = +inf */
        case NotMult: return i % p.p != 0;
    }
    return false;
}

std::string Pred::str() const
{
    switch (type) {
        case All: return "all";
        case Range: return std::to_string(lo) + "<=i<=" + std::to_string(hi);
        case VpEq: return "vp=" + std::to_string(k);
        case VpGe: return "vp>=" + std::to_string(k);
        case NotMult: return "p!|i";
    }
    return "?";
}

static Expr mk(ExprNode n) { return std::make_shared<ExprNode>(std::move(n)); }

Expr E(const std::string& name, i64 s, i64 t)
{
    ExprNode n;
    n.op = ExprNode::LeafE;
    n.name = name;
    n.s = s;
    n.t = t;
    return mk(std::move(n));
}
Expr P(const std::string& name, i64 s, i64 t)
{
    ExprNode n;
    n.op = ExprNode::LeafP;
    n.name = name;
    n.s = s;
    n.t = t;
    return mk(std::move(n));
}
Expr Ph(const std::string& name, i64 s, i64 t, int h)
{
    ExprNode n;
    n.op = ExprNode::LeafPh;
    n.name = name;
    n.s = s;
    n.t = t;
    n.h = h;
    return mk(std::move(n));
}
Expr Pl(const std::string& name, i64 s, i64 t)
{
    ExprNode n;
    n.op = ExprNode::LeafPl;
    n.name = name;
    n.s = s;
    n.t = t;
    return mk(std::move(n));
}
Expr Gamma(const std::string& name, i64 s, i64 t)
{
    ExprNode n;
    n.op = ExprNode::LeafGamma;
    n.name = name;
    n.s = s;
    n.t = t;
    return mk(std::move(n));
}
Expr span_list(std::vector<std::tuple<std::string, i64, i64>> entries)
{
    ExprNode n;
    n.op = ExprNode::SpanL;
    n.span = std::move(entries);
    return mk(std::move(n));
}
Expr span_family(const std::string& name, i64 dir_s, i64 dir_t, i64 off_s, i64 off_t, Pred pr)
{
    ExprNode n;
    n.op = ExprNode::SpanF;
    n.name = name;
    n.fs = dir_s;
    n.ft = dir_t;
    n.s = off_s;
    n.t = off_t;
    n.pred = pr;
    return mk(std::move(n));
}
Expr tensor(std::vector<Expr> xs)
{
    ExprNode n;
    n.op = ExprNode::Tensor;
    n.args = std::move(xs);
    return mk(std::move(n));
}
Expr dsum(std::vector<Expr> xs)
{
    ExprNode n;
    n.op = ExprNode::Sum;
    n.args = std::move(xs);
    return mk(std::move(n));
}
Expr shift(i64 ds, i64 dt, Expr x)
{
    ExprNode n;
    n.op = ExprNode::Shift;
    n.ds = ds;
    n.dt = dt;
    n.args = {std::move(x)};
    return mk(std::move(n));
}
Expr one()
{
    ExprNode n;
    n.op = ExprNode::One;
    return mk(std::move(n));
}
Expr zero() { return dsum({}); }

Expr Ed(const std::string& name, i64 deg) { return E(name, 0, deg); }
Expr Pd(const std::string& name, i64 deg) { return P(name, 0, deg); }
Expr Phd(const std::string& name, i64 deg, int h) { return Ph(name, 0, deg, h); }
Expr Pld(const std::string& name, i64 deg) { return Pl(name, 0, deg); }
Expr span_list_d(std::vector<std::pair<std::string, i64>> entries)
{
    std::vector<std::tuple<std::string, i64, i64>> es;
    for (auto& [l, d] : entries)
        es.push_back({l, 0, d});
    return span_list(std::move(es));
}

std::string expr_string(const Expr& e)
{
    switch (e->op) {
        case ExprNode::Sum: {
            if (e->args.empty())
                return "0";
            std::string s;
            for (auto& a : e->args) {
                if (!s.empty())
                    s += " + ";
                s += expr_string(a);
            }
            return s;
        }
        case ExprNode::Tensor: {
            std::string s;
            for (auto& a : e->args) {
                if (!s.empty())
                    s += " (x) ";
                bool paren = a->op == ExprNode::Sum;
                s += paren ? "(" + expr_string(a) + ")" : expr_string(a);
            }
            return s.empty() ? "1" : s;
        }
        case ExprNode::Shift:
            return "S[" + std::to_string(e->ds) + "," + std::to_string(e->dt) + "](" +
                   expr_string(e->args[0]) + ")";
        case ExprNode::LeafE: return "E(" + e->name + ")";
        case ExprNode::LeafP: return "P(" + e->name + ")";
        case ExprNode::LeafPh:
            return "P_" + std::to_string(e->h) + "(" + e->name + ")";
        case ExprNode::LeafPl: return "P(" + e->name + "^{+-1})";
        case ExprNode::LeafGamma: return "Gamma(" + e->name + ")";
        case ExprNode::SpanL: {
            std::string s = "Fp{";
            for (size_t i = 0; i < e->span.size(); ++i) {
                if (i)
                    s += ", ";
                s += std::get<0>(e->span[i]);
            }
            return s + "}";
        }
        case ExprNode::SpanF:
            return "Fp{" + e->name + "^j : " + e->pred.str() + "}";
        case ExprNode::One: return "1";
    }
    return "?";
}

/* ---- evaluation -------------------------------------------------------- */

namespace {

struct ProdLeaf {
    GenKind kind;
    i64 s, t;
    int h = 0;
    bool has_pred = false;
    Pred pred;
};

struct Product {
    i64 ds = 0, dt = 0;
    std::vector<ProdLeaf> leaves;
};

void normalize(const Expr& e, std::vector<Product>& out, const Product& acc)
{
    switch (e->op) {
        case ExprNode::Sum:
            for (auto& a : e->args)
                normalize(a, out, acc);
            return;
        case ExprNode::Tensor: {
            std::vector<Product> cur = {acc};
            for (auto& a : e->args) {
                std::vector<Product> next;
                for (auto& c : cur) {
                    std::vector<Product> sub;
                    normalize(a, sub, c);
                    for (auto& s : sub)
                        next.push_back(std::move(s));
                }
                cur = std::move(next);
            }
            for (auto& c : cur)
                out.push_back(std::move(c));
            return;
        }
        case ExprNode::Shift: {
            Product a = acc;
            a.ds = checked_add(a.ds, e->ds);
            a.dt = checked_add(a.dt, e->dt);
            normalize(e->args[0], out, a);
            return;
        }
        case ExprNode::SpanL: {
            for (auto& [label, s, t] : e->span) {
                Product a = acc;
                (void)label;
                a.ds = checked_add(a.ds, s);
                a.dt = checked_add(a.dt, t);
                out.push_back(std::move(a));
            }
            return;
        }
        case ExprNode::SpanF: {
            Product a = acc;
            a.ds = checked_add(a.ds, e->s);
            a.dt = checked_add(a.dt, e->t);
            ProdLeaf l{GenKind::Laurent, e->fs, e->ft, 0, true, e->pred};
            a.leaves.push_back(l);
            out.push_back(std::move(a));
            return;
        }
        case ExprNode::One:
            out.push_back(acc);
            return;
        case ExprNode::LeafE:
        case ExprNode::LeafP:
        case ExprNode::LeafPh:
        case ExprNode::LeafPl:
        case ExprNode::LeafGamma: {
            Product a = acc;
            GenKind k = e->op == ExprNode::LeafE    ? GenKind::Exterior
                        : e->op == ExprNode::LeafP  ? GenKind::Polynomial
                        : e->op == ExprNode::LeafPh ? GenKind::Truncated
                        : e->op == ExprNode::LeafPl ? GenKind::Laurent
                                                    : GenKind::DividedPower;
            a.leaves.push_back(ProdLeaf{k, e->s, e->t, e->h, false, Pred::all()});
            out.push_back(std::move(a));
            return;
        }
    }
}

void eval_product(const Product& pr, const Window& w, const Prime& p,
                  std::map<std::pair<i64, i64>, i64>& acc)
{
    Window inner{w.smin - pr.ds, w.smax - pr.ds, w.tmin - pr.dt, w.tmax - pr.dt};
    if (pr.leaves.empty()) {
        if (inner.contains(0, 0))
            acc[{pr.ds, pr.dt}] += 1;
        return;
    }
    std::vector<GeneratorSpec> gens;
    std::vector<std::pair<int, Pred>> preds;
    int id = 0;
    for (const auto& l : pr.leaves) {
        if (l.kind == GenKind::Truncated && l.h == 0)
            return; /* P_0 = 0: the whole product vanishes */
        if (l.kind == GenKind::Truncated && l.h == 1)
            continue; /* P_1 = Fp: the factor is trivial */
        GeneratorSpec g;
        g.name = "x" + std::to_string(id++);
        g.s = l.s;
        g.t = l.t;
        g.kind = l.kind;
        g.height = l.h;
        if (l.kind == GenKind::Exterior && !g.odd()) {
            /* formula-level spans sometimes carry even "exterior" markers in
             * total grading; model height-2 truncation instead */
            g.kind = GenKind::Truncated;
            g.height = 2;
        }
        if (l.kind != GenKind::Exterior && l.kind != GenKind::DividedPower && g.odd()) {
            if (l.kind == GenKind::Truncated || l.kind == GenKind::Polynomial ||
                l.kind == GenKind::Laurent)
                throw CalcError("polynomial-type expression leaf with odd degree");
        }
        if (l.has_pred)
            preds.push_back({static_cast<int>(gens.size()), l.pred});
        gens.push_back(g);
    }
    gens = expand_divided_powers(p, gens, std::max<i64>(inner.tmax, 0));
    Presentation pres(p, std::move(gens));
    BasisTable tab(pres, inner);
    for (uint32_t i = 0; i < tab.size(); ++i) {
        const Monomial& m = tab.mono(i);
        bool ok = true;
        for (auto& [gi, pd] : preds)
            if (!pd.eval(m.e[gi], p)) {
                ok = false;
                break;
            }
        if (!ok)
            continue;
        auto [s, t] = tab.bidegree_of(i);
        acc[{s + pr.ds, t + pr.dt}] += 1;
    }
}

void check_total_only(const Expr& e)
{
    switch (e->op) {
        case ExprNode::Sum:
        case ExprNode::Tensor:
            for (auto& a : e->args)
                check_total_only(a);
            return;
        case ExprNode::Shift:
            if (e->ds != 0)
                throw CalcError("series_total: expression carries filtration shifts");
            check_total_only(e->args[0]);
            return;
        case ExprNode::SpanL:
            for (auto& [l, s, t] : e->span)
                if (s != 0)
                    throw CalcError("series_total: bigraded span in total-graded query");
            return;
        case ExprNode::SpanF:
            if (e->fs != 0 || e->s != 0)
                throw CalcError("series_total: bigraded family in total-graded query");
            return;
        default:
            if (e->s != 0 && e->op != ExprNode::One)
                throw CalcError("series_total: bigraded leaf in total-graded query");
            return;
    }
}

}  // namespace

std::map<std::pair<i64, i64>, i64> series_bigraded(const Expr& e, const Window& w, const Prime& p)
{
    std::vector<Product> prods;
    normalize(e, prods, Product{});
    std::map<std::pair<i64, i64>, i64> acc;
    for (auto& pr : prods)
        eval_product(pr, w, p, acc);
    return acc;
}

PoincareSeries series_total(const Expr& e, i64 lo, i64 hi, const Prime& p)
{
    if (lo > hi)
        throw CalcError("series_total: empty range");
    check_total_only(e);
    auto big = series_bigraded(e, Window{0, 0, lo, hi}, p);
    PoincareSeries s;
    s.lo = lo;
    s.hi = hi;
    for (auto& [st, d] : big)
        if (d != 0)
            s.coeff[st.second] += d;
    return s;
}

EqualVerdict equal_in_window(const Expr& a, const Expr& b, i64 lo, i64 hi, const Prime& p)
{
    PoincareSeries sa = series_total(a, lo, hi, p);
    PoincareSeries sb = series_total(b, lo, hi, p);
    for (i64 n = lo; n <= hi; ++n)
        if (sa.at(n) != sb.at(n))
            return {false, n, sa.at(n), sb.at(n)};
    return {};
}

FreeRankCert free_rank_certificate(const Expr& e, i64 period, i64 lo, i64 hi, const Prime& p)
{
    if (period <= 0)
        throw CalcError("free_rank_certificate: need positive period");
    if (hi - lo + 1 < 2 * period)
        throw CalcError("free_rank_certificate: range too small to certify (needs two periods)");
    PoincareSeries s = series_total(e, lo, hi, p);
    FreeRankCert c;
    i64 last_violation = lo - 1;
    for (i64 n = lo + period; n <= hi; ++n)
        if (s.at(n) != s.at(n - period))
            last_violation = n;
    i64 from = last_violation + 1;
    if (hi - from + 1 < period) {
        c.periodic = false;
        c.first_violation = last_violation;
        return c;
    }
    c.periodic = true;
    c.certified_from = from;
    for (i64 n = from; n < from + period; ++n) {
        c.rank += s.at(n);
        c.euler += (((n % 2) + 2) % 2 == 0) ? s.at(n) : -s.at(n);
    }
    /* minimal generator lift: new basis elements not explained one period below */
    for (i64 n = lo; n < from + period; ++n) {
        i64 prev = n - period < lo ? 0 : s.at(n - period);
        i64 d = s.at(n) - prev;
        if (d < 0) {
            c.periodic = false;
            c.first_violation = n;
            return c;
        }
        for (i64 j = 0; j < d; ++j)
            c.generator_degrees.insert(n);
    }
    if (static_cast<i64>(c.generator_degrees.size()) != c.rank)
        throw CalcError("free_rank_certificate: generator count disagrees with rank");
    return c;
}

LesResult les_consistency(const Expr& A, const Expr& B, const Expr& C, i64 lo, i64 hi,
                          const Prime& p)
{
    /* ranks are solved upward: the seed rank of the connecting map at the
     * bottom is 0, so `lo` must sit below the support of all three terms */
    PoincareSeries sa = series_total(A, lo, hi, p);
    PoincareSeries sb = series_total(B, lo, hi, p);
    PoincareSeries sc = series_total(C, lo, hi, p);
    LesResult r;
    i64 del = 0; /* rank of the connecting map C_n -> A_{n-1} */
    for (i64 n = lo; n <= hi; ++n) {
        i64 rg = sc.at(n) - del;      /* exactness at C_n */
        i64 rf = sb.at(n) - rg;       /* exactness at B_n */
        i64 del_next = sa.at(n) - rf; /* exactness at A_n */
        if (rg < 0 || rf < 0 || del_next < 0)
            return {false, n, r.boundary_rank};
        r.boundary_rank[n] = del;
        del = del_next;
    }
    return r;
}

PoincareSeries cofiber_series(const Expr& A, const Expr& B, const CofiberMap& f, i64 lo, i64 hi,
                              const Prime& p)
{
    PoincareSeries sa = series_total(A, lo - 1, hi, p);
    PoincareSeries sb = series_total(B, lo - 1, hi, p);
    PoincareSeries rank;
    rank.lo = lo - 1;
    rank.hi = hi;
    PoincareSeries cover; /* all declared source families together */
    cover.lo = lo - 1;
    cover.hi = hi;
    for (auto& [src, img] : f.images) {
        PoincareSeries ss = series_total(src, lo - 1, hi, p);
        PoincareSeries si = series_total(img, lo - 1, hi, p);
        for (i64 n = lo - 1; n <= hi; ++n) {
            if (ss.at(n) != si.at(n))
                throw CalcError("cofiber_series: map_spec degree mismatch at degree " +
                                std::to_string(n));
            rank.coeff[n] += ss.at(n);
            cover.coeff[n] += ss.at(n);
        }
    }
    for (auto& ker : f.kernel_families) {
        PoincareSeries ss = series_total(ker, lo - 1, hi, p);
        for (i64 n = lo - 1; n <= hi; ++n)
            cover.coeff[n] += ss.at(n);
    }
    for (i64 n = lo - 1; n <= hi; ++n) {
        if (cover.at(n) != sa.at(n))
            throw CalcError("cofiber_series: map families do not cover the source at degree " +
                            std::to_string(n));
        if (rank.at(n) > sb.at(n))
            throw CalcError("cofiber_series: rank exceeds target at degree " + std::to_string(n));
    }
    PoincareSeries c;
    c.lo = lo;
    c.hi = hi;
    for (i64 n = lo; n <= hi; ++n) {
        i64 v = sb.at(n) - rank.at(n) + sa.at(n - 1) - rank.at(n - 1);
        if (v < 0)
            throw CalcError("cofiber_series: negative dimension at degree " + std::to_string(n));
        if (v != 0)
            c.coeff[n] = v;
    }
    return c;
}

}  // namespace v1ss
