#include "v1ss/engine.hpp"

#include <algorithm>
#include <set>

namespace v1ss {

std::vector<i64> Scenario::rule_pages() const
{
    std::set<i64> pages;
    for (const auto& r : rules)
        pages.insert(r.page);
    return std::vector<i64>(pages.begin(), pages.end());
}

bool RunResult::all_pass() const
{
    if (!d_squared_ok)
        return false;
    for (const auto& c : checkpoint_reports)
        if (!c.pass)
            return false;
    for (const auto& e : euler_checks)
        if (!e.pass)
            return false;
    return true;
}

std::vector<CompiledRule> compile_rules(const Presentation& P, const std::vector<DiffRule>& rules)
{
    std::vector<CompiledRule> out;
    for (const auto& r : rules) {
        CompiledRule c;
        c.src = &r;
        c.page = r.page;
        c.mode = r.mode;
        if (r.page < 2)
            throw CalcError("differential rule with page < 2");
        if (r.mode == DiffRule::Generator) {
            c.gen = P.require_gen(r.source_gen);
            Element t;
            for (const auto& tg : r.targets) {
                if (!tg.fixed.empty() || true) {
                    Monomial m = P.monomial(tg.fixed);
                    t = add(P, t, element_of(P, m, tg.coeff));
                }
            }
            c.gen_target = std::move(t);
        } else {
            for (auto& [g, e] : r.src_fixed)
                c.fixed.push_back({P.require_gen(g), e});
            if (!r.free_gen.empty())
                c.free_gen = P.require_gen(r.free_gen);
            c.src_offset = r.src_offset;
            c.pred = r.pred;
            for (const auto& tg : r.targets) {
                CompiledRule::Tgt t;
                t.coeff = tg.coeff;
                t.free_offset = tg.free_offset;
                for (auto& [g, e] : tg.fixed)
                    t.fixed.push_back({P.require_gen(g), e});
                c.targets.push_back(std::move(t));
            }
        }
        out.push_back(std::move(c));
    }
    return out;
}

void validate_rule_bidegrees(const Presentation& P, const std::vector<DiffRule>& rules)
{
    auto cs = compile_rules(P, rules);
    for (const auto& c : cs) {
        i64 r = c.page;
        if (c.mode == DiffRule::Generator) {
            const auto& g = P.gen(c.gen);
            for (const auto& t : c.gen_target.terms) {
                auto [ts, ttt] = P.degree(t.m);
                if (ts - g.s != -r || ttt - g.t != r - 1)
                    throw CalcError("rule bidegree mismatch on generator " + g.name);
            }
        } else {
            i64 ss = 0, st = 0;
            for (auto& [gi, e] : c.fixed) {
                ss += e * P.gen(gi).s;
                st += e * P.gen(gi).t;
            }
            if (c.free_gen >= 0) {
                ss += c.src_offset * P.gen(c.free_gen).s;
                st += c.src_offset * P.gen(c.free_gen).t;
            }
            for (const auto& t : c.targets) {
                i64 ts = 0, tt = 0;
                for (auto& [gi, e] : t.fixed) {
                    ts += e * P.gen(gi).s;
                    tt += e * P.gen(gi).t;
                }
                if (c.free_gen >= 0) {
                    ts += t.free_offset * P.gen(c.free_gen).s;
                    tt += t.free_offset * P.gen(c.free_gen).t;
                }
                if (ts - ss != -r || tt - st != r - 1)
                    throw CalcError("family rule bidegree mismatch (page " + std::to_string(r) +
                                    ")");
            }
        }
    }
}

Element extend_differential(const Presentation& P, const std::vector<CompiledRule>& rules,
                            i64 page, const Monomial& m)
{
    Element res;
    int n = P.ngens();
    for (const auto& rule : rules) {
        if (rule.page != page)
            continue;
        if (rule.mode == DiffRule::Generator) {
            int g = rule.gen;
            if (m.e[g] == 0)
                continue;
            i64 mult = fp_norm(m.e[g], P.p());
            if (mult == 0)
                continue;
            /* sign: d moves past the factors before the g-block */
            i64 parity = 0;
            for (int j = 0; j < g; ++j)
                if (P.gen(j).odd())
                    parity += m.e[j];
            i64 sign = parity % 2 == 0 ? 1 : P.p().p - 1;
            Expo left(n, 0), right(n, 0);
            for (int j = 0; j <= g; ++j)
                left[j] = m.e[j];
            left[g] = static_cast<int16_t>(m.e[g] - 1);
            for (int j = g + 1; j < n; ++j)
                right[j] = m.e[j];
            for (const auto& t : rule.gen_target.terms) {
                Element a = mono_mul(P, Monomial{left}, t.m);
                Element b;
                for (const auto& ta : a.terms) {
                    Element pr = mono_mul(P, ta.m, Monomial{right});
                    b = add(P, b, scale(P, std::move(pr), ta.c));
                }
                res = add(P, res, scale(P, std::move(b), fp_mul(fp_mul(t.c, mult, P.p()), sign, P.p())));
            }
        } else {
            /* family: fixed exponents peel off, the free generator's whole
             * exponent determines the family index */
            bool ok = true;
            Expo q = m.e;
            for (auto& [g, e] : rule.fixed) {
                if (m.e[g] < e) {
                    ok = false;
                    break;
                }
                q[g] = static_cast<int16_t>(q[g] - e);
            }
            if (!ok)
                continue;
            i64 i = 0;
            if (rule.free_gen >= 0) {
                i = static_cast<i64>(m.e[rule.free_gen]) - rule.src_offset;
                q[rule.free_gen] = 0;
            }
            if (!rule.pred.eval(i, P.p()))
                continue;
            for (const auto& t : rule.targets) {
                Expo te(n, 0);
                for (auto& [g, e] : t.fixed) {
                    i64 v = te[g] + e;
                    te[g] = static_cast<int16_t>(v);
                }
                if (rule.free_gen >= 0) {
                    i64 v = te[rule.free_gen] + i + t.free_offset;
                    if (v < INT16_MIN || v > INT16_MAX)
                        throw CalcError("family target exponent out of range");
                    te[rule.free_gen] = static_cast<int16_t>(v);
                }
                Element pr = mono_mul(P, Monomial{q}, Monomial{te});
                res = add(P, res, scale(P, std::move(pr), t.coeff));
            }
        }
    }
    return res;
}

Element extend_differential(const Presentation& P, const std::vector<DiffRule>& rules, i64 page,
                            const Monomial& m)
{
    return extend_differential(P, compile_rules(P, rules), page, m);
}

/* ---- engine ------------------------------------------------------------ */

namespace {

struct BucketState {
    RowSpace Z, B;
    BucketState(const Prime& p, int w) : Z(p, w), B(p, w) {}
};

struct SupportBox {
    /* finite bound or nullopt = unbounded in that direction */
    std::optional<i64> smin, smax, tmin, tmax;
};

SupportBox support_of(const Presentation& P)
{
    SupportBox b;
    i64 bs_min = 0, bs_max = 0, bt_min = 0, bt_max = 0;
    bool s_dn = false, s_up = false, t_dn = false, t_up = false;
    std::vector<bool> in_span(P.ngens(), false);
    for (const auto& c : P.constraints()) {
        i64 lo_s = 0, hi_s = 0, lo_t = 0, hi_t = 0;
        bool first = true;
        for (const auto& tup : c.allowed) {
            i64 s = 0, t = 0;
            for (size_t k = 0; k < c.gens.size(); ++k) {
                s += tup[k] * P.gen(c.gens[k]).s;
                t += tup[k] * P.gen(c.gens[k]).t;
            }
            if (first || s < lo_s) lo_s = s;
            if (first || s > hi_s) hi_s = s;
            if (first || t < lo_t) lo_t = t;
            if (first || t > hi_t) hi_t = t;
            first = false;
        }
        for (int gi : c.gens)
            in_span[gi] = true;
        bs_min += lo_s;
        bs_max += hi_s;
        bt_min += lo_t;
        bt_max += hi_t;
    }
    for (int i = 0; i < P.ngens(); ++i) {
        if (in_span[i])
            continue;
        const auto& g = P.gen(i);
        auto dir = [&](i64 ds, i64 dt) {
            if (ds < 0) s_dn = true;
            if (ds > 0) s_up = true;
            if (dt < 0) t_dn = true;
            if (dt > 0) t_up = true;
        };
        switch (g.kind) {
            case GenKind::Exterior:
                bs_min += std::min<i64>(0, g.s);
                bs_max += std::max<i64>(0, g.s);
                bt_min += std::min<i64>(0, g.t);
                bt_max += std::max<i64>(0, g.t);
                break;
            case GenKind::Truncated: {
                i64 h = g.height - 1;
                bs_min += std::min<i64>(0, h * g.s);
                bs_max += std::max<i64>(0, h * g.s);
                bt_min += std::min<i64>(0, h * g.t);
                bt_max += std::max<i64>(0, h * g.t);
                break;
            }
            case GenKind::Polynomial:
                dir(g.s, g.t);
                break;
            case GenKind::Laurent:
                dir(g.s, g.t);
                dir(-g.s, -g.t);
                break;
            case GenKind::DividedPower:
                throw CalcError("divided powers must be expanded before running");
        }
    }
    if (!s_dn) b.smin = bs_min;
    if (!s_up) b.smax = bs_max;
    if (!t_dn) b.tmin = bt_min;
    if (!t_up) b.tmax = bt_max;
    return b;
}

}  // namespace

SsEngine::SsEngine(const Scenario& sc) : sc_(sc), basis_(*sc.pres, sc.window)
{
    validate_rule_bidegrees(*sc_.pres, sc_.rules);
    rules_ = compile_rules(*sc_.pres, sc_.rules);
}

int SsEngine::e2_dim(i64 s, i64 t) const
{
    if (sc_.window.contains(s, t))
        return basis_.bucket_dim(s, t);
    if (!support_cached_) {
        SupportBox sup = support_of(*sc_.pres);
        sup_smin_ = sup.smin;
        sup_smax_ = sup.smax;
        sup_tmin_ = sup.tmin;
        sup_tmax_ = sup.tmax;
        support_cached_ = true;
    }
    if ((sup_smin_ && s < *sup_smin_) || (sup_smax_ && s > *sup_smax_) ||
        (sup_tmin_ && t < *sup_tmin_) || (sup_tmax_ && t > *sup_tmax_))
        return 0;
    auto it = outside_dim_.find({s, t});
    if (it != outside_dim_.end())
        return it->second;
    int d = static_cast<int>(enumerate_basis(*sc_.pres, s, t).size());
    outside_dim_[{s, t}] = d;
    return d;
}

RunResult SsEngine::run(bool check_d_squared)
{
    const Presentation& P = *sc_.pres;
    RunResult rr;

    std::map<std::pair<i64, i64>, BucketState> state;
    for (auto& bd : basis_.bidegrees()) {
        auto [a, b] = basis_.bucket(bd.first, bd.second);
        int w = static_cast<int>(b - a);
        BucketState st(P.p(), w);
        for (int i = 0; i < w; ++i) {
            std::vector<i64> row(w, 0);
            row[i] = 1;
            st.Z.add(std::move(row));
        }
        state.emplace(bd, std::move(st));
    }
    std::map<std::pair<i64, i64>, bool> trusted;
    for (auto& [bd, st] : state)
        trusted[bd] = true;

    auto snapshot = [&](i64 page, i64 fired) {
        PageSnapshot ps;
        ps.page = page;
        ps.fired_page = fired;
        for (auto& [bd, st] : state) {
            int d = st.Z.dim() - st.B.dim();
            if (d < 0)
                throw CalcError("negative page dimension (inconsistent rules)");
            if (d > 0)
                ps.dims[bd] = d;
            ps.trusted[bd] = trusted[bd];
        }
        rr.history.push_back(std::move(ps));
    };
    snapshot(2, 0);

    auto pages = sc_.rule_pages();
    for (i64 r : pages) {
        /* d o d = 0, asserted on every in-window monomial before homology */
        if (check_d_squared && rr.d_squared_ok) {
            for (uint32_t i = 0; i < basis_.size() && rr.d_squared_ok; ++i) {
                Element d1 = extend_differential(P, rules_, r, basis_.mono(i));
                Element d2;
                for (const auto& t : d1.terms)
                    d2 = add(P, d2,
                             scale(P, extend_differential(P, rules_, r, t.m), t.c));
                if (!d2.zero()) {
                    rr.d_squared_ok = false;
                    rr.d_squared_witness = "page " + std::to_string(r) + ", monomial " +
                                           P.mono_string(basis_.mono(i));
                }
            }
        }

        std::map<std::pair<i64, i64>, std::vector<std::vector<i64>>> inflow;
        std::map<std::pair<i64, i64>, std::vector<std::vector<i64>>> new_z;
        std::map<std::pair<i64, i64>, i64> rank_out;

        for (auto& [bd, st] : state) {
            auto [s, t] = bd;
            std::pair<i64, i64> tgt{s - r, t + r - 1};
            auto [a0, b0] = basis_.bucket(s, t);
            int w = static_cast<int>(b0 - a0);
            if (st.Z.dim() == 0) {
                rank_out[bd] = 0;
                continue;
            }
            bool tgt_in = sc_.window.contains(tgt.first, tgt.second);
            auto tgt_it = state.find(tgt);
            int tw = 0;
            uint32_t ta = 0;
            if (tgt_in && tgt_it != state.end()) {
                auto [x, y] = basis_.bucket(tgt.first, tgt.second);
                ta = x;
                tw = static_cast<int>(y - x);
            }
            /* differential of each basis monomial of this bucket */
            std::vector<Element> dmono(w);
            bool any = false;
            for (int i = 0; i < w; ++i) {
                dmono[i] = extend_differential(P, rules_, r, basis_.mono(a0 + i));
                if (!dmono[i].zero())
                    any = true;
            }
            if (!any) {
                rank_out[bd] = 0;
                for (auto& row : st.Z.rows())
                    new_z[bd].push_back(row);
                continue;
            }
            bool escape = false;
            std::vector<std::vector<i64>> images; /* in tgt coordinates */
            for (auto& zrow : st.Z.rows()) {
                std::vector<i64> img(std::max(tw, 1), 0);
                for (int i = 0; i < w; ++i) {
                    if (zrow[i] == 0 || dmono[i].zero())
                        continue;
                    for (const auto& term : dmono[i].terms) {
                        auto gi = basis_.index_of(term.m);
                        if (!gi) {
                            escape = true;
                            continue;
                        }
                        if (tw == 0)
                            throw CalcError("differential image outside its target bucket");
                        int local = static_cast<int>(*gi - ta);
                        img[local] = fp_add(img[local], fp_mul(zrow[i], term.c, P.p()), P.p());
                    }
                }
                images.push_back(std::move(img));
            }
            if (escape || !tgt_in) {
                /* cannot evaluate the kill test; these bidegrees are
                 * untrusted by the window rule */
                rank_out[bd] = 0;
                for (auto& row : st.Z.rows())
                    new_z[bd].push_back(row);
                continue;
            }
            /* kill test: kernel of (Z -> E^r_target) i.e. of images mod B(tgt) */
            int zd = st.Z.dim();
            std::vector<std::vector<i64>> residuals;
            const RowSpace* tb = tgt_it != state.end() ? &tgt_it->second.B : nullptr;
            for (auto& img : images) {
                if (tw == 0) {
                    residuals.push_back({});
                    continue;
                }
                residuals.push_back(tb ? tb->reduce(img) : img);
            }
            FpMatrix M(tw == 0 ? 1 : tw, zd); /* columns = z-rows */
            for (int j = 0; j < zd; ++j)
                for (int i = 0; i < tw; ++i)
                    M.at(i, j) = residuals[j].empty() ? 0 : residuals[j][i];
            auto kern = kernel_basis(M, P.p());
            rank_out[bd] = zd - static_cast<i64>(kern.size());
            for (auto& c : kern) {
                std::vector<i64> v(w, 0);
                for (int j = 0; j < zd; ++j) {
                    if (c[j] == 0)
                        continue;
                    const auto& zr = st.Z.rows()[j];
                    for (int i = 0; i < w; ++i)
                        v[i] = fp_add(v[i], fp_mul(c[j], zr[i], P.p()), P.p());
                }
                new_z[bd].push_back(std::move(v));
            }
            if (tw > 0)
                for (auto& img : images)
                    inflow[tgt].push_back(std::move(img));
        }

        /* commit */
        for (auto& [bd, st] : state) {
            auto it = new_z.find(bd);
            RowSpace z(P.p(), st.Z.width());
            if (it != new_z.end())
                for (auto& row : it->second)
                    z.add(row);
            for (auto& row : st.B.rows())
                z.add(row);
            st.Z = std::move(z);
        }
        for (auto& [bd, rows] : inflow) {
            auto it = state.find(bd);
            for (auto& row : rows) {
                it->second.B.add(row);
                it->second.Z.add(row);
            }
        }
        /* trust: both partners of every fired page must be in-window or
         * structurally empty */
        for (auto& [bd, tr] : trusted) {
            if (!tr)
                continue;
            auto [s, t] = bd;
            std::pair<i64, i64> out{s - r, t + r - 1}, in{s + r, t - r + 1};
            for (auto& pr : {out, in})
                if (!sc_.window.contains(pr.first, pr.second) && e2_dim(pr.first, pr.second) > 0)
                    tr = false;
        }
        snapshot(r + 1, r);

        /* windowed Euler characteristic across the turn, with boundary flux */
        {
            const PageSnapshot& prev = rr.history[rr.history.size() - 2];
            const PageSnapshot& cur = rr.history.back();
            std::map<i64, i64> dim_prev, dim_cur, rank_diag;
            std::map<i64, bool> diag_ok;
            for (auto& [bd, st] : state) {
                i64 n = bd.first + bd.second;
                if (!diag_ok.count(n))
                    diag_ok[n] = true;
                if (!cur.is_trusted(bd.first, bd.second))
                    diag_ok[n] = false;
            }
            for (auto& [bd, d] : prev.dims)
                dim_prev[bd.first + bd.second] += d;
            for (auto& [bd, d] : cur.dims)
                dim_cur[bd.first + bd.second] += d;
            for (auto& [bd, rk] : rank_out)
                rank_diag[bd.first + bd.second] += rk;
            /* maximal runs of trusted diagonals [a-1, b+1] */
            std::vector<i64> diags;
            for (auto& [n, ok] : diag_ok)
                if (ok)
                    diags.push_back(n);
            size_t i = 0;
            while (i < diags.size()) {
                size_t j = i;
                while (j + 1 < diags.size() && diags[j + 1] == diags[j] + 1)
                    ++j;
                if (j - i >= 2) {
                    i64 a = diags[i] + 1, b = diags[j] - 1;
                    auto sgn = [](i64 n) { return ((n % 2) + 2) % 2 == 0 ? 1 : -1; };
                    i64 chi_prev = 0, chi_cur = 0;
                    for (i64 n = a; n <= b; ++n) {
                        chi_prev += sgn(n) * (dim_prev.count(n) ? dim_prev[n] : 0);
                        chi_cur += sgn(n) * (dim_cur.count(n) ? dim_cur[n] : 0);
                    }
                    i64 flux = sgn(a) * (rank_diag.count(a) ? rank_diag[a] : 0) +
                               sgn(b) * (rank_diag.count(b + 1) ? rank_diag[b + 1] : 0);
                    rr.euler_checks.push_back({r, a, b, chi_cur == chi_prev - flux});
                }
                i = j + 1;
            }
        }
    }

    final_state_.clear();
    for (auto& [bd, st] : state) {
        FinalBucket fb;
        fb.z_rows = st.Z.rows();
        fb.b_rows = st.B.rows();
        final_state_.emplace(bd, std::move(fb));
    }

    for (const auto& ck : sc_.checkpoints) {
        const PageSnapshot* snap = nullptr;
        for (const auto& h : rr.history)
            if (h.fired_page == ck.after_page)
                snap = &h;
        /* if nothing fires at or after the requested page the sequence has
         * collapsed there: compare against the stabilized page */
        if (!snap && (pages.empty() || ck.after_page >= pages.back()))
            snap = &rr.history.back();
        if (!snap)
            throw CalcError("checkpoint after page " + std::to_string(ck.after_page) +
                            " does not match any fired page");
        rr.checkpoint_reports.push_back(compare_with_expression(
            *snap, ck.expected, ck.even_columns_only, ck.label, ck.restrict_to));
    }
    return rr;
}

std::vector<Element> SsEngine::page_representatives(i64 s, i64 t) const
{
    std::vector<Element> reps;
    auto it = final_state_.find({s, t});
    if (it == final_state_.end())
        return reps;
    const Prime& p = sc_.pres->p();
    auto [a, b] = basis_.bucket(s, t);
    int w = static_cast<int>(b - a);
    RowSpace bsp(p, w);
    for (const auto& row : it->second.b_rows)
        bsp.add(row);
    RowSpace seen(p, w);
    for (const auto& row : it->second.b_rows)
        seen.add(row);
    for (const auto& z : it->second.z_rows) {
        auto res = seen.reduce(z);
        bool nonzero = false;
        for (i64 v : res)
            if (v)
                nonzero = true;
        if (!nonzero)
            continue;
        seen.add(z);
        Element e;
        for (int i = 0; i < w; ++i)
            if (res[i])
                e.terms.push_back(Term{basis_.mono(a + i), res[i]});
        reps.push_back(std::move(e));
    }
    return reps;
}

namespace {
bool element_in_span(const BasisTable& basis, const Prime& p,
                     const std::vector<std::vector<i64>>& rows, i64 s, i64 t, const Element& e)
{
    if (e.zero())
        return true;
    auto [a, b] = basis.bucket(s, t);
    int w = static_cast<int>(b - a);
    if (w == 0)
        return false;
    RowSpace span(p, w);
    for (const auto& r : rows)
        span.add(r);
    std::vector<i64> v(w, 0);
    for (const auto& tm : e.terms) {
        auto gi = basis.index_of(tm.m);
        if (!gi)
            return false;
        auto [ts, tt] = basis.bidegree_of(*gi);
        if (ts != s || tt != t)
            return false;
        v[*gi - a] = tm.c;
    }
    return span.contains(v);
}
}  // namespace

bool SsEngine::in_stabilized_cycles(i64 s, i64 t, const Element& e) const
{
    auto it = final_state_.find({s, t});
    if (it == final_state_.end())
        return e.zero();
    return element_in_span(basis_, sc_.pres->p(), it->second.z_rows, s, t, e);
}

bool SsEngine::in_stabilized_boundaries(i64 s, i64 t, const Element& e) const
{
    auto it = final_state_.find({s, t});
    if (it == final_state_.end())
        return e.zero();
    return element_in_span(basis_, sc_.pres->p(), it->second.b_rows, s, t, e);
}

CompareReport SsEngine::compare_with_expression(const PageSnapshot& page, const Expr& expr,
                                                bool even_columns_only, const std::string& label,
                                                const std::optional<Window>& restrict_to) const
{
    CompareReport rep;
    rep.label = label;
    rep.page = page.page;
    auto want = series_bigraded(expr, sc_.window, sc_.pres->p());
    std::set<std::pair<i64, i64>> keys;
    for (auto& [bd, d] : page.dims)
        keys.insert(bd);
    for (auto& [bd, d] : want)
        if (d != 0)
            keys.insert(bd);
    for (auto& bd : keys) {
        if (even_columns_only && ((bd.first % 2) + 2) % 2 != 0)
            continue;
        if (restrict_to && !restrict_to->contains(bd.first, bd.second))
            continue;
        int got = page.dim(bd.first, bd.second);
        auto it = want.find(bd);
        int w = it == want.end() ? 0 : static_cast<int>(it->second);
        bool tr = page.trusted.count(bd) ? page.trusted.at(bd) : true;
        if (!tr) {
            ++rep.untrusted_excluded;
            continue;
        }
        ++rep.compared;
        if (got != w) {
            ++rep.total_mismatches;
            if (rep.mismatches.size() < 32)
                rep.mismatches.push_back({bd.first, bd.second, got, w});
            rep.pass = false;
        }
    }
    return rep;
}

}  // namespace v1ss
