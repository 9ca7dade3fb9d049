#include "v1ss/algebra.hpp"

#include <algorithm>
#include <array>
#include <numeric>

namespace v1ss {

const char* kind_name(GenKind k)
{
    switch (k) {
        case GenKind::Exterior: return "exterior";
        case GenKind::Polynomial: return "polynomial";
        case GenKind::Truncated: return "truncated";
        case GenKind::Laurent: return "laurent";
        case GenKind::DividedPower: return "divided_power";
    }
    return "?";
}

std::optional<GenKind> kind_from_name(const std::string& s)
{
    if (s == "exterior") return GenKind::Exterior;
    if (s == "polynomial") return GenKind::Polynomial;
    if (s == "truncated") return GenKind::Truncated;
    if (s == "laurent") return GenKind::Laurent;
    if (s == "divided_power") return GenKind::DividedPower;
    return std::nullopt;
}

Presentation::Presentation(Prime p, std::vector<GeneratorSpec> gens,
                           std::vector<SpanConstraint> constraints)
    : p_(p), gens_(std::move(gens)), constraints_(std::move(constraints))
{
    for (int i = 0; i < ngens(); ++i) {
        const auto& g = gens_[i];
        if (g.name.empty())
            throw CalcError("generator with empty name");
        if (!by_name_.emplace(g.name, i).second)
            throw CalcError("duplicate generator name: " + g.name);
        bool odd = g.odd();
        if (g.kind == GenKind::Exterior && !odd)
            throw CalcError("exterior generator " + g.name + " has even total degree");
        if (g.kind != GenKind::Exterior && g.kind != GenKind::DividedPower && odd)
            throw CalcError("non-exterior generator " + g.name + " has odd total degree");
        if (g.kind == GenKind::Truncated && g.height < 2)
            throw CalcError("truncated generator " + g.name + " needs height >= 2");
        if (g.s == 0 && g.t == 0 &&
            (g.kind == GenKind::Polynomial || g.kind == GenKind::Laurent))
            throw CalcError("generator " + g.name + " of bidegree (0,0) in an infinite direction");
    }
    constraint_of_gen_.assign(gens_.size(), -1);
    for (size_t ci = 0; ci < constraints_.size(); ++ci) {
        auto& c = constraints_[ci];
        std::sort(c.allowed.begin(), c.allowed.end());
        for (int gi : c.gens) {
            if (gi < 0 || gi >= ngens())
                throw CalcError("span constraint references unknown generator");
            if (constraint_of_gen_[gi] != -1)
                throw CalcError("generator in two span constraints: " + gens_[gi].name);
            constraint_of_gen_[gi] = static_cast<int>(ci);
        }
        for (auto& tup : c.allowed)
            if (tup.size() != c.gens.size())
                throw CalcError("span constraint tuple arity mismatch");
    }
    check_window_finite();
}

int Presentation::gen_index(const std::string& name) const
{
    auto it = by_name_.find(name);
    return it == by_name_.end() ? -1 : it->second;
}

int Presentation::require_gen(const std::string& name) const
{
    int i = gen_index(name);
    if (i < 0)
        throw CalcError("unknown generator: " + name);
    return i;
}

Monomial Presentation::monomial(const std::vector<std::pair<std::string, i64>>& exps) const
{
    Monomial m = unit();
    for (auto& [name, e] : exps) {
        int i = require_gen(name);
        i64 v = checked_add(m.e[i], e);
        if (v < INT16_MIN || v > INT16_MAX)
            throw CalcError("exponent out of range for " + name);
        m.e[i] = static_cast<int16_t>(v);
    }
    if (!exponents_valid(m.e))
        throw CalcError("invalid exponents in monomial");
    return m;
}

std::pair<i64, i64> Presentation::degree(const Monomial& m) const
{
    i64 s = 0, t = 0;
    for (int i = 0; i < ngens(); ++i) {
        if (m.e[i] == 0)
            continue;
        s = checked_add(s, checked_mul(m.e[i], gens_[i].s));
        t = checked_add(t, checked_mul(m.e[i], gens_[i].t));
    }
    return {s, t};
}

bool Presentation::mono_odd(const Monomial& m) const
{
    auto [s, t] = degree(m);
    return ((s + t) % 2 + 2) % 2 == 1;
}

bool Presentation::exponents_valid(const Expo& e) const
{
    if (static_cast<int>(e.size()) != ngens())
        return false;
    for (int i = 0; i < ngens(); ++i) {
        const auto& g = gens_[i];
        switch (g.kind) {
            case GenKind::Exterior:
                if (e[i] < 0 || e[i] > 1) return false;
                break;
            case GenKind::Truncated:
                if (e[i] < 0 || e[i] >= g.height) return false;
                break;
            case GenKind::Polynomial:
                if (e[i] < 0) return false;
                break;
            case GenKind::Laurent:
                break;
            case GenKind::DividedPower:
                return false; /* must be expanded into surrogates first */
        }
    }
    return true;
}

bool Presentation::span_allowed(const Expo& e) const
{
    for (const auto& c : constraints_) {
        std::vector<int> tup(c.gens.size());
        for (size_t k = 0; k < c.gens.size(); ++k)
            tup[k] = e[c.gens[k]];
        if (!std::binary_search(c.allowed.begin(), c.allowed.end(), tup))
            return false;
    }
    return true;
}

void Presentation::check_window_finite() const
{
    /* variables: exponents of polynomial (>=0) and laurent (any sign) gens;
     * reject if a nonzero admissible combination has bidegree (0,0) */
    std::vector<int> vars;
    for (int i = 0; i < ngens(); ++i)
        if (gens_[i].kind == GenKind::Polynomial || gens_[i].kind == GenKind::Laurent)
            vars.push_back(i);
    int k = static_cast<int>(vars.size());
    if (k == 0)
        return;
    /* rational kernel of the 2 x k bidegree matrix via integer elimination */
    std::vector<std::array<i64, 2>> col(k);
    for (int j = 0; j < k; ++j)
        col[j] = {gens_[vars[j]].s, gens_[vars[j]].t};

    auto admissible = [&](const std::vector<i64>& v) {
        bool nonzero = false;
        for (int j = 0; j < k; ++j) {
            if (v[j] != 0)
                nonzero = true;
            if (gens_[vars[j]].kind == GenKind::Polynomial && v[j] < 0)
                return false;
        }
        return nonzero;
    };

    /* kernel basis over Q, scaled to integers */
    std::vector<std::vector<i64>> kern;
    {
        /* row-reduce the 2 x k matrix over Q using exact i64 fractions kept
         * integral by cross-multiplication; k is tiny */
        std::vector<std::vector<i64>> m(2, std::vector<i64>(k));
        for (int j = 0; j < k; ++j) {
            m[0][j] = col[j][0];
            m[1][j] = col[j][1];
        }
        std::vector<int> piv_col;
        int row = 0;
        for (int c = 0; c < k && row < 2; ++c) {
            int pr = -1;
            for (int r = row; r < 2; ++r)
                if (m[r][c] != 0) { pr = r; break; }
            if (pr < 0)
                continue;
            std::swap(m[pr], m[row]);
            for (int r = 0; r < 2; ++r) {
                if (r == row || m[r][c] == 0)
                    continue;
                i64 a = m[row][c], b = m[r][c];
                for (int cc = 0; cc < k; ++cc)
                    m[r][cc] = checked_sub(checked_mul(m[r][cc], a), checked_mul(m[row][cc], b));
            }
            piv_col.push_back(c);
            ++row;
        }
        std::vector<bool> is_piv(k, false);
        for (int c : piv_col)
            is_piv[c] = true;
        for (int fc = 0; fc < k; ++fc) {
            if (is_piv[fc])
                continue;
            std::vector<i64> v(k, 0);
            /* v[fc] = prod of pivot entries; back-substitute integrally */
            i64 scale = 1;
            for (size_t r = 0; r < piv_col.size(); ++r)
                scale = checked_mul(scale, m[r][piv_col[r]]);
            if (scale == 0)
                scale = 1;
            v[fc] = scale < 0 ? -scale : scale;
            for (size_t r = 0; r < piv_col.size(); ++r) {
                i64 pe = m[r][piv_col[r]];
                v[piv_col[r]] = -checked_mul(m[r][fc], v[fc]) / pe;
            }
            i64 g = 0;
            for (i64 x : v)
                g = std::gcd(g, x < 0 ? -x : x);
            if (g > 1)
                for (auto& x : v)
                    x /= g;
            kern.push_back(std::move(v));
        }
    }
    if (kern.empty())
        return;
    if (kern.size() == 1) {
        auto v = kern[0];
        auto neg = v;
        for (auto& x : neg)
            x = -x;
        if (admissible(v) || admissible(neg))
            throw CalcError("presentation is not window-finite (degree-(0,0) exponent combination)");
        return;
    }
    /* small search over integer combinations of kernel vectors */
    for (i64 a = -6; a <= 6; ++a)
        for (i64 b = -6; b <= 6; ++b) {
            if (a == 0 && b == 0)
                continue;
            std::vector<i64> v(k, 0);
            for (int j = 0; j < k; ++j)
                v[j] = a * kern[0][j] + b * kern[1][j];
            if (admissible(v))
                throw CalcError("presentation is not window-finite (degree-(0,0) exponent combination)");
        }
}

std::string Presentation::mono_string(const Monomial& m) const
{
    std::string s;
    for (int i = 0; i < ngens(); ++i) {
        if (m.e[i] == 0)
            continue;
        if (!s.empty())
            s += " ";
        s += gens_[i].name;
        if (m.e[i] != 1) {
            s += "^";
            s += std::to_string(m.e[i]);
        }
    }
    return s.empty() ? "1" : s;
}

Element mono_mul(const Presentation& P, const Monomial& a, const Monomial& b)
{
    int n = P.ngens();
    Expo e(n);
    for (int i = 0; i < n; ++i) {
        i64 v = static_cast<i64>(a.e[i]) + b.e[i];
        if (v < INT16_MIN || v > INT16_MAX)
            throw CalcError("exponent overflow in product");
        e[i] = static_cast<int16_t>(v);
    }
    if (!P.exponents_valid(e) || !P.span_allowed(e))
        return Element{};
    for (int i = 0; i < n; ++i)
        if (P.gen(i).annihilated && e[i] > 0)
            return Element{};
    /* Koszul sign: move each b-factor left past the a-factors that follow it */
    i64 parity = 0;
    i64 odd_tail = 0; /* odd a-exponents with index > current j */
    for (int j = n - 1; j >= 0; --j) {
        if (P.gen(j).odd()) {
            parity += static_cast<i64>(b.e[j]) * odd_tail;
            odd_tail += a.e[j];
        }
    }
    i64 c = (parity % 2 == 0) ? 1 : P.p().p - 1;
    return Element{{Term{Monomial{std::move(e)}, c}}};
}

Element element_of(const Presentation& P, const Monomial& m, i64 c)
{
    c = fp_norm(c, P.p());
    if (c == 0 || !P.mono_valid(m.e))
        return Element{};
    for (int i = 0; i < P.ngens(); ++i)
        if (P.gen(i).annihilated && m.e[i] > 0)
            return Element{};
    return Element{{Term{m, c}}};
}

Element add(const Presentation& P, const Element& a, const Element& b)
{
    Element r;
    size_t i = 0, j = 0;
    while (i < a.terms.size() || j < b.terms.size()) {
        if (j == b.terms.size() || (i < a.terms.size() && a.terms[i].m < b.terms[j].m)) {
            r.terms.push_back(a.terms[i++]);
        } else if (i == a.terms.size() || b.terms[j].m < a.terms[i].m) {
            r.terms.push_back(b.terms[j++]);
        } else {
            i64 c = fp_add(a.terms[i].c, b.terms[j].c, P.p());
            if (c != 0)
                r.terms.push_back(Term{a.terms[i].m, c});
            ++i;
            ++j;
        }
    }
    return r;
}

Element scale(const Presentation& P, Element e, i64 c)
{
    c = fp_norm(c, P.p());
    if (c == 0)
        return Element{};
    for (auto& t : e.terms)
        t.c = fp_mul(t.c, c, P.p());
    return e;
}

Element multiply(const Presentation& P, const Element& a, const Element& b)
{
    Element r;
    for (const auto& ta : a.terms)
        for (const auto& tb : b.terms) {
            Element prod = mono_mul(P, ta.m, tb.m);
            r = add(P, r, scale(P, std::move(prod), fp_mul(ta.c, tb.c, P.p())));
        }
    return r;
}

i64 divided_power_coefficient(i64 i, i64 j, const Prime& p)
{
    if (i < 0 || j < 0)
        throw CalcError("divided_power_coefficient: negative index");
    return lucas_binomial(i, j, p);
}

std::vector<GeneratorSpec> expand_divided_powers(const Prime& p,
                                                 const std::vector<GeneratorSpec>& gens,
                                                 i64 tmax)
{
    std::vector<GeneratorSpec> out;
    for (const auto& g : gens) {
        if (g.kind != GenKind::DividedPower) {
            out.push_back(g);
            continue;
        }
        if (g.t <= 0)
            throw CalcError("divided-power generator " + g.name + " needs positive internal degree");
        i64 w = 1; /* p^e */
        for (int e = 0;; ++e) {
            i64 ss = checked_mul(w, g.s), tt = checked_mul(w, g.t);
            if (tt > tmax)
                break;
            GeneratorSpec h;
            h.name = e == 0 ? g.name : ("g" + std::to_string(w) + "(" + g.name + ")");
            h.s = ss;
            h.t = tt;
            h.kind = GenKind::Truncated;
            h.height = static_cast<int>(p.p);
            h.annihilated = g.annihilated;
            out.push_back(h);
            w = checked_mul(w, p.p);
        }
    }
    return out;
}

/* ---- enumeration ------------------------------------------------------ */

namespace {

constexpr i64 kInf = i64(1) << 50;

i64 sat_mul(i64 a, i64 b)
{
    if (a == 0 || b == 0)
        return 0;
    if (a > kInf) a = kInf;
    if (a < -kInf) a = -kInf;
    if (b > kInf) b = kInf;
    if (b < -kInf) b = -kInf;
    __int128 r = static_cast<__int128>(a) * b;
    if (r > kInf) return kInf;
    if (r < -kInf) return -kInf;
    return static_cast<i64>(r);
}

struct Iv {
    i64 lo = kInf, hi = -kInf; /* empty by default */
    bool empty() const { return lo > hi; }
    static Iv of(i64 a, i64 b) { return Iv{std::min(a, b), std::max(a, b)}; }
    Iv operator+(const Iv& o) const
    {
        if (empty() || o.empty())
            return Iv{};
        i64 l = lo <= -kInf || o.lo <= -kInf ? -kInf : lo + o.lo;
        i64 h = hi >= kInf || o.hi >= kInf ? kInf : hi + o.hi;
        return Iv{l, h};
    }
};

i64 div_floor(i64 a, i64 b)
{
    if (b < 0) {
        a = -a;
        b = -b;
    }
    return a >= 0 ? a / b : -((-a + b - 1) / b);
}
i64 div_ceil(i64 a, i64 b)
{
    if (b < 0) {
        a = -a;
        b = -b;
    }
    return a >= 0 ? (a + b - 1) / b : -((-a) / b);
}

struct Slot {
    /* either a span-constraint group or a single generator */
    bool is_group = false;
    int constraint = -1;
    int gen = -1;
    i64 lo = 0, hi = 0; /* single-gen exponent range (after bounding) */
};

struct Enumerator {
    const Presentation& P;
    Window box;
    std::vector<Slot> slots;
    std::vector<Iv> suffix_s, suffix_t; /* contribution intervals of slots[k..] */
    std::vector<Monomial> out;
    Expo cur;

    explicit Enumerator(const Presentation& pres, const Window& w) : P(pres), box(w)
    {
        cur.assign(P.ngens(), 0);
        build_slots();
    }

    Iv slot_contrib(const Slot& sl, bool scoord) const
    {
        if (sl.is_group) {
            const auto& c = P.constraints()[sl.constraint];
            Iv iv;
            for (const auto& tup : c.allowed) {
                i64 v = 0;
                for (size_t k = 0; k < c.gens.size(); ++k) {
                    const auto& g = P.gen(c.gens[k]);
                    v += tup[k] * (scoord ? g.s : g.t);
                }
                iv.lo = std::min(iv.empty() ? v : iv.lo, v);
                iv.hi = std::max(iv.hi, v);
            }
            return iv;
        }
        const auto& g = P.gen(sl.gen);
        i64 d = scoord ? g.s : g.t;
        return Iv::of(sat_mul(sl.lo, d), sat_mul(sl.hi, d));
    }

    void build_slots()
    {
        std::vector<bool> used(P.ngens(), false);
        std::vector<Slot> bounded, unbounded;
        for (int i = 0; i < P.ngens(); ++i) {
            if (used[i])
                continue;
            int ci = -1;
            for (size_t c = 0; c < P.constraints().size(); ++c)
                for (int gi : P.constraints()[c].gens)
                    if (gi == i)
                        ci = static_cast<int>(c);
            if (ci >= 0) {
                for (int gi : P.constraints()[ci].gens)
                    used[gi] = true;
                Slot sl;
                sl.is_group = true;
                sl.constraint = ci;
                bounded.push_back(sl);
                continue;
            }
            used[i] = true;
            Slot sl;
            sl.gen = i;
            const auto& g = P.gen(i);
            switch (g.kind) {
                case GenKind::Exterior:
                    sl.lo = 0; sl.hi = 1; bounded.push_back(sl); break;
                case GenKind::Truncated:
                    sl.lo = 0; sl.hi = g.height - 1; bounded.push_back(sl); break;
                case GenKind::Polynomial:
                    sl.lo = 0; sl.hi = kInf; unbounded.push_back(sl); break;
                case GenKind::Laurent:
                    sl.lo = -kInf; sl.hi = kInf; unbounded.push_back(sl); break;
                case GenKind::DividedPower:
                    throw CalcError("divided powers must be expanded before enumeration");
            }
        }
        tighten(bounded, unbounded);
        slots = std::move(bounded);
        for (auto& sl : unbounded)
            slots.push_back(sl);
        int n = static_cast<int>(slots.size());
        suffix_s.assign(n + 1, Iv{0, 0});
        suffix_t.assign(n + 1, Iv{0, 0});
        for (int k = n - 1; k >= 0; --k) {
            suffix_s[k] = suffix_s[k + 1] + slot_contrib(slots[k], true);
            suffix_t[k] = suffix_t[k + 1] + slot_contrib(slots[k], false);
        }
    }

    /* interval propagation over a few integer functionals to bound the
     * exponents of polynomial/laurent generators inside the window box */
    void tighten(std::vector<Slot>& bounded, std::vector<Slot>& unbounded)
    {
        static const std::array<std::array<i64, 2>, 6> funcs = {
            {{1, 0}, {0, 1}, {1, 1}, {1, -1}, {2, 1}, {1, 2}}};
        for (int round = 0; round < 24; ++round) {
            bool changed = false;
            for (auto& f : funcs) {
                i64 c1 = box.smin * f[0], c2 = box.smax * f[0];
                i64 c3 = box.tmin * f[1], c4 = box.tmax * f[1];
                Iv target = Iv::of(c1, c2) + Iv::of(c3, c4);
                Iv bsum{0, 0};
                for (auto& sl : bounded) {
                    Iv c = Iv::of(0, 0);
                    if (sl.is_group) {
                        const auto& cc = P.constraints()[sl.constraint];
                        Iv iv;
                        for (const auto& tup : cc.allowed) {
                            i64 v = 0;
                            for (size_t k = 0; k < cc.gens.size(); ++k) {
                                const auto& g = P.gen(cc.gens[k]);
                                v += tup[k] * (f[0] * g.s + f[1] * g.t);
                            }
                            iv.lo = std::min(iv.empty() ? v : iv.lo, v);
                            iv.hi = std::max(iv.hi, v);
                        }
                        c = iv;
                    } else {
                        const auto& g = P.gen(sl.gen);
                        i64 d = f[0] * g.s + f[1] * g.t;
                        c = Iv::of(sat_mul(sl.lo, d), sat_mul(sl.hi, d));
                    }
                    bsum = bsum + c;
                }
                for (size_t u = 0; u < unbounded.size(); ++u) {
                    const auto& g = P.gen(unbounded[u].gen);
                    i64 d = f[0] * g.s + f[1] * g.t;
                    if (d == 0)
                        continue;
                    Iv others = bsum;
                    for (size_t v = 0; v < unbounded.size(); ++v) {
                        if (v == u)
                            continue;
                        const auto& h = P.gen(unbounded[v].gen);
                        i64 dv = f[0] * h.s + f[1] * h.t;
                        others = others + Iv::of(sat_mul(unbounded[v].lo, dv),
                                                 sat_mul(unbounded[v].hi, dv));
                    }
                    /* e*d in [target.lo - others.hi, target.hi - others.lo] */
                    i64 lo_num = others.hi >= kInf ? -kInf : target.lo - others.hi;
                    i64 hi_num = others.lo <= -kInf ? kInf : target.hi - others.lo;
                    i64 elo, ehi;
                    if (d > 0) {
                        elo = lo_num <= -kInf ? -kInf : div_ceil(lo_num, d);
                        ehi = hi_num >= kInf ? kInf : div_floor(hi_num, d);
                    } else {
                        elo = hi_num >= kInf ? -kInf : div_ceil(hi_num, d);
                        ehi = lo_num <= -kInf ? kInf : div_floor(lo_num, d);
                    }
                    if (elo > unbounded[u].lo) {
                        unbounded[u].lo = elo;
                        changed = true;
                    }
                    if (ehi < unbounded[u].hi) {
                        unbounded[u].hi = ehi;
                        changed = true;
                    }
                }
            }
            if (!changed)
                break;
        }
        for (auto& sl : unbounded)
            if (sl.lo <= -kInf / 2 || sl.hi >= kInf / 2)
                throw CalcError("cannot bound exponents of generator " + P.gen(sl.gen).name +
                                " in the window (presentation not window-finite?)");
    }

    void dfs(size_t k, i64 s, i64 t)
    {
        Iv srange = suffix_s[k] ;
        Iv trange = suffix_t[k];
        if (s + srange.lo > box.smax || s + srange.hi < box.smin)
            return;
        if (t + trange.lo > box.tmax || t + trange.hi < box.tmin)
            return;
        if (k == slots.size()) {
            out.push_back(Monomial{cur});
            return;
        }
        const Slot& sl = slots[k];
        if (sl.is_group) {
            const auto& c = P.constraints()[sl.constraint];
            for (const auto& tup : c.allowed) {
                i64 ds = 0, dt = 0;
                for (size_t j = 0; j < c.gens.size(); ++j) {
                    const auto& g = P.gen(c.gens[j]);
                    ds += tup[j] * g.s;
                    dt += tup[j] * g.t;
                    cur[c.gens[j]] = static_cast<int16_t>(tup[j]);
                }
                dfs(k + 1, s + ds, t + dt);
            }
            for (int gi : c.gens)
                cur[gi] = 0;
            return;
        }
        const auto& g = P.gen(sl.gen);
        i64 lo = sl.lo, hi = sl.hi;
        /* clamp by this gen's own direction against the remaining budget */
        auto clamp = [&](i64 d, i64 blo, i64 bhi, i64 base, const Iv& suff) {
            if (d == 0)
                return;
            i64 lo_num = blo - base - suff.hi;
            i64 hi_num = bhi - base - suff.lo;
            if (d > 0) {
                lo = std::max(lo, div_ceil(lo_num, d));
                hi = std::min(hi, div_floor(hi_num, d));
            } else {
                lo = std::max(lo, div_ceil(hi_num, d));
                hi = std::min(hi, div_floor(lo_num, d));
            }
        };
        clamp(g.s, box.smin, box.smax, s, suffix_s[k + 1]);
        clamp(g.t, box.tmin, box.tmax, t, suffix_t[k + 1]);
        for (i64 e = lo; e <= hi; ++e) {
            if (e < INT16_MIN || e > INT16_MAX)
                throw CalcError("exponent exceeds representable range");
            cur[sl.gen] = static_cast<int16_t>(e);
            dfs(k + 1, s + e * g.s, t + e * g.t);
        }
        cur[sl.gen] = 0;
    }
};

}  // namespace

BasisTable::BasisTable(const Presentation& P, const Window& w) : pres_(&P), win_(w)
{
    P.check_window_finite();
    Enumerator en(P, w);
    en.dfs(0, 0, 0);
    monos_ = std::move(en.out);
    std::vector<std::pair<std::pair<i64, i64>, Monomial>> keyed;
    keyed.reserve(monos_.size());
    for (auto& m : monos_)
        keyed.push_back({P.degree(m), std::move(m)});
    std::sort(keyed.begin(), keyed.end(),
              [](const auto& a, const auto& b) {
                  if (a.first != b.first)
                      return a.first < b.first;
                  return a.second.e < b.second.e;
              });
    monos_.clear();
    degs_.clear();
    monos_.reserve(keyed.size());
    for (auto& kv : keyed) {
        degs_.push_back(kv.first);
        monos_.push_back(std::move(kv.second));
    }
    uint32_t i = 0;
    while (i < monos_.size()) {
        uint32_t j = i;
        while (j < monos_.size() && degs_[j] == degs_[i])
            ++j;
        buckets_[degs_[i]] = {i, j};
        i = j;
    }
    index_.reserve(monos_.size() * 2);
    for (uint32_t k = 0; k < monos_.size(); ++k)
        index_.emplace(monos_[k].e, k);
}

std::pair<uint32_t, uint32_t> BasisTable::bucket(i64 s, i64 t) const
{
    auto it = buckets_.find({s, t});
    if (it == buckets_.end())
        return {0, 0};
    return it->second;
}

int BasisTable::bucket_dim(i64 s, i64 t) const
{
    auto [a, b] = bucket(s, t);
    return static_cast<int>(b - a);
}

std::optional<uint32_t> BasisTable::index_of(const Monomial& m) const
{
    auto it = index_.find(m.e);
    if (it == index_.end())
        return std::nullopt;
    return it->second;
}

std::vector<std::pair<i64, i64>> BasisTable::bidegrees() const
{
    std::vector<std::pair<i64, i64>> v;
    v.reserve(buckets_.size());
    for (auto& kv : buckets_)
        v.push_back(kv.first);
    return v;
}

std::vector<Monomial> enumerate_basis(const Presentation& P, i64 s, i64 t)
{
    BasisTable tab(P, Window{s, s, t, t});
    std::vector<Monomial> v;
    v.reserve(tab.size());
    for (uint32_t i = 0; i < tab.size(); ++i)
        v.push_back(tab.mono(i));
    return v;
}

}  // namespace v1ss
