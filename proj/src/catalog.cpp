#include "v1ss/catalog.hpp"

#include <algorithm>

namespace v1ss {

i64 rho(i64 k, const Prime& p)
{
    if (k < -1)
        throw CalcError("rho: argument must be >= -1");
    i64 q = p.p;
    if (k % 2 != 0) {
        /* k = 2m-1: (p^{2m+1}+1)/(p+1) = (p^{k+2}+1)/(p+1) */
        i64 num = 1;
        for (i64 i = 0; i < k + 2; ++i)
            num = checked_mul(num, q);
        return checked_add(num, 1) / (q + 1);
    }
    i64 num = 1;
    for (i64 i = 0; i < k + 2; ++i)
        num = checked_mul(num, q);
    return checked_sub(num, q * q) / (q * q - 1);
}

namespace {

i64 ipow(i64 b, i64 e)
{
    i64 r = 1;
    for (i64 i = 0; i < e; ++i)
        r = checked_mul(r, b);
    return r;
}

GeneratorSpec gen(const std::string& name, i64 s, i64 t, GenKind k, int h = 0, bool ann = false)
{
    return GeneratorSpec{name, s, t, k, h, ann};
}

/* ---- Tate / homotopy fixed point scenarios for l/p and l --------------- */

/* module-factor constraint: the 2p classes eps0^d mu0^i (d+2i <= 2p-2)
 * together with ebar1 */
SpanConstraint module_factor_constraint(i64 q, int i_eps0, int i_mu0, int i_ebar1)
{
    SpanConstraint sc;
    sc.gens = {i_eps0, i_mu0, i_ebar1};
    for (int d = 0; d <= 1; ++d)
        for (int i = 0; i < q; ++i) {
            if (d == 1 && i == q - 1)
                continue;
            sc.allowed.push_back({d, i, 0});
        }
    sc.allowed.push_back({0, 0, 1});
    return sc;
}

Scenario cpn_tate_ellp(i64 q, int n, const Window& win)
{
    Prime p(q);
    if (n < 1)
        throw CalcError("cpn_tate_ellp: need n >= 1");
    Scenario sc{/*id*/ "", p, n};
    std::vector<GeneratorSpec> gens = {
        gen("u", -1, 0, GenKind::Exterior),
        gen("ebar1", 0, 2 * q - 1, GenKind::Exterior),
        gen("lam2", 0, 2 * q * q - 1, GenKind::Exterior),
        gen("eps0", 0, 1, GenKind::Exterior),
        gen("mu0", 0, 2, GenKind::Truncated, static_cast<int>(q)),
        gen("t", -2, 0, GenKind::Laurent),
        gen("tmu2", -2, 2 * q * q, GenKind::Polynomial),
    };
    sc.pres = std::make_shared<Presentation>(
        p, gens, std::vector<SpanConstraint>{module_factor_constraint(q, 3, 4, 1)});
    sc.window = win;

    /* d^2(eps0 mu0^{i-1}) = t mu0^i for 0 < i < p */
    {
        DiffRule r;
        r.page = 2;
        r.mode = DiffRule::Family;
        r.src_fixed = {{"eps0", 1}};
        r.free_gen = "mu0";
        r.src_offset = -1;
        r.pred = Pred::range(1, q - 1);
        r.targets = {{1, {{"t", 1}}, 0}};
        r.note = "d^2(x) = t.sigma(x) on the module factor";
        sc.rules.push_back(r);
    }
    for (int k = 1; k <= n; ++k) {
        /* d^{2 rho(2k-1)} (t^{p^{2k-1}-p^{2k}+i} ebar1) = (tmu2)^{rho(2k-3)} t^i,
         * vp(i) = 2k-2 */
        DiffRule r;
        r.page = 2 * rho(2 * k - 1, p);
        r.mode = DiffRule::Family;
        r.src_fixed = {{"ebar1", 1}};
        r.free_gen = "t";
        r.src_offset = ipow(q, 2 * k - 1) - ipow(q, 2 * k);
        r.pred = Pred::vp_eq(2 * k - 2);
        r.targets = {{1, {{"tmu2", rho(2 * k - 3, p)}}, 0}};
        sc.rules.push_back(r);

        /* d^{2 rho(2k)} on the t-power families; one rule per residue class
         * of the module classes t^{-i0}, 0 <= i0 < p */
        for (i64 i0 = 0; i0 < q; ++i0) {
            DiffRule s;
            s.page = 2 * rho(2 * k, p);
            s.mode = DiffRule::Family;
            s.free_gen = "t";
            s.src_offset = -i0;
            s.pred = Pred::vp_eq(2 * k - 1);
            s.targets = {{1, {{"lam2", 1}, {"tmu2", rho(2 * k - 2, p)}}, ipow(q, 2 * k) - i0}};
            sc.rules.push_back(s);
        }
    }
    {
        /* d^{2 rho(2n)+1} (u t^i) = (tmu2)^{rho(2n-2)+1} t^{i+p^{2n}},
         * vp(i) >= 2n */
        DiffRule r;
        r.page = 2 * rho(2 * n, p) + 1;
        r.mode = DiffRule::Family;
        r.src_fixed = {{"u", 1}};
        r.free_gen = "t";
        r.src_offset = 0;
        r.pred = Pred::vp_ge(2 * n);
        r.targets = {{1, {{"tmu2", rho(2 * n - 2, p) + 1}}, ipow(q, 2 * n)}};
        sc.rules.push_back(r);
    }
    sc.annotations["infinite_cycles"] = {"lam2", "tmu2", "ebar1"};
    sc.annotations["module_annihilation"] = {
        "lam1 acts as zero; the base d^{2p} family induces nothing here"};
    sc.annotations["permanent_cycles"] = {"1", "t^-1 .. t^{1-p}", "ebar1"};
    sc.annotations["abutment_identifications"] = {
        "the comparison with the mu2-localized module holds at dimension level; "
        "the representative-level identification (u t^-1)^d t^-i, ebar1 is an annotation"};

    sc.checkpoints.push_back({2, exprs::cor72_e3(q, n), false, "E3"});
    for (int m = 1; m <= n; ++m) {
        sc.checkpoints.push_back({2 * rho(2 * m - 1, p), exprs::cor72_mid_odd(q, n, m), false,
                                  "E^{2rho(" + std::to_string(2 * m - 1) + ")+1}"});
        sc.checkpoints.push_back({2 * rho(2 * m, p), exprs::cor72_mid_even(q, n, m), false,
                                  "E^{2rho(" + std::to_string(2 * m) + ")+1}"});
    }
    sc.checkpoints.push_back({2 * rho(2 * n, p) + 1, exprs::cor72_einf(q, n), false, "Einf"});
    return sc;
}

Scenario cpn_hfp_ellp(i64 q, int n, const Window& win)
{
    Prime p(q);
    if (n < 1)
        throw CalcError("cpn_hfp_ellp: need n >= 1");
    Scenario sc{"", p, n};
    std::vector<GeneratorSpec> gens = {
        gen("u", -1, 0, GenKind::Exterior),
        gen("ebar1", 0, 2 * q - 1, GenKind::Exterior),
        gen("lam2", 0, 2 * q * q - 1, GenKind::Exterior),
        gen("eps0", 0, 1, GenKind::Exterior),
        gen("mu0", 0, 2, GenKind::Truncated, static_cast<int>(q)),
        gen("mu2", 0, 2 * q * q, GenKind::Laurent),
        gen("tmu2", -2, 2 * q * q, GenKind::Polynomial),
    };
    sc.pres = std::make_shared<Presentation>(
        p, gens, std::vector<SpanConstraint>{module_factor_constraint(q, 3, 4, 1)});
    sc.window = win;

    {
        /* d^2(eps0 mu0^{i-1}) = t mu0^i with t = tmu2 . mu2^{-1} */
        DiffRule r;
        r.page = 2;
        r.mode = DiffRule::Family;
        r.src_fixed = {{"eps0", 1}};
        r.free_gen = "mu0";
        r.src_offset = -1;
        r.pred = Pred::range(1, q - 1);
        r.targets = {{1, {{"tmu2", 1}, {"mu2", -1}}, 0}};
        sc.rules.push_back(r);
    }
    for (int k = 1; k <= n; ++k) {
        /* d^{2 rho(2k-1)} (mu2^{p^{2k}-p^{2k-1}+j} ebar1) = (tmu2)^{rho(2k-1)} mu2^j */
        DiffRule r;
        r.page = 2 * rho(2 * k - 1, p);
        r.mode = DiffRule::Family;
        r.src_fixed = {{"ebar1", 1}};
        r.free_gen = "mu2";
        r.src_offset = ipow(q, 2 * k) - ipow(q, 2 * k - 1);
        r.pred = Pred::vp_eq(2 * k - 2);
        r.targets = {{1, {{"tmu2", rho(2 * k - 1, p)}}, 0}};
        sc.rules.push_back(r);

        /* d^{2 rho(2k)} (mu2^j) = lam2 (tmu2)^{rho(2k)} mu2^{j - p^{2k}},
         * vp(j) = 2k-1 */
        DiffRule s;
        s.page = 2 * rho(2 * k, p);
        s.mode = DiffRule::Family;
        s.free_gen = "mu2";
        s.src_offset = 0;
        s.pred = Pred::vp_eq(2 * k - 1);
        s.targets = {{1, {{"lam2", 1}, {"tmu2", rho(2 * k, p)}}, -ipow(q, 2 * k)}};
        sc.rules.push_back(s);
    }
    {
        /* d^{2 rho(2n)+1} (u mu2^j) = (tmu2)^{rho(2n)+1} mu2^{j-p^{2n}},
         * vp(j) >= 2n */
        DiffRule r;
        r.page = 2 * rho(2 * n, p) + 1;
        r.mode = DiffRule::Family;
        r.src_fixed = {{"u", 1}};
        r.free_gen = "mu2";
        r.src_offset = 0;
        r.pred = Pred::vp_ge(2 * n);
        r.targets = {{1, {{"tmu2", rho(2 * n, p) + 1}}, -ipow(q, 2 * n)}};
        sc.rules.push_back(r);
    }
    sc.annotations["infinite_cycles"] = {"lam2", "tmu2", "ebar1"};

    sc.checkpoints.push_back({2, exprs::cor75_e3(q, n), false, "E3"});
    for (int m = 1; m <= n; ++m) {
        sc.checkpoints.push_back({2 * rho(2 * m - 1, p), exprs::cor75_mid_odd(q, n, m), false,
                                  "E^{2rho(" + std::to_string(2 * m - 1) + ")+1}"});
        sc.checkpoints.push_back({2 * rho(2 * m, p), exprs::cor75_mid_even(q, n, m), false,
                                  "E^{2rho(" + std::to_string(2 * m) + ")+1}"});
    }
    sc.checkpoints.push_back({2 * rho(2 * n, p) + 1, exprs::cor75_einf(q, n), false, "Einf"});
    return sc;
}

Scenario cp_tate_ell(i64 q, const Window& win)
{
    Prime p(q);
    Scenario sc{"", p, 1};
    std::vector<GeneratorSpec> gens = {
        gen("u", -1, 0, GenKind::Exterior),
        gen("lam1", 0, 2 * q - 1, GenKind::Exterior),
        gen("lam2", 0, 2 * q * q - 1, GenKind::Exterior),
        gen("t", -2, 0, GenKind::Laurent),
        gen("tmu2", -2, 2 * q * q, GenKind::Polynomial),
    };
    sc.pres = std::make_shared<Presentation>(p, gens);
    sc.window = win;
    {
        /* d^{2p}(t^i) = lam1 t^{i+p}, vp(i) = 0 */
        DiffRule r;
        r.page = 2 * q;
        r.mode = DiffRule::Family;
        r.free_gen = "t";
        r.pred = Pred::vp_eq(0);
        r.targets = {{1, {{"lam1", 1}}, q}};
        sc.rules.push_back(r);
    }
    {
        /* d^{2p^2}(t^i) = lam2 t^{i+p^2}, vp(i) = 1 */
        DiffRule r;
        r.page = 2 * q * q;
        r.mode = DiffRule::Family;
        r.free_gen = "t";
        r.pred = Pred::vp_eq(1);
        r.targets = {{1, {{"lam2", 1}}, q * q}};
        sc.rules.push_back(r);
    }
    {
        /* d^{2p^2+1}(u t^i) = tmu2 t^{i+p^2}, vp(i) >= 2 */
        DiffRule r;
        r.page = 2 * q * q + 1;
        r.mode = DiffRule::Family;
        r.src_fixed = {{"u", 1}};
        r.free_gen = "t";
        r.pred = Pred::vp_ge(2);
        r.targets = {{1, {{"tmu2", 1}}, q * q}};
        sc.rules.push_back(r);
    }
    sc.annotations["infinite_cycles"] = {"lam1", "lam2", "tmu2"};
    auto w = P("tmu2", -2, 2 * q * q);
    auto Lq = [&](i64 lat) {
        return tensor({E("u", -1, 0), E("lam1", 0, 2 * q - 1), E("lam2", 0, 2 * q * q - 1),
                       Pl("t^" + std::to_string(lat), -2 * lat, 0), w});
    };
    sc.checkpoints.push_back({2 * q, Lq(q), false, "E^{2p+1}"});
    sc.checkpoints.push_back({2 * q * q, Lq(q * q), false, "E^{2p^2+1}"});
    sc.checkpoints.push_back({2 * q * q + 1,
                              tensor({E("lam1", 0, 2 * q - 1), E("lam2", 0, 2 * q * q - 1),
                                      Pl("t^" + std::to_string(q * q), -2 * q * q, 0)}),
                              false, "Einf"});
    return sc;
}

/* V(0)- and V(1)-coefficient C_p-Tate runs for Z/p: generator-level d^2 */
Scenario cp_tate_zp(i64 q, bool v1, const Window& win)
{
    Prime p(q);
    Scenario sc{"", p, 1};
    std::vector<GeneratorSpec> gens = {
        gen("u", -1, 0, GenKind::Exterior),
        gen("eps0", 0, 1, GenKind::Exterior),
        gen("mu0", 0, 2, GenKind::Polynomial),
        gen("t", -2, 0, GenKind::Laurent),
    };
    if (v1)
        gens.push_back(gen("eps1", 0, 2 * q - 1, GenKind::Exterior));
    sc.pres = std::make_shared<Presentation>(p, gens);
    sc.window = win;
    {
        DiffRule r;
        r.page = 2;
        r.mode = DiffRule::Generator;
        r.source_gen = "eps0";
        r.targets = {{1, {{"t", 1}, {"mu0", 1}}, 0}};
        r.note = "sigma eps0 = mu0";
        sc.rules.push_back(r);
    }
    if (v1) {
        DiffRule r;
        r.page = 2;
        r.mode = DiffRule::Generator;
        r.source_gen = "eps1";
        r.targets = {{1, {{"t", 1}, {"mu0", q}}, 0}};
        r.note = "sigma eps1 = mu0^p";
        sc.rules.push_back(r);
    }
    Expr e3 = v1 ? tensor({E("u", -1, 0), Pl("t", -2, 0), E("y", 0, 2 * q - 1)})
                 : tensor({E("u", -1, 0), Pl("t", -2, 0)});
    sc.checkpoints.push_back({2, e3, false, "E3 = Einf"});
    return sc;
}

/* ---- Boekstedt scenarios ------------------------------------------------ */

struct BokSpec {
    bool tau0 = false;      /* include tau_0 / stau_0 families */
    int tau_min_hi = 99;    /* include tau_k for k >= this (the "k >= 1/2" part) */
    bool hzp = false;       /* full dual Steenrod coefficients */
    std::string einf_sxi;   /* which sigma-xi classes survive */
};

Scenario bokstedt(i64 q, const std::string& which, const Window& win)
{
    Prime p(q);
    Scenario sc{"", p, 1};
    i64 tmax = win.tmax;
    /* tau-index sets per coefficient ring */
    auto tau_in = [&](int k) {
        if (which == "zp")
            return true;
        if (which == "z")
            return k >= 1;
        if (which == "ell")
            return k >= 2;
        return k == 0 || k >= 2; /* ell/p */
    };
    std::vector<GeneratorSpec> gens;
    /* homology of the coefficients: P(xi_k | k>=1) (x) E(tau_k in the set) */
    for (int k = 1;; ++k) {
        i64 d = 2 * (ipow(q, k) - 1);
        if (d > tmax)
            break;
        gens.push_back(gen("xi" + std::to_string(k), 0, d, GenKind::Polynomial));
    }
    for (int k = 0;; ++k) {
        i64 d = 2 * ipow(q, k) - 1;
        if (d > tmax)
            break;
        if (tau_in(k))
            gens.push_back(gen("tau" + std::to_string(k), 0, d, GenKind::Exterior));
    }
    /* Hochschild part: E(sxi_k | k>=1) (x) Gamma(stau_k in the set) */
    for (int k = 1;; ++k) {
        i64 d = 2 * (ipow(q, k) - 1);
        if (d > tmax)
            break;
        gens.push_back(gen("sxi" + std::to_string(k), 1, d, GenKind::Exterior));
    }
    std::vector<GeneratorSpec> dp;
    for (int k = 0;; ++k) {
        i64 d = 2 * ipow(q, k) - 1;
        if (d > tmax)
            break;
        if (tau_in(k))
            dp.push_back(gen("stau" + std::to_string(k), 1, d, GenKind::DividedPower));
    }
    auto expanded = expand_divided_powers(p, dp, tmax);
    for (auto& g : expanded)
        gens.push_back(g);
    auto pres = std::make_shared<Presentation>(p, gens);
    sc.pres = pres;
    sc.window = win;

    /* d^{p-1}(gamma_{p^e}(stau_k)) = sxi_{k+1} . prod_{1<=f<e} gamma_{p^f}^{p-1} */
    for (int k = 0;; ++k) {
        i64 d0 = 2 * ipow(q, k) - 1;
        if (d0 > tmax)
            break;
        if (!tau_in(k))
            continue;
        std::string sx = "sxi" + std::to_string(k + 1);
        if (pres->gen_index(sx) < 0)
            continue; /* target above the window, and so is every source */
        std::string base = "stau" + std::to_string(k);
        for (int e = 1;; ++e) {
            std::string src = "g" + std::to_string(ipow(q, e)) + "(" + base + ")";
            if (pres->gen_index(src) < 0)
                break;
            DiffRule r;
            r.page = q - 1;
            r.mode = DiffRule::Generator;
            r.source_gen = src;
            RuleTarget t;
            t.coeff = 1;
            t.fixed.push_back({sx, 1});
            for (int f = 1; f < e; ++f)
                t.fixed.push_back({"g" + std::to_string(ipow(q, f)) + "(" + base + ")", q - 1});
            r.targets = {t};
            sc.rules.push_back(r);
        }
    }

    /* expected Einf: coefficients (x) E(surviving sxi) (x) P_p(stau_k) */
    std::vector<Expr> fac;
    for (auto& g : gens) {
        if (g.name.rfind("sxi", 0) == 0) {
            bool survive = false;
            if (which == "z" && g.name == "sxi1")
                survive = true;
            if (which == "ell" && (g.name == "sxi1" || g.name == "sxi2"))
                survive = true;
            if (which == "ellp" && g.name == "sxi2")
                survive = true;
            if (survive)
                fac.push_back(E(g.name, g.s, g.t));
        } else if (g.name.rfind("stau", 0) == 0 && g.name.find('(') == std::string::npos) {
            fac.push_back(Ph(g.name, g.s, g.t, static_cast<int>(q)));
        } else if (g.name.find('(') != std::string::npos) {
            /* higher divided-power surrogates die */
        } else if (g.name.rfind("xi", 0) == 0) {
            fac.push_back(P(g.name, g.s, g.t));
        } else {
            fac.push_back(E(g.name, g.s, g.t));
        }
    }
    sc.checkpoints.push_back({q - 1, tensor(fac), false, "Einf"});
    sc.annotations["multiplicative_extensions"] = {
        "(stau_k)^p = stau_{k+1} holds in the abutment, above the associated graded; "
        "recorded only, never used in computation"};
    return sc;
}

/* S^1 limits: a large-n run compared with the closed forms of the limit
 * associated graded, restricted to even columns of a core box */
Scenario s1_scenario(i64 q, bool tate, const Window& win)
{
    int n = 2;
    Scenario sc = tate ? cpn_tate_ellp(q, n, win) : cpn_hfp_ellp(q, n, win);
    sc.checkpoints.clear();
    Prime p(q);
    i64 pg = 2 * rho(2 * n, p) + 1;
    Checkpoint ck;
    ck.after_page = pg;
    ck.even_columns_only = true;
    ck.label = tate ? "S1-Tate stabilization" : "S1-hfp stabilization";
    if (tate) {
        ck.expected = exprs::thm712a(q, 6);
        /* agreement region: below the first k = n+1 family, below the
         * (tmu2)-truncation of the last summand, and clear of the classes
         * killed only at the C_{p^{n+1}} stage (t-exponent >= p^{2n} shifted
         * by up to rho(2n-2) powers of tmu2) */
        i64 s_ag = 2 * (ipow(q, 2 * n) - rho(2 * n - 2, p) - 1) - 4;
        i64 t_ag = 2 * q * q * (rho(2 * n - 2, p) + 1) - 10;
        ck.restrict_to = Window{-s_ag, s_ag, 0, t_ag};
    } else {
        ck.expected = exprs::thm712b(q, 6);
        /* the first limit-only deaths sit at |t| >= 2p^2(p^{2n} - S/2) for
         * filtration bound S; the box below keeps well clear of them */
        i64 S = 120, T = 126;
        ck.restrict_to = Window{-S, 0, -T, T};
    }
    sc.checkpoints.push_back(ck);
    return sc;
}

}  // namespace

std::vector<std::string> scenario_ids()
{
    return {"bokstedt_Zp",   "bokstedt_Z",     "bokstedt_ell",  "bokstedt_ellp",
            "cp_tate_Zp_v0", "cp_tate_Zp",     "cp_tate_ell",   "cp_tate_ellp",
            "cpn_tate_ellp", "cpn_hfp_ellp",   "s1_tate_ellp",  "s1_hfp_ellp"};
}

bool scenario_needs_n(const std::string& id)
{
    return id == "cpn_tate_ellp" || id == "cpn_hfp_ellp";
}

Window default_window(const std::string& id, i64 q, int n)
{
    Prime p(q);
    if (id.rfind("bokstedt", 0) == 0)
        return Window{0, 4 * q * q + 2 * q, 0, 4 * q * q};
    if (id == "cp_tate_Zp_v0" || id == "cp_tate_Zp")
        return Window{-40, 20, 0, 12 * q};
    if (id == "cp_tate_ell" || id == "cp_tate_ellp")
        n = 1;
    if (id == "s1_tate_ellp")
        return Window{-360, 190, 0, 400};
    if (id == "s1_hfp_ellp")
        return Window{-380, 0, -380, 560};
    i64 m = 2 * rho(2 * n, p) + 1; /* the longest differential */
    bool hfp = id.find("hfp") != std::string::npos;
    if (hfp)
        return Window{-(2 * m + 60), 0, -(m + 160), 2 * m + 160};
    return Window{-(2 * m + 60), m / 5 + 30, 0, 2 * m + 160};
}

Scenario build_scenario(const std::string& id, i64 p, int n)
{
    return build_scenario(id, p, n, default_window(id, p, n));
}

Scenario build_scenario(const std::string& id, i64 p, int n, const Window& win)
{
    Scenario sc = [&]() -> Scenario {
        if (id == "bokstedt_Zp")
            return bokstedt(p, "zp", win);
        if (id == "bokstedt_Z")
            return bokstedt(p, "z", win);
        if (id == "bokstedt_ell")
            return bokstedt(p, "ell", win);
        if (id == "bokstedt_ellp")
            return bokstedt(p, "ellp", win);
        if (id == "cp_tate_Zp_v0")
            return cp_tate_zp(p, false, win);
        if (id == "cp_tate_Zp")
            return cp_tate_zp(p, true, win);
        if (id == "cp_tate_ell")
            return cp_tate_ell(p, win);
        if (id == "cp_tate_ellp")
            return cpn_tate_ellp(p, 1, win);
        if (id == "cpn_tate_ellp")
            return cpn_tate_ellp(p, n, win);
        if (id == "cpn_hfp_ellp")
            return cpn_hfp_ellp(p, n, win);
        if (id == "s1_tate_ellp")
            return s1_scenario(p, true, win);
        if (id == "s1_hfp_ellp")
            return s1_scenario(p, false, win);
        throw CalcError("unknown scenario id: " + id);
    }();
    sc.id = id;
    if (Prime(p).below_paper_bound())
        sc.notes.push_back("p = 3 run: outside the p >= 5 hypothesis, formal calculation only");
    return sc;
}

/* ---- expression catalog ------------------------------------------------ */

namespace exprs {

namespace {

Expr Eu(i64) { return E("u", -1, 0); }
Expr Eebar(i64 q) { return E("ebar1", 0, 2 * q - 1); }
Expr Elam2(i64 q) { return E("lam2", 0, 2 * q * q - 1); }
Expr Wpoly(i64 q) { return P("tmu2", -2, 2 * q * q); }
Expr Wtrunc(i64 q, i64 h) { return Ph("tmu2", -2, 2 * q * q, static_cast<int>(h)); }
Expr TLat(i64 lat) { return Pl("t^" + std::to_string(lat), -2 * lat, 0); }
Expr MuLat(i64 q, i64 lat) { return Pl("mu2^" + std::to_string(lat), 0, 2 * q * q * lat); }

Expr t_span(i64 q)
{
    /* Fp{t^-i : 0 < i < p} */
    std::vector<std::tuple<std::string, i64, i64>> es;
    for (i64 i = 1; i < q; ++i)
        es.push_back({"t^-" + std::to_string(i), 2 * i, 0});
    return span_list(std::move(es));
}

Expr mu0_span(i64 q)
{
    /* Fp{mu0^i : 0 < i < p} */
    std::vector<std::tuple<std::string, i64, i64>> es;
    for (i64 i = 1; i < q; ++i)
        es.push_back({"mu0^" + std::to_string(i), 0, 2 * i});
    return span_list(std::move(es));
}

Expr B_tate(i64 q, int k, bool with_u)
{
    Prime p(q);
    std::vector<Expr> f;
    if (with_u)
        f.push_back(Eu(q));
    f.push_back(Elam2(q));
    f.push_back(span_family("t", -2, 0, 0, 0, Pred::vp_eq(2 * k - 2)));
    f.push_back(Wtrunc(q, rho(2 * k - 3, p)));
    return tensor(f);
}

Expr C_tate(i64 q, int k, bool with_u)
{
    Prime p(q);
    std::vector<Expr> f;
    if (with_u)
        f.push_back(Eu(q));
    f.push_back(Eebar(q));
    f.push_back(span_family("t", -2, 0, 0, 2 * q * q - 1, Pred::vp_eq(2 * k - 1)));
    f.push_back(Wtrunc(q, rho(2 * k - 2, p)));
    return tensor(f);
}

Expr B_hfp(i64 q, int k, bool with_u)
{
    Prime p(q);
    std::vector<Expr> f;
    if (with_u)
        f.push_back(Eu(q));
    f.push_back(Elam2(q));
    f.push_back(span_family("mu2", 0, 2 * q * q, 0, 0, Pred::vp_eq(2 * k - 2)));
    f.push_back(Wtrunc(q, rho(2 * k - 1, p)));
    return tensor(f);
}

Expr C_hfp(i64 q, int k, bool with_u)
{
    Prime p(q);
    std::vector<Expr> f;
    if (with_u)
        f.push_back(Eu(q));
    f.push_back(Eebar(q));
    f.push_back(span_family("mu2", 0, 2 * q * q, 0, 2 * q * q - 1, Pred::vp_eq(2 * k - 1)));
    f.push_back(Wtrunc(q, rho(2 * k, p)));
    return tensor(f);
}

Expr S1_tate(i64 q, i64 lat, bool with_u)
{
    std::vector<Expr> f;
    if (with_u)
        f.push_back(Eu(q));
    f.push_back(Elam2(q));
    f.push_back(t_span(q));
    f.push_back(TLat(lat));
    return tensor(f);
}

Expr S1_hfp(i64 q, bool with_u)
{
    std::vector<Expr> f;
    if (with_u)
        f.push_back(Eu(q));
    f.push_back(Elam2(q));
    f.push_back(mu0_span(q));
    f.push_back(MuLat(q, 1));
    return tensor(f);
}

Expr L_tate(i64 q, i64 lat)
{
    return tensor({Eu(q), Eebar(q), Elam2(q), TLat(lat), Wpoly(q)});
}

Expr L_hfp(i64 q, i64 lat)
{
    return tensor({Eu(q), Eebar(q), Elam2(q), MuLat(q, lat), Wpoly(q)});
}

}  // namespace

Expr cor72_e3(i64 q, int)
{
    return tensor({Eu(q), Eebar(q), Elam2(q), TLat(1), Wpoly(q)});
}

Expr cor72_mid_odd(i64 q, int, int m)
{
    std::vector<Expr> parts;
    parts.push_back(S1_tate(q, m == 1 ? q : q * q, true));
    for (int k = 2; k <= m; ++k)
        parts.push_back(B_tate(q, k, true));
    for (int k = 2; k <= m - 1; ++k)
        parts.push_back(C_tate(q, k, true));
    parts.push_back(L_tate(q, ipow(q, 2 * m - 1)));
    return dsum(parts);
}

Expr cor72_mid_even(i64 q, int, int m)
{
    std::vector<Expr> parts;
    parts.push_back(S1_tate(q, q * q, true));
    for (int k = 2; k <= m; ++k)
        parts.push_back(B_tate(q, k, true));
    for (int k = 2; k <= m; ++k)
        parts.push_back(C_tate(q, k, true));
    parts.push_back(L_tate(q, ipow(q, 2 * m)));
    return dsum(parts);
}

Expr cor72_einf(i64 q, int n)
{
    Prime p(q);
    std::vector<Expr> parts;
    parts.push_back(S1_tate(q, q * q, true));
    for (int k = 2; k <= n; ++k)
        parts.push_back(B_tate(q, k, true));
    for (int k = 2; k <= n; ++k)
        parts.push_back(C_tate(q, k, true));
    parts.push_back(tensor({Eebar(q), Elam2(q), TLat(ipow(q, 2 * n)),
                            Wtrunc(q, rho(2 * n - 2, p) + 1)}));
    return dsum(parts);
}

Expr cor75_e3(i64 q, int)
{
    return dsum({S1_hfp(q, true), tensor({Eu(q), Eebar(q), Elam2(q), MuLat(q, 1), Wpoly(q)})});
}

Expr cor75_mid_odd(i64 q, int, int m)
{
    std::vector<Expr> parts;
    parts.push_back(S1_hfp(q, true));
    for (int k = 1; k <= m; ++k)
        parts.push_back(B_hfp(q, k, true));
    for (int k = 1; k <= m - 1; ++k)
        parts.push_back(C_hfp(q, k, true));
    parts.push_back(L_hfp(q, ipow(q, 2 * m - 1)));
    return dsum(parts);
}

Expr cor75_mid_even(i64 q, int, int m)
{
    std::vector<Expr> parts;
    parts.push_back(S1_hfp(q, true));
    for (int k = 1; k <= m; ++k)
        parts.push_back(B_hfp(q, k, true));
    for (int k = 1; k <= m; ++k)
        parts.push_back(C_hfp(q, k, true));
    parts.push_back(L_hfp(q, ipow(q, 2 * m)));
    return dsum(parts);
}

Expr cor75_einf(i64 q, int n)
{
    Prime p(q);
    std::vector<Expr> parts;
    parts.push_back(S1_hfp(q, true));
    for (int k = 1; k <= n; ++k)
        parts.push_back(B_hfp(q, k, true));
    for (int k = 1; k <= n; ++k)
        parts.push_back(C_hfp(q, k, true));
    parts.push_back(tensor({Eebar(q), Elam2(q), MuLat(q, ipow(q, 2 * n)),
                            Wtrunc(q, rho(2 * n, p) + 1)}));
    return dsum(parts);
}

Expr thm712a(i64 q, int kmax)
{
    std::vector<Expr> parts;
    parts.push_back(S1_tate(q, q * q, false));
    for (int k = 2; k <= kmax; ++k)
        parts.push_back(B_tate(q, k, false));
    for (int k = 2; k <= kmax; ++k)
        parts.push_back(C_tate(q, k, false));
    parts.push_back(tensor({Eebar(q), Elam2(q), Wpoly(q)}));
    return dsum(parts);
}

Expr thm712b(i64 q, int kmax)
{
    std::vector<Expr> parts;
    parts.push_back(S1_hfp(q, false));
    for (int k = 1; k <= kmax; ++k)
        parts.push_back(B_hfp(q, k, false));
    for (int k = 1; k <= kmax; ++k)
        parts.push_back(C_hfp(q, k, false));
    parts.push_back(tensor({Eebar(q), Elam2(q), Wpoly(q)}));
    return dsum(parts);
}

/* ---- total-graded module formulas -------------------------------------- */

namespace {

Expr tdl1_span(i64 q)
{
    std::vector<std::pair<std::string, i64>> es;
    for (i64 d = 1; d < q; ++d)
        es.push_back({"t^" + std::to_string(d) + " l1", 2 * q - 1 - 2 * d});
    return span_list_d(std::move(es));
}

Expr tdv2_span(i64 q) /* {t^d v2 : 0<d<p^2-p, p !| d} */
{
    std::vector<std::pair<std::string, i64>> es;
    for (i64 d = 1; d < q * q - q; ++d)
        if (d % q != 0)
            es.push_back({"t^" + std::to_string(d) + " v2", 2 * q * q - 2 - 2 * d});
    return span_list_d(std::move(es));
}

Expr tdpl2_span(i64 q) /* {t^{dp} lam2 : 0<d<p} */
{
    std::vector<std::pair<std::string, i64>> es;
    for (i64 d = 1; d < q; ++d)
        es.push_back({"t^" + std::to_string(d * q) + " l2", 2 * q * q - 1 - 2 * d * q});
    return span_list_d(std::move(es));
}

Expr tdv2dlp_span(i64 q) /* {t^d v2 dlogp} */
{
    std::vector<std::pair<std::string, i64>> es;
    for (i64 d = 1; d < q * q - q; ++d)
        if (d % q != 0)
            es.push_back({"t^" + std::to_string(d) + " v2 dlp", 2 * q * q - 1 - 2 * d});
    return span_list_d(std::move(es));
}

Expr tdpv2dlv_span(i64 q) /* {t^{dp} v2 dlogv1 : 0<d<p} (= t^{dp} lam2 degrees) */
{
    std::vector<std::pair<std::string, i64>> es;
    for (i64 d = 1; d < q; ++d)
        es.push_back({"t^" + std::to_string(d * q) + " v2 dlv", 2 * q * q - 1 - 2 * d * q});
    return span_list_d(std::move(es));
}

}  // namespace

Expr v1_thh_zp(i64 q) { return tensor({Ed("eps0", 1), Ed("eps1", 2 * q - 1), Pd("mu0", 2)}); }
Expr v1_thh_z(i64 q)
{
    return tensor({Ed("eps1", 2 * q - 1), Ed("lam1", 2 * q - 1), Pd("mu1", 2 * q)});
}
Expr v1_thh_ell(i64 q)
{
    return tensor({Ed("lam1", 2 * q - 1), Ed("lam2", 2 * q * q - 1), Pd("mu2", 2 * q * q)});
}
Expr v1_thh_ellp(i64 q)
{
    std::vector<std::pair<std::string, i64>> cls;
    for (i64 i = 0; i < q; ++i) {
        cls.push_back({"mu0^" + std::to_string(i), 2 * i});
        if (i < q - 1)
            cls.push_back({"eps0 mu0^" + std::to_string(i), 2 * i + 1});
    }
    cls.push_back({"ebar1", 2 * q - 1});
    return tensor({span_list_d(std::move(cls)), Ed("lam2", 2 * q * q - 1), Pd("mu2", 2 * q * q)});
}

Expr tc_zp(i64 q) { return tensor({Ed("del", -1), Ed("ebar1", 2 * q - 1)}); }
Expr tc_z(i64 q)
{
    return dsum({tensor({Ed("del", -1), Ed("lam1", 2 * q - 1)}), tdl1_span(q)});
}
Expr tc_zq(i64 q)
{
    return dsum({tensor({Ed("del", -1), Ed("dlp", 1)}), tdl1_span(q)});
}
Expr tc_ell(i64 q)
{
    Expr pv2 = Pd("v2", 2 * q * q - 2);
    return dsum({tensor({pv2, Ed("del", -1), Ed("lam1", 2 * q - 1), Ed("lam2", 2 * q * q - 1)}),
                 tensor({pv2, Ed("lam2", 2 * q * q - 1), tdl1_span(q)}),
                 tensor({pv2, Ed("lam1", 2 * q - 1), tdpl2_span(q)})});
}
Expr tc_ellp(i64 q)
{
    Expr pv2 = Pd("v2", 2 * q * q - 2);
    return dsum({tensor({pv2, Ed("del", -1), Ed("ebar1", 2 * q - 1), Ed("lam2", 2 * q * q - 1)}),
                 tensor({pv2, Ed("dlv", 1), tdv2_span(q)}),
                 tensor({pv2, Ed("ebar1", 2 * q - 1), tdpl2_span(q)})});
}
Expr k_ellp(i64 q)
{
    Expr pv2 = Pd("v2", 2 * q * q - 2);
    Expr row1 = tensor({pv2, Ed("ebar1", 2 * q - 1),
                        span_list_d({{"1", 0},
                                     {"del l2", 2 * q * q - 2},
                                     {"l2", 2 * q * q - 1},
                                     {"del v2", 2 * q * q - 3}})});
    return dsum({row1, tensor({pv2, Ed("dlv", 1), tdv2_span(q)}),
                 tensor({pv2, Ed("ebar1", 2 * q - 1), tdpl2_span(q)})});
}
Expr tc_ell_pinv(i64 q)
{
    Expr pv2 = Pd("v2", 2 * q * q - 2);
    return dsum({tensor({pv2, Ed("del", -1), Ed("dlp", 1), Ed("lam2", 2 * q * q - 1)}),
                 tensor({pv2, Ed("lam2", 2 * q * q - 1), tdl1_span(q)}),
                 tensor({pv2, Ed("dlv", 1), tdv2dlp_span(q)}),
                 tensor({pv2, Ed("dlp", 1), tdpl2_span(q)})});
}
Expr tc_ell_L(i64 q)
{
    Expr pv2 = Pd("v2", 2 * q * q - 2);
    return dsum({tensor({pv2, Ed("del", -1), Ed("lam1", 2 * q - 1), Ed("dlv", 1)}),
                 tensor({pv2, Ed("dlv", 1), tdl1_span(q)}),
                 tensor({pv2, Ed("lam1", 2 * q - 1), tdpv2dlv_span(q)})});
}
Expr tc_ellp_Lp(i64 q)
{
    Expr pv2 = Pd("v2", 2 * q * q - 2);
    return dsum({tensor({pv2, Ed("del", -1), Ed("ebar1", 2 * q - 1), Ed("dlv", 1)}),
                 tensor({pv2, Ed("dlv", 1), tdv2_span(q)}),
                 tensor({pv2, Ed("ebar1", 2 * q - 1), tdpv2dlv_span(q)})});
}
Expr tc_ff(i64 q)
{
    Expr pv2 = Pd("v2", 2 * q * q - 2);
    return dsum({tensor({pv2, Ed("del", -1), Ed("dlp", 1), Ed("dlv", 1)}),
                 tensor({pv2, Ed("dlv", 1), tdl1_span(q)}),
                 tensor({pv2, Ed("dlv", 1), tdv2dlp_span(q)}),
                 tensor({pv2, Ed("dlp", 1), tdpv2dlv_span(q)})});
}
Expr lambda_star(i64 q)
{
    return dsum({tensor({Ed("del v2", 2 * q * q - 3), Ed("dlp", 1), Ed("dlv", 1)}),
                 tensor({Ed("dlv", 1), tdl1_span(q)}),
                 tensor({Ed("dlv", 1), tdv2dlp_span(q)}),
                 tensor({Ed("dlp", 1), tdpv2dlv_span(q)})});
}
Expr k_ff_v2inv(i64 q) { return tensor({Pld("v2", 2 * q * q - 2), lambda_star(q)}); }
Expr coker_r1(i64 q)
{
    return tensor({Ed("ebar1", 2 * q - 1), Ed("lam2", 2 * q * q - 1), Pd("v2", 2 * q * q - 2)});
}
Expr ker_r1(i64 q)
{
    Expr pv2 = Pd("v2", 2 * q * q - 2);
    std::vector<std::pair<std::string, i64>> td;
    for (i64 d = 1; d < q * q - q; ++d)
        if (d % q != 0)
            td.push_back({"t^" + std::to_string(d), -2 * d});
    std::vector<std::pair<std::string, i64>> tdl2;
    for (i64 d = 1; d < q; ++d)
        tdl2.push_back({"t^" + std::to_string(d * q) + " l2", 2 * q * q - 1 - 2 * d * q});
    return dsum({coker_r1(q),
                 tensor({Ed("lam2", 2 * q * q - 1), span_list_d(std::move(td)), pv2}),
                 tensor({Ed("ebar1", 2 * q - 1), span_list_d(std::move(tdl2)), pv2})});
}

Expr by_name(const std::string& name, i64 p)
{
    if (name == "v1_thh_zp") return v1_thh_zp(p);
    if (name == "v1_thh_z") return v1_thh_z(p);
    if (name == "v1_thh_ell") return v1_thh_ell(p);
    if (name == "v1_thh_ellp") return v1_thh_ellp(p);
    if (name == "tc_zp") return tc_zp(p);
    if (name == "tc_z") return tc_z(p);
    if (name == "tc_zq") return tc_zq(p);
    if (name == "tc_ell") return tc_ell(p);
    if (name == "tc" || name == "tc_ellp") return tc_ellp(p);
    if (name == "k_theory" || name == "k_ellp") return k_ellp(p);
    if (name == "tc_ell_pinv") return tc_ell_pinv(p);
    if (name == "tc_ell_L") return tc_ell_L(p);
    if (name == "tc_ellp_Lp") return tc_ellp_Lp(p);
    if (name == "tc_ff") return tc_ff(p);
    if (name == "lambda_star") return lambda_star(p);
    if (name == "k_ff_v2inv") return k_ff_v2inv(p);
    if (name == "ker_r1") return ker_r1(p);
    if (name == "coker_r1") return coker_r1(p);
    throw CalcError("unknown expression name: " + name);
}

std::vector<std::string> expr_names()
{
    return {"v1_thh_zp", "v1_thh_z",  "v1_thh_ell", "v1_thh_ellp", "tc_zp",      "tc_z",
            "tc_zq",     "tc_ell",    "tc_ellp",    "k_theory",    "tc_ell_pinv", "tc_ell_L",
            "tc_ellp_Lp", "tc_ff",    "lambda_star", "k_ff_v2inv", "ker_r1",     "coker_r1"};
}

}  // namespace exprs

}  // namespace v1ss
