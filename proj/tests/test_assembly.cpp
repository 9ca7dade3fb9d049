#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "v1ss/assemble.hpp"

using namespace v1ss;

TEST_CASE("rho values and recursions")
{
    Prime p5(5), p3(3);
    CHECK(rho(-1, p5) == 1);
    CHECK(rho(0, p5) == 0);
    CHECK(rho(1, p5) == 21); /* p^2 - p + 1 */
    CHECK(rho(2, p5) == 25);
    CHECK(rho(-1, p3) == 1);
    CHECK(rho(1, p3) == 7);
    CHECK(rho(2, p3) == 9);
    CHECK(rho(3, p3) == 61);
    CHECK(rho(4, p3) == 90); /* (3^6 - 9)/8 */
    for (i64 q : {3, 5, 7}) {
        Prime p(q);
        for (i64 k = 0; k <= 3; ++k) {
            CHECK(rho(2 * k + 1, p) == q * q * rho(2 * k - 1, p) - q + 1);
            CHECK(rho(2 * k + 2, p) == q * q * rho(2 * k, p) + q * q);
        }
    }
}

TEST_CASE("series of the TC / K closed forms")
{
    for (i64 q : {3, 5}) {
        Prime p(q);
        i64 per = 2 * q * q - 2;
        /* K-theory: rank 2p^2-2p+8, euler 0 */
        auto ck = free_rank_certificate(exprs::k_ellp(q), per, -2, 3 * per + 2 * q, p);
        CHECK(ck.periodic);
        CHECK(ck.rank == 2 * q * q - 2 * q + 8);
        CHECK(ck.euler == 0);
        /* TC(ff): rank 2p^2+6, euler 0 */
        auto cf = free_rank_certificate(exprs::tc_ff(q), per, -2, 3 * per + 2 * q, p);
        CHECK(cf.periodic);
        CHECK(cf.rank == 2 * q * q + 6);
        CHECK(cf.euler == 0);
    }
    /* frozen spot values */
    CHECK(free_rank_certificate(exprs::k_ellp(5), 48, -2, 160, Prime(5)).rank == 48);
    CHECK(free_rank_certificate(exprs::k_ellp(3), 16, -2, 60, Prime(3)).rank == 20);
    CHECK(free_rank_certificate(exprs::tc_ff(5), 48, -2, 160, Prime(5)).rank == 56);
    CHECK(free_rank_certificate(exprs::tc_ff(3), 16, -2, 60, Prime(3)).rank == 24);
}

TEST_CASE("K-theory generator degrees in the first row")
{
    i64 q = 5;
    Prime p(q);
    auto cert = free_rank_certificate(exprs::k_ellp(q), 2 * q * q - 2, -2, 200, p);
    /* first row generators 1, del v2, del l2, l2 (x) E(ebar1); degrees can
     * collide with the t-power rows, so check presence and the exact total */
    CHECK(cert.generator_degrees.count(0) == 1);
    CHECK(cert.generator_degrees.count(2 * q - 1) >= 1);          /* ebar1 */
    CHECK(cert.generator_degrees.count(2 * q * q - 3) >= 1);      /* del v2 */
    CHECK(cert.generator_degrees.count(2 * q * q - 2) >= 1);      /* del l2 */
    CHECK(cert.generator_degrees.count(2 * q * q - 1) >= 1);      /* l2 */
    CHECK(static_cast<i64>(cert.generator_degrees.size()) == 2 * q * q - 2 * q + 8);
}

TEST_CASE("tf tower and the TC assembly")
{
    for (i64 q : {3, 5}) {
        i64 hi = 3 * (2 * q * q - 2) + 2 * q;
        auto tc = tc_assembly(q, hi);
        for (auto& c : tc.checks) {
            INFO(c.label, " p=", q, " ", c.detail);
            CHECK(c.pass);
        }
        auto tf = tf_kernel_cokernel(q, hi);
        CHECK(tf.tower_surjections_ok);
        CHECK(tf.tower_depth >= 2);
        Prime p(q);
        /* coker = E(ebar1, lam2) (x) P(v2) */
        CHECK(equal_in_window(tf.coker, exprs::coker_r1(q), -2, hi, p).equal);
        /* ker rank over P(v2): 4 + 2(p-1)^2 + 2(p-1) */
        auto cert = free_rank_certificate(tf.ker, 2 * q * q - 2, -2 * q * q, hi, p);
        CHECK(cert.periodic);
        CHECK(cert.rank == 4 + 2 * (q - 1) * (q - 1) + 2 * (q - 1));
    }
    /* ker rank at p=5: 4 + 32 + 8 = 44 */
    auto c5 = free_rank_certificate(exprs::ker_r1(5), 48, -80, 200, Prime(5));
    CHECK(c5.rank == 44);
}

TEST_CASE("K assembly and the exactness gap to TC")
{
    for (i64 q : {3, 5}) {
        auto k = k_theory_assembly(q, 3 * (2 * q * q - 2) + 2 * q);
        for (auto& c : k.checks) {
            INFO(c.label, " p=", q, " ", c.detail);
            CHECK(c.pass);
        }
    }
}

TEST_CASE("restriction-map summand decomposition")
{
    for (i64 q : {3, 5}) {
        auto rep = prop_8_2_map(q, Window{-3 * q * q * q * q, 40, 0, 4 * q * q * q});
        for (auto& c : rep.checks) {
            INFO(c.label, " p=", q);
            CHECK(c.pass);
        }
        CHECK(rep.b_families == 2 * (q - 1) * (q - 1));
        CHECK(rep.c_families == 2 * (q - 1));
    }
}

TEST_CASE("fraction field assembly")
{
    for (i64 q : {3, 5}) {
        auto ff = fraction_field_assembly(q, -2, 3 * (2 * q * q - 2) + 4 * q, true);
        for (auto& c : ff.checks) {
            INFO(c.label, " p=", q, " ", c.detail);
            CHECK(c.pass);
        }
        CHECK(ff.trc_kernel_dim == 4);
    }
    /* the caveat branch still reports consistent series */
    auto raw = fraction_field_assembly(3, -2, 60, false);
    CHECK(!raw.dlog_relation_assumed);
    CHECK(raw.pass());
    Prime p3(3);
    auto a = series_total(raw.tc_ff, -2, 60, p3);
    for (i64 n = -2; n <= 60; ++n)
        CHECK(a.at(n) == raw.tc_ff_series.at(n));
}

TEST_CASE("lambda_star spot checks")
{
    Prime p3(3);
    auto ls = series_total(exprs::lambda_star(3), 0, 20, p3);
    i64 total = 0, even = 0, odd = 0;
    for (auto& [n, c] : ls.coeff) {
        total += c;
        (((n % 2) + 2) % 2 == 0 ? even : odd) += c;
    }
    CHECK(total == 24);
    CHECK(even == 12);
    CHECK(odd == 12);
}

TEST_CASE("checker: no lower-filtration classes share the degree of y")
{
    CHECK(lemma_7_8_check(5, 1).empty());
    CHECK(lemma_7_8_check(3, 1).empty());
    CHECK(lemma_7_8_check(3, 2).empty());
    CHECK(lemma_7_8_check(5, 2).empty());
    /* saturation: doubling the index bound finds nothing new */
    CHECK(lemma_7_8_check(5, 1, 48).empty());
    CHECK(lemma_7_8_check(3, 2, 48).empty());
}

TEST_CASE("checker: the unique candidate source for the stray cycle")
{
    for (auto [q, n] : std::vector<std::pair<i64, int>>{{5, 1}, {3, 1}, {3, 2}}) {
        Prime p(q);
        auto cands = lemma_7_9_check(q, n);
        /* one candidate per i, all in the ebar1 family with e = 0 */
        std::set<i64> is;
        for (auto& c : cands) {
            CHECK(c.family == "ebar1 t^j (tmu2)^e");
            CHECK(c.e == 0);
            i64 pw = 1;
            for (int x = 0; x < 2 * n + 1; ++x)
                pw *= q;
            CHECK(c.j == pw - pw * q + c.i);
            CHECK(c.page == 2 * rho(2 * n + 1, p));
            CHECK(!is.count(c.i));
            is.insert(c.i);
        }
        CHECK(!cands.empty());
        /* saturation */
        auto more = lemma_7_9_check(q, n, 48);
        for (auto& c : more)
            CHECK(c.family == "ebar1 t^j (tmu2)^e");
    }
    /* p=5, n=1, i=-p^2: j = p^3 - p^4 - p^2 */
    auto cands = lemma_7_9_check(5, 1);
    bool found = false;
    for (auto& c : cands)
        if (c.i == -25) {
            found = true;
            CHECK(c.j == 125 - 625 - 25);
        }
    CHECK(found);
}

TEST_CASE("conjectural THH localization square is exactness-consistent")
{
    for (i64 q : {3, 5}) {
        auto rep = conjecture_5_6_consistency(q, -2, q == 3 ? 60 : 40);
        CHECK(rep.conjectural);
        for (auto& r : rep.rows) {
            INFO(r.label, " p=", q, " ", r.detail);
            CHECK(r.pass);
        }
        /* iterated cofiber = E(dlogp, dlogv1) (x) P(kappa0) */
        CHECK(rep.iterated_cofiber.at(0) == 1);
        CHECK(rep.iterated_cofiber.at(1) == 2);
        CHECK(rep.iterated_cofiber.at(2) == 2); /* kappa0 and dlogp dlogv1 */
        CHECK(rep.iterated_cofiber.at(3) == 2);
    }
}

TEST_CASE("chart placement data at p=3")
{
    auto rows = figure_10_3_data(3);
    int proper = 0, marker = 0;
    std::map<std::pair<i64, i64>, std::vector<std::string>> by_cell;
    for (auto& r : rows) {
        if (r.v2_marker) {
            ++marker;
            CHECK(r.s == 0);
            CHECK(r.t == 16);
            continue;
        }
        ++proper;
        by_cell[{r.s, r.t}].push_back(r.label);
    }
    CHECK(proper == 24);
    CHECK(marker == 1);
    /* column populations: s = -3: 1, s = -2: 11, s = -1: 11, s = 0: 1 */
    std::map<i64, int> col;
    for (auto& [cell, ls] : by_cell)
        col[cell.first] += static_cast<int>(ls.size());
    CHECK(col[-3] == 1);
    CHECK(col[-2] == 11);
    CHECK(col[-1] == 11);
    CHECK(col[0] == 1);
    /* the corners and the colon groups of the figure */
    CHECK(by_cell[{-3, 20}] == std::vector<std::string>{"dv2 dlp dlv"});
    CHECK(by_cell[{0, 0}] == std::vector<std::string>{"1"});
    auto g1 = by_cell[{-2, 18}];
    std::sort(g1.begin(), g1.end());
    CHECK(g1 == std::vector<std::string>{"dv2 dlp", "dv2 dlv", "t v2 dlp dlv"});
    auto g2 = by_cell[{-1, 16}];
    std::sort(g2.begin(), g2.end());
    CHECK(g2 == std::vector<std::string>{"dv2", "t v2 dlp"});
    auto g3 = by_cell[{-1, 2}];
    std::sort(g3.begin(), g3.end());
    CHECK(g3 == std::vector<std::string>{"dlp", "dlv", "t^2 l1"});
    auto g4 = by_cell[{-2, 4}];
    std::sort(g4.begin(), g4.end());
    CHECK(g4 == std::vector<std::string>{"dlp dlv", "t^2 l1 dlv"});
    /* singles from the figure */
    CHECK(by_cell[{-1, 4}] == std::vector<std::string>{"t l1"});
    CHECK(by_cell[{-2, 6}] == std::vector<std::string>{"t l1 dlv"});
    CHECK(by_cell[{-1, 12}] == std::vector<std::string>{"t^3 v2 dlv"});
    CHECK(by_cell[{-2, 8}] == std::vector<std::string>{"t^6 v2 dlp dlv"});
    CHECK(by_cell[{-1, 6}] == std::vector<std::string>{"t^6 v2 dlv"});
}

TEST_CASE("chart row count equals the Lambda_* dimension count")
{
    for (i64 q : {3, 5}) {
        auto rows = figure_10_3_data(q);
        i64 proper = 0;
        for (auto& r : rows)
            if (!r.v2_marker)
                ++proper;
        Prime p(q);
        auto ls = series_total(exprs::lambda_star(q), -2, 2 * q * q + 4, p);
        i64 total = 0;
        for (auto& [n, c] : ls.coeff)
            total += c;
        CHECK(proper == total);
        /* placements agree with the series degreewise */
        std::map<i64, i64> by_deg;
        for (auto& r : rows)
            if (!r.v2_marker)
                by_deg[r.t + r.s] += 1;
        for (auto& [n, c] : ls.coeff)
            CHECK(by_deg[n] == c);
    }
}

TEST_CASE("localization comparison at dimension level (the mu2-inverted THH)")
{
    /* the C_p-Tate abutment is the mu2-localization of V(1)_* THH(l/p):
     * the rewritten Einf and the localized module have the same total-degree
     * series; representative-level identifications stay annotations */
    for (i64 q : {3, 5}) {
        Prime p(q);
        std::vector<Expr> einf_parts;
        /* (E(u1) (x) Fp{t^-i} + E(ebar1)) (x) E(lam2) (x) P(t^{+-p^2}) */
        std::vector<std::pair<std::string, i64>> ti;
        for (i64 i = 1; i < q; ++i) {
            ti.push_back({"t^-" + std::to_string(i), 2 * i});
            ti.push_back({"u t^-" + std::to_string(i), 2 * i - 1});
        }
        ti.push_back({"1", 0});
        ti.push_back({"ebar1", 2 * q - 1});
        auto einf = tensor({span_list_d(std::move(ti)), Ed("lam2", 2 * q * q - 1),
                            Pld("tp2", 2 * q * q)});
        /* mu2-inverted THH: the 2p module classes (x) E(lam2) (x) P(mu2^{+-1}) */
        std::vector<std::pair<std::string, i64>> cls;
        for (i64 i = 0; i < q; ++i) {
            cls.push_back({"mu0^" + std::to_string(i), 2 * i});
            if (i < q - 1)
                cls.push_back({"eps0 mu0^" + std::to_string(i), 2 * i + 1});
        }
        cls.push_back({"ebar1", 2 * q - 1});
        auto loc = tensor({span_list_d(std::move(cls)), Ed("lam2", 2 * q * q - 1),
                           Pld("mu2", 2 * q * q)});
        auto v = equal_in_window(einf, loc, -4 * q * q, 4 * q * q, p);
        CHECK(v.equal);
    }
}

TEST_CASE("euler characteristic of P(v2)-certificates pairs even with odd generators")
{
    for (i64 q : {3, 5}) {
        Prime p(q);
        i64 hi = 3 * (2 * q * q - 2) + 4 * q;
        for (const std::string name :
             {"tc_ellp", "k_theory", "tc_ell", "tc_ell_pinv", "tc_ell_L", "tc_ellp_Lp",
              "tc_ff", "ker_r1", "coker_r1"}) {
            auto cert =
                free_rank_certificate(exprs::by_name(name, q), 2 * q * q - 2, -2 * q * q, hi, p);
            REQUIRE(cert.periodic);
            i64 even = 0, odd = 0;
            for (i64 d : cert.generator_degrees)
                (((d % 2) + 2) % 2 == 0 ? even : odd)++;
            INFO(name, " p=", q);
            CHECK((cert.euler == 0) == (even == odd));
        }
    }
}

TEST_CASE("the THH module is free of rank 2p over the lam1-quotient")
{
    for (i64 q : {3, 5}) {
        Prime p(q);
        /* dims in degrees 0..2p-1 are exactly the 2p module generators */
        auto s = series_total(exprs::v1_thh_ellp(q), 0, 2 * q - 1, p);
        i64 total = 0;
        for (auto& [n, c] : s.coeff)
            total += c;
        CHECK(total == 2 * q);
        /* and the series factors through E(lam2) (x) P(mu2) */
        std::vector<std::pair<std::string, i64>> cls;
        for (i64 i = 0; i < q; ++i) {
            cls.push_back({"mu0^" + std::to_string(i), 2 * i});
            if (i < q - 1)
                cls.push_back({"eps0 mu0^" + std::to_string(i), 2 * i + 1});
        }
        cls.push_back({"ebar1", 2 * q - 1});
        auto v = equal_in_window(
            exprs::v1_thh_ellp(q),
            tensor({span_list_d(std::move(cls)), Ed("lam2", 2 * q * q - 1),
                    Pd("mu2", 2 * q * q)}),
            -2, 6 * q * q, p);
        CHECK(v.equal);
    }
}

TEST_CASE("ranks at p = 7")
{
    i64 q = 7;
    Prime p(q);
    i64 per = 2 * q * q - 2;
    auto ck = free_rank_certificate(exprs::k_ellp(q), per, -2, 3 * per, p);
    CHECK(ck.periodic);
    CHECK(ck.rank == 2 * q * q - 2 * q + 8); /* 92 */
    CHECK(ck.euler == 0);
    auto cf = free_rank_certificate(exprs::tc_ff(q), per, -2, 3 * per, p);
    CHECK(cf.rank == 2 * q * q + 6); /* 104 */
    CHECK(cf.euler == 0);
    Prime p7(7);
    auto ls = series_total(exprs::lambda_star(q), -2, 2 * q * q + 4, p7);
    i64 total = 0;
    for (auto& [n, c] : ls.coeff)
        total += c;
    CHECK(total == 2 * q * q + 6);
}
