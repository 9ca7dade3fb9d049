#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "v1ss/expr.hpp"

using namespace v1ss;

TEST_CASE("series of E(x), |x| = 1")
{
    Prime p5(5);
    auto s = series_total(Ed("x", 1), 0, 4, p5);
    CHECK(s.at(0) == 1);
    CHECK(s.at(1) == 1);
    CHECK(s.at(2) == 0);
}

TEST_CASE("series of E(del, ebar1): the V(1)_* TC(Z/p) degrees")
{
    i64 q = 5;
    Prime p(q);
    auto e = tensor({Ed("del", -1), Ed("ebar1", 2 * q - 1)});
    auto s = series_total(e, -2, 2 * q, p);
    CHECK(s.at(-1) == 1);
    CHECK(s.at(0) == 1);
    CHECK(s.at(2 * q - 2) == 1);
    CHECK(s.at(2 * q - 1) == 1);
    i64 total = 0;
    for (auto& [d, c] : s.coeff)
        total += c;
    CHECK(total == 4);
}

TEST_CASE("tensor series is a convolution; bigraded evaluation")
{
    Prime p3(3);
    auto a = tensor({Pd("v2", 4), Ed("x", 1)});
    auto sa = series_total(a, 0, 12, p3);
    /* P(v2) (deg 4) x E(x) (deg 1): degrees 0,1,4,5,8,9,12 */
    CHECK(sa.at(0) == 1);
    CHECK(sa.at(1) == 1);
    CHECK(sa.at(4) == 1);
    CHECK(sa.at(5) == 1);
    CHECK(sa.at(2) == 0);

    auto big = series_bigraded(tensor({E("u", -1, 0), Pl("t", -2, 0)}), Window{-5, 2, 0, 0}, p3);
    CHECK(big[{-3, 0}] == 1); /* u t */
    CHECK(big[{-2, 0}] == 1); /* t */
    CHECK(big[{-1, 0}] == 1); /* u */
}

TEST_CASE("span family with valuation predicate")
{
    Prime p3(3);
    /* {t^j : vp(j) = 1}: j = +-3, +-6 in |2j| <= 20, but vp(6)=1, vp(9)=2 */
    auto f = span_family("t", -2, 0, 0, 0, Pred::vp_eq(1));
    auto big = series_bigraded(f, Window{-20, 20, 0, 0}, p3);
    CHECK(big.count({-6, 0}));
    CHECK(big.count({6, 0}));
    CHECK(big.count({-12, 0}));
    CHECK(!big.count({-18, 0})); /* vp(9) = 2 */
    CHECK(!big.count({-2, 0}));
    CHECK(!big.count({0, 0}));  /* vp(0) undefined, excluded by vp= */
}

TEST_CASE("Gamma(x) equals its truncated surrogates in a window")
{
    for (i64 q : {3, 5}) {
        Prime p(q);
        /* Gamma expands internally; compare against an explicit product of
         * P_p(gamma_{p^e}) factors over a window */
        auto g = Gamma("x", 0, 2);
        std::vector<Expr> facs;
        i64 w = 1;
        while (2 * w <= 40) {
            facs.push_back(Phd("g" + std::to_string(w), 2 * w, static_cast<int>(q)));
            w *= q;
        }
        auto h = tensor(facs);
        auto v = equal_in_window(g, h, 0, 40, p);
        CHECK(v.equal);
    }
}

TEST_CASE("divided powers: one basis element in each divisible degree")
{
    Prime p3(3);
    auto s = series_total(Gamma("x", 0, 2), 0, 30, p3);
    for (i64 n = 0; n <= 30; ++n)
        CHECK(s.at(n) == (n % 2 == 0 ? 1 : 0));
}

TEST_CASE("equal_in_window is reflexive and detects first mismatch")
{
    Prime p5(5);
    auto a = tensor({Ed("x", 3), Pd("y", 4)});
    CHECK(equal_in_window(a, a, 0, 40, p5).equal);
    auto b = tensor({Ed("x", 3), Pd("y", 6)});
    auto v = equal_in_window(a, b, 0, 40, p5);
    CHECK(!v.equal);
    CHECK(v.degree == 4);
}

TEST_CASE("free_rank_certificate on P(v2)")
{
    i64 q = 5;
    Prime p(q);
    i64 per = 2 * q * q - 2;
    auto c = free_rank_certificate(Pd("v2", per), per, 0, 3 * per, p);
    CHECK(c.periodic);
    CHECK(c.rank == 1);
    CHECK(c.euler == 1);
    CHECK(c.generator_degrees == std::multiset<i64>{0});

    /* non-periodic example: dims grow linearly */
    auto bad = tensor({Pd("a", 2), Pd("b", 2)});
    auto c2 = free_rank_certificate(bad, per, 0, 3 * per, p);
    CHECK(!c2.periodic);

    CHECK_THROWS_AS(free_rank_certificate(Pd("v2", per), per, 0, per, p), CalcError);
}

TEST_CASE("les_consistency: identity sequence and a p-th power twist")
{
    Prime p3(3);
    /* 0 -> A -> A -> 0 */
    auto A = tensor({Ed("x", 3), Pd("m", 2)});
    auto r = les_consistency(A, A, zero(), -2, 30, p3);
    CHECK(r.consistent);
    for (auto& [n, v] : r.boundary_rank)
        CHECK(v == 0);

    /* E(e0) x P(m0) -> E(l1) x P(m1) -> E(dlp) x P(k0), the V(0) THH row:
     * i(e0 m0^{p-1}) = l1, j(m1) = k0^p, del(dlp)=1, del(k0)=e0 */
    i64 q = 3;
    auto B0 = tensor({Ed("e0", 1), Pd("m0", 2)});
    auto B1 = tensor({Ed("l1", 2 * q - 1), Pd("m1", 2 * q)});
    auto B2 = tensor({Ed("dlp", 1), Pd("k0", 2)});
    auto rr = les_consistency(B0, B1, B2, -2, 60, p3);
    CHECK(rr.consistent);
}

TEST_CASE("cofiber_series: zero map and the TC(Z|Q) example")
{
    i64 q = 3;
    Prime p(q);
    /* zero map: dim C_n = dim B_n + dim A_{n-1} */
    auto A = Ed("a", 2);
    auto B = Pd("b", 4);
    CofiberMap zero_map;
    zero_map.kernel_families = {A};
    auto c = cofiber_series(A, B, zero_map, 0, 12, p);
    CHECK(c.at(0) == 1);
    CHECK(c.at(3) == 1); /* shifted a */
    CHECK(c.at(4) == 1);

    /* i_*: V(1) TC(Z/p) -> V(1) TC(Z_(p)), i(ebar1) = l1, i(1) = 0:
     * cofiber = E(del, dlp) + Fp{t^d l1 : 0 < d < p} */
    auto tc_zp = tensor({Ed("del", -1), Ed("ebar1", 2 * q - 1)});
    std::vector<std::pair<std::string, i64>> tdl1;
    for (i64 d = 1; d < q; ++d)
        tdl1.push_back({"t^" + std::to_string(d) + " l1", 2 * q - 1 - 2 * d});
    auto tc_z = dsum({tensor({Ed("del", -1), Ed("l1", 2 * q - 1)}), span_list_d(tdl1)});
    CofiberMap f;
    f.images = {{span_list_d({{"ebar1", 2 * q - 1}}), span_list_d({{"l1", 2 * q - 1}})},
                {span_list_d({{"del ebar1", 2 * q - 2}}), span_list_d({{"del l1", 2 * q - 2}})}};
    f.kernel_families = {tensor({Ed("del", -1)})};
    auto cz = cofiber_series(tc_zp, tc_z, f, -2, 20, p);
    auto want = dsum({tensor({Ed("del", -1), Ed("dlp", 1)}), span_list_d(tdl1)});
    auto ws = series_total(want, -2, 20, p);
    for (i64 n = -2; n <= 20; ++n)
        CHECK(cz.at(n) == ws.at(n));

    /* degree mismatch rejected */
    CofiberMap badmap;
    badmap.images = {{span_list_d({{"ebar1", 2 * q - 1}}), span_list_d({{"l1", 2 * q - 3}})}};
    badmap.kernel_families = {tensor({Ed("del", -1)})};
    CHECK_THROWS_AS(cofiber_series(tc_zp, tc_z, badmap, -2, 20, p), CalcError);
}

TEST_CASE("exactness inequality for cofiber outputs")
{
    Prime p3(3);
    auto A = tensor({Ed("a", 2), Pd("m", 4)});
    auto B = tensor({Ed("b", 3), Pd("m", 4)});
    CofiberMap zm;
    zm.kernel_families = {A};
    auto c = cofiber_series(A, B, zm, 0, 30, p3);
    auto sa = series_total(A, -1, 30, p3);
    auto sb = series_total(B, 0, 30, p3);
    for (i64 n = 0; n <= 30; ++n)
        CHECK(c.at(n) <= sb.at(n) + sa.at(n - 1));
}

TEST_CASE("equal_in_window is symmetric and transitive on equals")
{
    Prime p3(3);
    auto a = tensor({Ed("x", 3), Pd("m", 4)});
    auto b = dsum({Pd("m", 4), shift(0, 3, Pd("m", 4))}); /* same series */
    auto c = tensor({span_list_d({{"1", 0}, {"x", 3}}), Pd("m", 4)});
    CHECK(equal_in_window(a, b, 0, 40, p3).equal);
    CHECK(equal_in_window(b, a, 0, 40, p3).equal);
    CHECK(equal_in_window(b, c, 0, 40, p3).equal);
    CHECK(equal_in_window(a, c, 0, 40, p3).equal);
}
