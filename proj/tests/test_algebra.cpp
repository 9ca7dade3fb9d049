#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "v1ss/algebra.hpp"
#include "v1ss/expr.hpp"

using namespace v1ss;

namespace {

/* the C_p-Tate presentation for l/p in (t, tmu2) coordinates */
Presentation tate_pres(i64 q)
{
    Prime p(q);
    std::vector<GeneratorSpec> g = {
        {"u", -1, 0, GenKind::Exterior, 0, false},
        {"ebar1", 0, 2 * q - 1, GenKind::Exterior, 0, false},
        {"lam2", 0, 2 * q * q - 1, GenKind::Exterior, 0, false},
        {"eps0", 0, 1, GenKind::Exterior, 0, false},
        {"mu0", 0, 2, GenKind::Truncated, static_cast<int>(q), false},
        {"t", -2, 0, GenKind::Laurent, 0, false},
        {"tmu2", -2, 2 * q * q, GenKind::Polynomial, 0, false},
    };
    /* module factor: eps0^d mu0^i (d+2i <= 2p-2) plus ebar1 */
    SpanConstraint sc;
    sc.gens = {3, 4, 1};
    for (int d = 0; d <= 1; ++d)
        for (int i = 0; i + 1 < q; ++i)
            if (!(d == 1 && i == static_cast<int>(q) - 1))
                sc.allowed.push_back({d, i, 0});
    sc.allowed.push_back({0, 0, 1});
    return Presentation(p, std::move(g), {sc});
}

}  // namespace

TEST_CASE("presentation validation")
{
    Prime p5(5);
    CHECK_THROWS_AS(Presentation(p5, {{"x", 0, 2, GenKind::Exterior, 0, false}}), CalcError);
    CHECK_THROWS_AS(Presentation(p5, {{"x", 0, 3, GenKind::Polynomial, 0, false}}), CalcError);
    CHECK_THROWS_AS(Presentation(p5, {{"x", 0, 2, GenKind::Truncated, 1, false}}), CalcError);
    CHECK_THROWS_AS(Presentation(p5,
                                 {{"x", 0, 2, GenKind::Polynomial, 0, false},
                                  {"x", 0, 4, GenKind::Polynomial, 0, false}}),
                    CalcError);
}

TEST_CASE("degree of monomials")
{
    Prime p5(5);
    Presentation P(p5, {{"u1", -1, 0, GenKind::Exterior, 0, false},
                        {"t", -2, 0, GenKind::Laurent, 0, false},
                        {"mu2", 0, 50, GenKind::Polynomial, 0, false}});
    CHECK(P.degree(P.unit()) == std::pair<i64, i64>{0, 0});
    /* u1 t^{-1} has bidegree (1, 0), odd total degree */
    auto m = P.monomial({{"u1", 1}, {"t", -1}});
    CHECK(P.degree(m) == std::pair<i64, i64>{1, 0});
    CHECK(P.mono_odd(m));
    /* t mu2: (-2, 2p^2), total 2p^2-2 = |v_2| */
    auto w = P.monomial({{"t", 1}, {"mu2", 1}});
    CHECK(P.degree(w) == std::pair<i64, i64>{-2, 50});
}

TEST_CASE("multiplication: unit, Koszul sign, exterior square")
{
    Prime p5(5);
    Presentation P(p5, {{"lam1", 0, 9, GenKind::Exterior, 0, false},
                        {"lam2", 0, 49, GenKind::Exterior, 0, false},
                        {"mu2", 0, 50, GenKind::Polynomial, 0, false}});
    auto l1 = P.monomial({{"lam1", 1}});
    auto l2 = P.monomial({{"lam2", 1}});
    /* 1 * x = x */
    auto e = mono_mul(P, P.unit(), l1);
    REQUIRE(e.terms.size() == 1);
    CHECK(e.terms[0].c == 1);
    /* lam2 * lam1 = -(lam1 lam2): normalizing gives coefficient p-1 */
    auto f = mono_mul(P, l2, l1);
    REQUIRE(f.terms.size() == 1);
    CHECK(f.terms[0].c == 4);
    auto g = mono_mul(P, l1, l2);
    CHECK(g.terms[0].c == 1);
    /* exterior square vanishes */
    CHECK(mono_mul(P, l1, l1).zero());
}

TEST_CASE("multiplication: randomized associativity / graded commutativity / degree additivity")
{
    Prime p3(3);
    Presentation P(p3, {{"a", -1, 0, GenKind::Exterior, 0, false},
                        {"b", 0, 5, GenKind::Exterior, 0, false},
                        {"c", 0, 2, GenKind::Truncated, 3, false},
                        {"t", -2, 0, GenKind::Laurent, 0, false},
                        {"w", -2, 18, GenKind::Polynomial, 0, false}});
    std::mt19937_64 rng(42);
    auto rand_mono = [&] {
        Expo e(5, 0);
        e[0] = static_cast<int16_t>(rng() % 2);
        e[1] = static_cast<int16_t>(rng() % 2);
        e[2] = static_cast<int16_t>(rng() % 3);
        e[3] = static_cast<int16_t>(static_cast<i64>(rng() % 11) - 5);
        e[4] = static_cast<int16_t>(rng() % 5);
        return Monomial{e};
    };
    int checked_assoc = 0;
    for (int it = 0; it < 11000; ++it) {
        Monomial x = rand_mono(), y = rand_mono(), z = rand_mono();
        Element xy = mono_mul(P, x, y);
        Element yz = mono_mul(P, y, z);
        Element lhs = multiply(P, xy, element_of(P, z));
        Element rhs = multiply(P, element_of(P, x), yz);
        REQUIRE(lhs.terms.size() == rhs.terms.size());
        for (size_t i = 0; i < lhs.terms.size(); ++i) {
            REQUIRE(lhs.terms[i].m == rhs.terms[i].m);
            REQUIRE(lhs.terms[i].c == rhs.terms[i].c);
        }
        ++checked_assoc;
        /* graded commutativity */
        Element yx = mono_mul(P, y, x);
        bool xo = P.mono_odd(x), yo = P.mono_odd(y);
        i64 sign = (xo && yo) ? p3.p - 1 : 1;
        Element yx_signed = scale(P, yx, sign);
        REQUIRE(xy.terms.size() == yx_signed.terms.size());
        for (size_t i = 0; i < xy.terms.size(); ++i)
            REQUIRE(xy.terms[i].c == yx_signed.terms[i].c);
        /* degree additivity on nonzero products */
        if (!xy.zero()) {
            auto [xs, xt] = P.degree(x);
            auto [ys, yt] = P.degree(y);
            auto [ps, pt] = P.degree(xy.terms[0].m);
            REQUIRE(ps == xs + ys);
            REQUIRE(pt == xt + yt);
        }
    }
    CHECK(checked_assoc >= 10000);
}

TEST_CASE("divided power coefficient")
{
    Prime p3(3);
    CHECK(divided_power_coefficient(0, 7, p3) == 1);
    CHECK(divided_power_coefficient(1, 2, p3) == 0);   /* binomial(3,1) */
    CHECK(divided_power_coefficient(3, 6, p3) == 0);   /* binomial(9,3)=84 */
    Prime p5(5);
    CHECK(divided_power_coefficient(1, 4, p5) == 0);   /* binomial(5,1) */
    CHECK(divided_power_coefficient(2, 2, p5) == 1);   /* binomial(4,2)=6 */
}

TEST_CASE("expand_divided_powers")
{
    Prime p3(3);
    std::vector<GeneratorSpec> g = {{"stau0", 1, 1, GenKind::DividedPower, 0, false}};
    auto out = expand_divided_powers(p3, g, 30);
    REQUIRE(out.size() == 4); /* gamma_1, gamma_3, gamma_9, gamma_27 */
    CHECK(out[0].name == "stau0");
    CHECK(out[1].name == "g3(stau0)");
    CHECK(out[3].s == 27);
    for (auto& x : out) {
        CHECK(x.kind == GenKind::Truncated);
        CHECK(x.height == 3);
    }
}

TEST_CASE("enumerate_basis examples")
{
    Prime p5(5);
    /* E(lam2) at (0, 2p^2-1) -> [lam2] */
    Presentation P1(p5, {{"lam2", 0, 49, GenKind::Exterior, 0, false}});
    auto b1 = enumerate_basis(P1, 0, 49);
    REQUIRE(b1.size() == 1);
    CHECK(b1[0].e == Expo{1});

    /* E(u1) (x) P(t^{+-1}) at (-3, 0) -> [u1 t] */
    Presentation P2(p5, {{"u1", -1, 0, GenKind::Exterior, 0, false},
                         {"t", -2, 0, GenKind::Laurent, 0, false}});
    auto b2 = enumerate_basis(P2, -3, 0);
    REQUIRE(b2.size() == 1);
    CHECK(b2[0].e == Expo{1, 1});

    /* P(t^{+-1}) (x) P(mu2) at (-2p^2, 2p^2) -> [t^{p^2} mu2] */
    Presentation P3(p5, {{"t", -2, 0, GenKind::Laurent, 0, false},
                         {"mu2", 0, 50, GenKind::Polynomial, 0, false}});
    auto b3 = enumerate_basis(P3, -50, 50);
    REQUIRE(b3.size() == 1);
    CHECK(b3[0].e == Expo{25, 1});
}

TEST_CASE("window finiteness rejection")
{
    Prime p5(5);
    /* two Laurent generators with opposite bidegrees are rejected at load */
    CHECK_THROWS_AS(Presentation(p5, {{"x", -2, 0, GenKind::Laurent, 0, false},
                                      {"y", 2, 0, GenKind::Laurent, 0, false}}),
                    CalcError);
    Presentation Q(p5, {{"x", -2, 0, GenKind::Laurent, 0, false},
                        {"w", -2, 50, GenKind::Polynomial, 0, false}});
    CHECK_NOTHROW(Q.check_window_finite());
}

TEST_CASE("basis table over a window, span constraint")
{
    Prime p3(3);
    Presentation P = tate_pres(3);
    Window w{-10, 2, 0, 24};
    BasisTable tab(P, w);
    CHECK(tab.size() > 0);
    /* every monomial valid, in window, spans respected */
    for (uint32_t i = 0; i < tab.size(); ++i) {
        auto [s, t] = tab.bidegree_of(i);
        CHECK(w.contains(s, t));
        CHECK(P.mono_valid(tab.mono(i).e));
    }
    /* eps0 ebar1 monomials are excluded by the span */
    CHECK(!P.span_allowed(Expo{0, 1, 0, 1, 0, 0, 0}));
    CHECK(P.span_allowed(Expo{0, 1, 0, 0, 0, 0, 0}));
    CHECK(!P.span_allowed(Expo{0, 0, 0, 1, 2, 0, 0})); /* eps0 mu0^{p-1} excluded */
    /* bucket at (0,0): only the unit */
    CHECK(tab.bucket_dim(0, 0) == 1);
    /* E^2 of the C_3-Tate module: at (0, 2p-1)=(0,5): ebar1 */
    CHECK(tab.bucket_dim(0, 5) == 1);
    /* at (-2, 0): t and nothing else */
    CHECK(tab.bucket_dim(-2, 0) == 1);
    /* index round trip */
    for (uint32_t i = 0; i < tab.size(); ++i)
        CHECK(*tab.index_of(tab.mono(i)) == i);
}

TEST_CASE("annihilated generators kill products")
{
    Prime p5(5);
    Presentation P(p5, {{"lam1", 0, 9, GenKind::Exterior, 0, true},
                        {"t", -2, 0, GenKind::Laurent, 0, false}});
    auto l = P.monomial({{"lam1", 1}});
    CHECK(element_of(P, l).zero());
    CHECK(mono_mul(P, l, P.monomial({{"t", 3}})).zero());
}

TEST_CASE("cross-module consistency: basis counts match series coefficients")
{
    Prime p3(3);
    Presentation P(p3, {{"u", -1, 0, GenKind::Exterior, 0, false},
                        {"lam2", 0, 17, GenKind::Exterior, 0, false},
                        {"t", -2, 0, GenKind::Laurent, 0, false},
                        {"tmu2", -2, 18, GenKind::Polynomial, 0, false}});
    Window w{-20, 4, 0, 40};
    BasisTable tab(P, w);
    auto expr = tensor({E("u", -1, 0), E("lam2", 0, 17), Pl("t", -2, 0), v1ss::P("tmu2", -2, 18)});
    auto want = series_bigraded(expr, w, p3);
    for (auto& [bd, c] : want)
        CHECK(tab.bucket_dim(bd.first, bd.second) == c);
    for (auto bd : tab.bidegrees()) {
        auto it = want.find(bd);
        CHECK(tab.bucket_dim(bd.first, bd.second) == (it == want.end() ? 0 : it->second));
    }
}
