#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "v1ss/catalog.hpp"
#include "v1ss/emit.hpp"

using namespace v1ss;

TEST_CASE("build: rule schedules match the length function")
{
    /* cp_tate_ellp at p=5: pages 2, 42, 50, 51 */
    auto sc = build_scenario("cp_tate_ellp", 5, 1);
    CHECK(sc.rule_pages() == std::vector<i64>{2, 42, 50, 51});

    /* cpn_tate_ellp at p=3, n=2: pages 2, 14, 18, 122, 180, 181 */
    auto sc2 = build_scenario("cpn_tate_ellp", 3, 2);
    CHECK(sc2.rule_pages() == std::vector<i64>{2, 14, 18, 122, 180, 181});

    /* hfp: same page numbers, mu2-indexed families */
    auto sc3 = build_scenario("cpn_hfp_ellp", 3, 2);
    CHECK(sc3.rule_pages() == std::vector<i64>{2, 14, 18, 122, 180, 181});

    /* Boekstedt: the single d^{p-1} page */
    auto sc4 = build_scenario("bokstedt_Zp", 3, 1);
    CHECK(sc4.rule_pages() == std::vector<i64>{2});
    auto sc5 = build_scenario("bokstedt_Zp", 5, 1);
    CHECK(sc5.rule_pages() == std::vector<i64>{4});

    CHECK_THROWS_AS(build_scenario("nonsense", 5, 1), CalcError);
    CHECK_THROWS_AS(build_scenario("cpn_tate_ellp", 5, 0), CalcError);
}

TEST_CASE("build: the mu2-indexed differential family shapes")
{
    i64 q = 3;
    int n = 2;
    auto sc = build_scenario("cpn_hfp_ellp", q, n);
    Prime p(q);
    /* find the k=2 odd family: page 2 rho(3) = 122, source offset p^4 - p^3 */
    bool found = false;
    for (const auto& r : sc.rules) {
        if (r.page != 2 * rho(3, p) || r.mode != DiffRule::Family)
            continue;
        REQUIRE(r.free_gen == "mu2");
        CHECK(r.src_offset == 81 - 27);
        CHECK(r.pred.type == Pred::VpEq);
        CHECK(r.pred.k == 2);
        REQUIRE(r.targets.size() == 1);
        CHECK(r.targets[0].fixed ==
              std::vector<std::pair<std::string, i64>>{{"tmu2", rho(3, p)}});
        found = true;
    }
    CHECK(found);
}

TEST_CASE("scenario annotations carry the axiom lists")
{
    auto sc = build_scenario("cpn_tate_ellp", 3, 1);
    REQUIRE(sc.annotations.count("infinite_cycles"));
    auto ic = sc.annotations.at("infinite_cycles");
    CHECK(std::find(ic.begin(), ic.end(), "lam2") != ic.end());
    CHECK(std::find(ic.begin(), ic.end(), "tmu2") != ic.end());
    CHECK(std::find(ic.begin(), ic.end(), "ebar1") != ic.end());
    CHECK(sc.annotations.count("module_annihilation"));
    /* p=3 runs carry the below-paper-bound note */
    CHECK(!sc.notes.empty());
    CHECK(build_scenario("cp_tate_ellp", 5, 1).notes.empty());
}

TEST_CASE("full runs: every catalog scenario verifies at p=3")
{
    for (const auto& id : scenario_ids()) {
        auto sc = build_scenario(id, 3, 1);
        SsEngine eng(sc);
        auto rr = eng.run();
        INFO("scenario ", id);
        CHECK(rr.all_pass());
        for (const auto& rep : rr.checkpoint_reports) {
            INFO(id, " / ", rep.label);
            CHECK(rep.pass);
            CHECK(rep.total_mismatches == 0);
        }
    }
}

TEST_CASE("trusted regions are nonempty and exclude the window rim")
{
    auto sc = build_scenario("cp_tate_ellp", 3, 1);
    SsEngine eng(sc);
    auto rr = eng.run();
    const auto& last = rr.history.back();
    int trusted = 0, untrusted = 0;
    for (auto& [bd, tr] : last.trusted)
        (tr ? trusted : untrusted)++;
    CHECK(trusted > 0);
    CHECK(untrusted > 0);
    /* within max differential length of the s-edge nothing survives as
     * trusted (the t-floor is protected by structural vanishing) */
    i64 m = 19; /* 2p^2 + 1 */
    for (auto& [bd, tr] : last.trusted) {
        if (!tr)
            continue;
        CHECK(bd.first - (-m) >= sc.window.smin);
        CHECK(bd.first + m <= sc.window.smax + m); /* smax-side partners may be empty */
    }
}

TEST_CASE("stabilized page: dims at trusted spots match a direct recount")
{
    /* Einf of C_p-Tate for l at p=3: E(lam1, lam2) x P(t^{+-p^2}) */
    auto sc = build_scenario("cp_tate_ell", 3, 1);
    SsEngine eng(sc);
    auto rr = eng.run();
    const auto& last = rr.history.back();
    /* (0,0): the unit survives */
    CHECK(last.dim(0, 0) == 1);
    /* (-18, 0): t^9 */
    CHECK(last.dim(-18, 0) == 1);
    /* (-2, 0): t died */
    CHECK(last.dim(-2, 0) == 0);
    /* (0, 5): lam1 */
    CHECK(last.dim(0, 5) == 1);
}

TEST_CASE("pages TSV format and determinism")
{
    auto sc = build_scenario("cp_tate_Zp_v0", 3, 1);
    SsEngine eng(sc);
    auto rr = eng.run();
    auto tsv = pages_tsv(rr);
    CHECK(tsv.rfind("s\tt\tr\tdim\ttrusted\n", 0) == 0);
    SsEngine eng2(sc);
    auto rr2 = eng2.run();
    CHECK(pages_tsv(rr2) == tsv);
    CHECK(run_report_text(sc, rr) == run_report_text(sc, rr2));
    CHECK(pages_json(sc, rr) == pages_json(sc, rr2));
}
