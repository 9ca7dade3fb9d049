#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cstring>
#include <string>

#include "doctest.h"
#include "v1ss/v1ss.h"

TEST_CASE("version and error strings")
{
    CHECK(std::string(v1ss_version()).rfind("v1ss", 0) == 0);
    CHECK(v1ss_last_error() != nullptr);
}

TEST_CASE("run through the C surface")
{
    v1ss_result* r = nullptr;
    CHECK(v1ss_run("cp_tate_Zp_v0", 5, 1, nullptr, &r) == V1SS_OK);
    REQUIRE(r != nullptr);
    CHECK(v1ss_result_passed(r) == 1);
    const char* report = v1ss_result_text(r, "report");
    REQUIRE(report != nullptr);
    CHECK(std::string(report).find("RESULT: pass") != std::string::npos);
    const char* tsv = v1ss_result_text(r, "tsv");
    REQUIRE(tsv != nullptr);
    CHECK(std::string(tsv).rfind("s\tt\tr\tdim\ttrusted", 0) == 0);
    CHECK(v1ss_result_text(r, "no-such-kind") == nullptr);
    v1ss_result_free(r);
}

TEST_CASE("window override")
{
    v1ss_result* r = nullptr;
    const long w[4] = {-20, 5, 0, 20};
    CHECK(v1ss_run("cp_tate_Zp_v0", 3, 1, w, &r) == V1SS_OK);
    CHECK(v1ss_result_passed(r) == 1);
    v1ss_result_free(r);
}

TEST_CASE("invalid inputs surface as EINVAL with a message")
{
    v1ss_result* r = nullptr;
    CHECK(v1ss_run("made_up", 5, 1, nullptr, &r) == V1SS_EINVAL);
    CHECK(r == nullptr);
    CHECK(std::string(v1ss_last_error()).find("unknown scenario") != std::string::npos);
    CHECK(v1ss_run(nullptr, 5, 1, nullptr, &r) == V1SS_EINVAL);
    CHECK(v1ss_run("cp_tate_ellp", 4, 1, nullptr, &r) == V1SS_EINVAL); /* not prime */
    CHECK(v1ss_series("unknown_expr", 5, 0, 10, &r) == V1SS_EINVAL);
    CHECK(v1ss_verify_all(nullptr, 0, &r) == V1SS_EINVAL);
}

TEST_CASE("series and lists")
{
    v1ss_result* r = nullptr;
    REQUIRE(v1ss_series("lambda_star", 3, 0, 20, &r) == V1SS_OK);
    const char* tsv = v1ss_result_text(r, "tsv");
    REQUIRE(tsv != nullptr);
    /* 24 basis classes split across degrees; spot check the top class */
    CHECK(std::string(tsv).find("17\t1") != std::string::npos);
    v1ss_result_free(r);

    REQUIRE(v1ss_list("scenarios", &r) == V1SS_OK);
    CHECK(std::string(v1ss_result_text(r, "report")).find("cpn_tate_ellp") !=
          std::string::npos);
    v1ss_result_free(r);
    REQUIRE(v1ss_list("expressions", &r) == V1SS_OK);
    CHECK(std::string(v1ss_result_text(r, "report")).find("k_theory") != std::string::npos);
    v1ss_result_free(r);
}

TEST_CASE("json scenario through the C surface")
{
    const char* js = R"JSON({
      "p": 3,
      "window": {"smin": -10, "smax": 5, "tmin": 0, "tmax": 12},
      "generators": [
        {"name": "x", "s": 0, "t": 1, "kind": "exterior"},
        {"name": "m", "s": 0, "t": 2, "kind": "polynomial"},
        {"name": "t", "s": -2, "t": 0, "kind": "laurent"}
      ],
      "rules": [
        {"page": 2, "source": {"generator": "x"},
         "target": [{"monomial": {"t": 1, "m": 1}}]}
      ]
    })JSON";
    v1ss_result* r = nullptr;
    REQUIRE(v1ss_run_json(js, &r) == V1SS_OK);
    CHECK(v1ss_result_passed(r) == 1);
    v1ss_result_free(r);
    CHECK(v1ss_run_json("{", &r) != V1SS_OK);
}

TEST_CASE("chart endpoints")
{
    v1ss_result* r = nullptr;
    REQUIRE(v1ss_chart("figure-10-3", 3, 1, nullptr, 0, &r) == V1SS_OK);
    const char* svg = v1ss_result_text(r, "svg");
    REQUIRE(svg != nullptr);
    CHECK(std::string(svg).find("dv2 dlp dlv") != std::string::npos);
    v1ss_result_free(r);
    /* untrusted chart without the flag is refused */
    CHECK(v1ss_chart("cp_tate_ellp", 3, 1, nullptr, 0, &r) == V1SS_EINVAL);
    REQUIRE(v1ss_chart("cp_tate_ellp", 3, 1, nullptr, 1, &r) == V1SS_OK);
    v1ss_result_free(r);
}

TEST_CASE("fraction field endpoint carries the caveat branch")
{
    v1ss_result* r = nullptr;
    REQUIRE(v1ss_fraction_field(3, -2, 60, 1, &r) == V1SS_OK);
    CHECK(v1ss_result_passed(r) == 1);
    v1ss_result_free(r);
    REQUIRE(v1ss_fraction_field(3, -2, 60, 0, &r) == V1SS_OK);
    CHECK(std::string(v1ss_result_text(r, "report")).find("caveat") != std::string::npos);
    v1ss_result_free(r);
}
