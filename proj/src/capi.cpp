#include "v1ss/v1ss.h"

#include <map>
#include <string>

#include "v1ss/emit.hpp"
#include "v1ss/jsonio.hpp"
#include "v1ss/verify.hpp"

using namespace v1ss;

struct v1ss_result {
    bool passed = false;
    std::map<std::string, std::string> texts;
};

namespace {

thread_local std::string g_last_error;

v1ss_status fail(v1ss_status st, const std::string& msg)
{
    g_last_error = msg;
    return st;
}

template <typename F>
v1ss_status guarded(v1ss_result** out, F&& f)
{
    if (!out)
        return fail(V1SS_EINVAL, "null result pointer");
    *out = nullptr;
    try {
        auto r = std::make_unique<v1ss_result>();
        f(*r);
        *out = r.release();
        g_last_error.clear();
        return V1SS_OK;
    } catch (const CalcError& e) {
        return fail(V1SS_EINVAL, e.what());
    } catch (const std::exception& e) {
        return fail(V1SS_EFAIL, e.what());
    }
}

Window window_from(const long w[4])
{
    return Window{w[0], w[1], w[2], w[3]};
}

void fill_run(v1ss_result& r, const Scenario& sc, const RunResult& rr)
{
    r.passed = rr.all_pass();
    r.texts["report"] = run_report_text(sc, rr);
    r.texts["json"] = run_report_json(sc, rr);
    r.texts["tsv"] = pages_tsv(rr);
    r.texts["pages_json"] = pages_json(sc, rr);
}

}  // namespace

extern "C" {

const char* v1ss_version(void) { return "v1ss 1.0.0"; }

const char* v1ss_last_error(void) { return g_last_error.c_str(); }

v1ss_status v1ss_run(const char* scenario_id, long p, long n, const long window[4],
                     v1ss_result** out)
{
    if (!scenario_id)
        return fail(V1SS_EINVAL, "null scenario id");
    return guarded(out, [&](v1ss_result& r) {
        Scenario sc = window ? build_scenario(scenario_id, p, static_cast<int>(n),
                                              window_from(window))
                             : build_scenario(scenario_id, p, static_cast<int>(n));
        SsEngine eng(sc);
        RunResult rr = eng.run();
        fill_run(r, sc, rr);
    });
}

v1ss_status v1ss_run_json(const char* json_text, v1ss_result** out)
{
    if (!json_text)
        return fail(V1SS_EINVAL, "null scenario json");
    return guarded(out, [&](v1ss_result& r) {
        Scenario sc = scenario_from_json(json_text);
        SsEngine eng(sc);
        RunResult rr = eng.run();
        fill_run(r, sc, rr);
    });
}

v1ss_status v1ss_series(const char* expr_name, long p, long lo, long hi, v1ss_result** out)
{
    if (!expr_name)
        return fail(V1SS_EINVAL, "null expression name");
    return guarded(out, [&](v1ss_result& r) {
        Prime pp(p);
        Expr e = exprs::by_name(expr_name, p);
        PoincareSeries s = series_total(e, lo, hi, pp);
        r.passed = true;
        r.texts["tsv"] = series_tsv(s);
        r.texts["json"] = series_json(expr_name, p, s);
        r.texts["report"] = std::string(expr_name) + " = " + expr_string(e) + "\n";
    });
}

v1ss_status v1ss_verify_all(const long* primes, size_t nprimes, v1ss_result** out)
{
    if (!primes || nprimes == 0)
        return fail(V1SS_EINVAL, "verify-all: empty prime list");
    return guarded(out, [&](v1ss_result& r) {
        std::vector<i64> ps(primes, primes + nprimes);
        auto rows = run_acceptance(ps);
        r.passed = true;
        for (const auto& row : rows)
            if (row.number != 0)
                r.passed = r.passed && row.pass;
        r.texts["report"] = acceptance_table(rows);
    });
}

v1ss_status v1ss_chart(const char* source, long p, long n, const long window[4],
                       int allow_untrusted, v1ss_result** out)
{
    if (!source)
        return fail(V1SS_EINVAL, "null chart source");
    return guarded(out, [&](v1ss_result& r) {
        std::string src = source;
        if (src == "figure-10-3") {
            r.texts["svg"] = chart_svg_fig103(p);
            r.passed = true;
            return;
        }
        Scenario sc = window
                          ? build_scenario(src, p, static_cast<int>(n), window_from(window))
                          : build_scenario(src, p, static_cast<int>(n));
        SsEngine eng(sc);
        RunResult rr = eng.run();
        r.texts["svg"] = chart_svg_page(eng, rr.history.back(), allow_untrusted != 0);
        r.passed = rr.all_pass();
    });
}

v1ss_status v1ss_fraction_field(long p, long lo, long hi, int assume_dlog_relation,
                                v1ss_result** out)
{
    return guarded(out, [&](v1ss_result& r) {
        auto ff = fraction_field_assembly(p, lo, hi, assume_dlog_relation != 0);
        r.passed = ff.pass();
        std::string rep;
        for (const auto& c : ff.checks)
            rep += std::string(c.pass ? "[pass] " : "[FAIL] ") + c.label +
                   (c.detail.empty() ? "" : " -- " + c.detail) + "\n";
        rep += "tc_ff = " + expr_string(ff.tc_ff) + "\n";
        rep += "lambda_star = " + expr_string(ff.lambda_star) + "\n";
        if (!ff.dlog_relation_assumed)
            rep += "caveat: the relation v2 dlogv1 = lam2 was not assumed\n";
        r.texts["report"] = rep;
        r.texts["tsv"] = series_tsv(ff.tc_ff_series);
    });
}

int v1ss_result_passed(const v1ss_result* r) { return r && r->passed ? 1 : 0; }

const char* v1ss_result_text(const v1ss_result* r, const char* kind)
{
    if (!r || !kind)
        return nullptr;
    auto it = r->texts.find(kind);
    return it == r->texts.end() ? nullptr : it->second.c_str();
}

v1ss_status v1ss_list(const char* what, v1ss_result** out)
{
    if (!what)
        return fail(V1SS_EINVAL, "null list kind");
    return guarded(out, [&](v1ss_result& r) {
        std::string w = what, text;
        if (w == "scenarios") {
            for (const auto& id : scenario_ids())
                text += id + "\n";
        } else if (w == "expressions") {
            for (const auto& id : exprs::expr_names())
                text += id + "\n";
        } else {
            throw CalcError("unknown list kind: " + w + " (scenarios | expressions)");
        }
        r.passed = true;
        r.texts["report"] = text;
    });
}

void v1ss_result_free(v1ss_result* r) { delete r; }

}  /* extern "C" */
