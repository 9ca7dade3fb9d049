/* command line front end; talks to the calculator through the C API only */

#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "v1ss/v1ss.h"

namespace {

struct ResultDeleter {
    void operator()(v1ss_result* r) const { v1ss_result_free(r); }
};
using ResultPtr = std::unique_ptr<v1ss_result, ResultDeleter>;

int report_error(v1ss_status st)
{
    std::cerr << "error: " << v1ss_last_error() << "\n";
    return st == V1SS_EINVAL ? 2 : 2;
}

bool parse_window(const std::string& spec, long w[4])
{
    std::istringstream is(spec);
    std::string tok;
    int i = 0;
    while (std::getline(is, tok, ':')) {
        if (i >= 4)
            return false;
        try {
            w[i++] = std::stol(tok);
        } catch (...) {
            return false;
        }
    }
    return i == 4;
}

void write_or_print(const std::string& path, const char* text)
{
    if (!text)
        return;
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream os(path, std::ios::binary);
    os << text;
}

int emit_result(const ResultPtr& res, const std::string& format, const std::string& out_dir,
                const std::string& stem)
{
    const char* report = v1ss_result_text(res.get(), "report");
    if (report)
        std::cout << report;
    auto artifact = [&](const char* kind, const std::string& ext) {
        const char* text = v1ss_result_text(res.get(), kind);
        if (!text)
            return;
        if (!out_dir.empty())
            write_or_print(out_dir + "/" + stem + ext, text);
        else if (format == kind)
            std::cout << text;
    };
    artifact("tsv", ".tsv");
    artifact("json", ".json");
    artifact("pages_json", ".pages.json");
    artifact("svg", ".svg");
    return v1ss_result_passed(res.get()) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{std::string(v1ss_version()) +
                 " - exact spectral sequence bookkeeping over F_p"};
    app.require_subcommand(1);

    std::string window_spec, format = "report", out_dir, scenario_file;
    long p = 3, n = 1;
    bool assume_dlog = true, allow_untrusted = false;

    auto add_common = [&](CLI::App* c) {
        c->add_option("--p", p, "odd prime");
        c->add_option("--n", n, "C_{p^n} parameter where applicable");
        c->add_option("--window", window_spec, "smin:smax:tmin:tmax");
        c->add_option("--format", format, "report | tsv | json | svg");
        c->add_option("--out-dir", out_dir, "write artifacts into this directory");
    };

    auto* crun = app.add_subcommand("run", "run a scenario and verify its checkpoints");
    std::string scenario_id;
    crun->add_option("scenario", scenario_id, "scenario id (see `list scenarios`)");
    crun->add_option("--scenario-file", scenario_file, "load the scenario from JSON");
    add_common(crun);

    auto* cverify = app.add_subcommand("verify-all", "run the acceptance checklist");
    std::string primes_spec = "3,5";
    cverify->add_option("--p", primes_spec, "comma-separated primes");

    auto* cseries = app.add_subcommand("series", "Poincare series of a named closed form");
    std::string expr_name, range_spec = "-2:100";
    cseries->add_option("expression", expr_name, "expression name (see `list expressions`)");
    cseries->add_option("--range", range_spec, "lo:hi in total degree");
    cseries->add_option("--p", p, "odd prime");
    cseries->add_option("--format", format, "report | tsv | json");
    cseries->add_option("--out-dir", out_dir, "write artifacts into this directory");
    cseries->add_flag("--assume-dlog-relation,!--no-assume-dlog-relation", assume_dlog,
                      "assume v2 dlogv1 = lam2 in the fraction-field assembly");

    auto* cchart = app.add_subcommand("chart", "render an SVG chart");
    std::string chart_source;
    cchart->add_option("source", chart_source, "figure-10-3 or a scenario id");
    cchart->add_flag("--allow-untrusted", allow_untrusted, "chart untrusted bidegrees too");
    add_common(cchart);

    auto* cff = app.add_subcommand("fraction-field", "run the localization-square assembly");
    cff->add_option("--p", p, "odd prime");
    cff->add_option("--range", range_spec, "lo:hi in total degree");
    cff->add_flag("--assume-dlog-relation,!--no-assume-dlog-relation", assume_dlog, "");
    cff->add_option("--out-dir", out_dir, "");
    cff->add_option("--format", format, "");

    auto* clist = app.add_subcommand("list", "list scenario or expression ids");
    std::string list_what = "scenarios";
    clist->add_option("what", list_what, "scenarios | expressions");

    CLI11_PARSE(app, argc, argv);

    long window[4];
    bool have_window = false;
    if (!window_spec.empty()) {
        if (!parse_window(window_spec, window)) {
            std::cerr << "error: --window expects smin:smax:tmin:tmax\n";
            return 2;
        }
        have_window = true;
    }

    v1ss_result* raw = nullptr;
    v1ss_status st = V1SS_OK;

    if (crun->parsed()) {
        if (!scenario_file.empty()) {
            std::ifstream is(scenario_file);
            if (!is) {
                std::cerr << "error: cannot read " << scenario_file << "\n";
                return 2;
            }
            std::stringstream buf;
            buf << is.rdbuf();
            st = v1ss_run_json(buf.str().c_str(), &raw);
        } else if (scenario_id.empty()) {
            std::cerr << "error: run needs a scenario id or --scenario-file\n";
            return 2;
        } else {
            st = v1ss_run(scenario_id.c_str(), p, n, have_window ? window : nullptr, &raw);
        }
        if (st != V1SS_OK)
            return report_error(st);
        ResultPtr res(raw);
        return emit_result(res, format, out_dir,
                           scenario_id.empty() ? "scenario" : scenario_id);
    }
    if (cverify->parsed()) {
        std::vector<long> primes;
        std::istringstream is(primes_spec);
        std::string tok;
        while (std::getline(is, tok, ','))
            if (!tok.empty())
                primes.push_back(std::stol(tok));
        st = v1ss_verify_all(primes.data(), primes.size(), &raw);
        if (st != V1SS_OK)
            return report_error(st);
        ResultPtr res(raw);
        std::cout << v1ss_result_text(res.get(), "report");
        return v1ss_result_passed(res.get()) ? 0 : 1;
    }
    if (cseries->parsed()) {
        long lo, hi;
        {
            long w[4] = {0, 0, 0, 0};
            std::string padded = range_spec + ":0:0";
            if (!parse_window(padded, w)) {
                std::cerr << "error: --range expects lo:hi\n";
                return 2;
            }
            lo = w[0];
            hi = w[1];
        }
        st = v1ss_series(expr_name.c_str(), p, lo, hi, &raw);
        if (st != V1SS_OK)
            return report_error(st);
        ResultPtr res(raw);
        return emit_result(res, format, out_dir, expr_name);
    }
    if (cchart->parsed()) {
        st = v1ss_chart(chart_source.c_str(), p, n, have_window ? window : nullptr,
                        allow_untrusted ? 1 : 0, &raw);
        if (st != V1SS_OK)
            return report_error(st);
        ResultPtr res(raw);
        if (format == "report")
            format = "svg";
        return emit_result(res, format, out_dir,
                           chart_source == "figure-10-3" ? "figure-10-3" : chart_source);
    }
    if (cff->parsed()) {
        long lo, hi;
        long w[4] = {0, 0, 0, 0};
        std::string padded = range_spec + ":0:0";
        if (!parse_window(padded, w)) {
            std::cerr << "error: --range expects lo:hi\n";
            return 2;
        }
        lo = w[0];
        hi = w[1];
        st = v1ss_fraction_field(p, lo, hi, assume_dlog ? 1 : 0, &raw);
        if (st != V1SS_OK)
            return report_error(st);
        ResultPtr res(raw);
        return emit_result(res, format, out_dir, "fraction-field");
    }
    if (clist->parsed()) {
        st = v1ss_list(list_what.c_str(), &raw);
        if (st != V1SS_OK)
            return report_error(st);
        ResultPtr res(raw);
        std::cout << v1ss_result_text(res.get(), "report");
        return 0;
    }
    return 2;
}
