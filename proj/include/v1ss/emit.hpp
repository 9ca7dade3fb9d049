#pragma once

#include "v1ss/assemble.hpp"
#include "v1ss/engine.hpp"

namespace v1ss {

/* fixed columns: s, t, r, dim, trusted */
std::string pages_tsv(const RunResult& rr);
std::string pages_json(const Scenario& sc, const RunResult& rr);

std::string run_report_text(const Scenario& sc, const RunResult& rr);
std::string run_report_json(const Scenario& sc, const RunResult& rr);

std::string series_tsv(const PoincareSeries& s);
std::string series_json(const std::string& name, i64 p, const PoincareSeries& s);

/* deterministic SVG charts: 20-unit grid, text labels, no external fonts */
std::string chart_svg_fig103(i64 p);
std::string chart_svg_page(const SsEngine& eng, const PageSnapshot& page, bool allow_untrusted);

}  // namespace v1ss
