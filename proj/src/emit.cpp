#include "v1ss/emit.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"

namespace v1ss {

using ordered_json = nlohmann::ordered_json;

std::string pages_tsv(const RunResult& rr)
{
    std::ostringstream os;
    os << "s\tt\tr\tdim\ttrusted\n";
    for (const auto& h : rr.history) {
        for (const auto& [bd, d] : h.dims)
            os << bd.first << "\t" << bd.second << "\t" << h.page << "\t" << d << "\t"
               << (h.is_trusted(bd.first, bd.second) ? 1 : 0) << "\n";
    }
    return os.str();
}

static ordered_json snapshot_json(const PageSnapshot& h)
{
    ordered_json js;
    js["page"] = h.page;
    js["fired_page"] = h.fired_page;
    ordered_json cells = ordered_json::array();
    for (const auto& [bd, d] : h.dims) {
        ordered_json c;
        c["s"] = bd.first;
        c["t"] = bd.second;
        c["dim"] = d;
        c["trusted"] = h.is_trusted(bd.first, bd.second);
        cells.push_back(c);
    }
    js["cells"] = cells;
    return js;
}

std::string pages_json(const Scenario& sc, const RunResult& rr)
{
    ordered_json js;
    js["scenario"] = sc.id;
    js["p"] = sc.p.p;
    js["n"] = sc.n;
    js["window"] = {{"smin", sc.window.smin},
                    {"smax", sc.window.smax},
                    {"tmin", sc.window.tmin},
                    {"tmax", sc.window.tmax}};
    js["pages"] = ordered_json::array();
    for (const auto& h : rr.history)
        js["pages"].push_back(snapshot_json(h));
    return js.dump(1) + "\n";
}

std::string run_report_text(const Scenario& sc, const RunResult& rr)
{
    std::ostringstream os;
    os << "scenario " << sc.id << " p=" << sc.p.p;
    if (scenario_needs_n(sc.id))
        os << " n=" << sc.n;
    os << "\n";
    for (const auto& nb : sc.notes)
        os << "note: " << nb << "\n";
    os << "fired pages:";
    for (const auto& h : rr.history)
        if (h.fired_page)
            os << " " << h.fired_page;
    os << "\n";
    os << "d o d = 0: " << (rr.d_squared_ok ? "ok" : ("FAILED at " + rr.d_squared_witness))
       << "\n";
    int epass = 0;
    for (const auto& e : rr.euler_checks)
        if (e.pass)
            ++epass;
    os << "euler invariance: " << epass << "/" << rr.euler_checks.size() << " runs\n";
    for (const auto& rep : rr.checkpoint_reports) {
        os << "checkpoint " << rep.label << " (E^" << rep.page << "): "
           << (rep.pass ? "pass" : "FAIL") << ", compared " << rep.compared << ", mismatches "
           << rep.total_mismatches << ", untrusted excluded " << rep.untrusted_excluded
           << (rep.compared == 0 ? " (vacuous: window too small for trusted cells)" : "")
           << "\n";
        for (const auto& m : rep.mismatches)
            os << "  (" << m.s << "," << m.t << ") got " << m.got << " want " << m.want << "\n";
    }
    os << (rr.all_pass() ? "RESULT: pass" : "RESULT: FAIL") << "\n";
    return os.str();
}

std::string run_report_json(const Scenario& sc, const RunResult& rr)
{
    ordered_json js;
    js["scenario"] = sc.id;
    js["p"] = sc.p.p;
    js["n"] = sc.n;
    js["notes"] = sc.notes;
    js["fired_pages"] = ordered_json::array();
    for (const auto& h : rr.history)
        if (h.fired_page)
            js["fired_pages"].push_back(h.fired_page);
    js["d_squared_ok"] = rr.d_squared_ok;
    js["checkpoints"] = ordered_json::array();
    for (const auto& rep : rr.checkpoint_reports) {
        ordered_json c;
        c["label"] = rep.label;
        c["page"] = rep.page;
        c["pass"] = rep.pass;
        c["mismatches"] = rep.total_mismatches;
        c["untrusted_excluded"] = rep.untrusted_excluded;
        js["checkpoints"].push_back(c);
    }
    js["pass"] = rr.all_pass();
    return js.dump(1) + "\n";
}

std::string series_tsv(const PoincareSeries& s)
{
    std::ostringstream os;
    os << "degree\tdim\n";
    for (i64 n = s.lo; n <= s.hi; ++n)
        if (s.at(n) != 0)
            os << n << "\t" << s.at(n) << "\n";
    return os.str();
}

std::string series_json(const std::string& name, i64 p, const PoincareSeries& s)
{
    ordered_json js;
    js["expression"] = name;
    js["p"] = p;
    js["lo"] = s.lo;
    js["hi"] = s.hi;
    ordered_json c = ordered_json::array();
    for (i64 n = s.lo; n <= s.hi; ++n)
        if (s.at(n) != 0)
            c.push_back({{"degree", n}, {"dim", s.at(n)}});
    js["coefficients"] = c;
    return js.dump(1) + "\n";
}

/* ---- SVG ---------------------------------------------------------------- */

namespace {

constexpr i64 kGrid = 20;

std::string svg_escape(const std::string& s)
{
    std::string r;
    for (char c : s) {
        if (c == '<')
            r += "&lt;";
        else if (c == '>')
            r += "&gt;";
        else if (c == '&')
            r += "&amp;";
        else
            r += c;
    }
    return r;
}

struct Grid {
    i64 smin, smax, tmin, tmax;
    i64 width() const { return (smax - smin + 2) * kGrid + 2 * kGrid; }
    i64 height() const { return (tmax - tmin + 2) * kGrid + 2 * kGrid; }
    i64 x(i64 s) const { return (s - smin + 1) * kGrid + kGrid; }
    i64 y(i64 t) const { return height() - ((t - tmin + 1) * kGrid + kGrid); }
};

void svg_header(std::ostringstream& os, const Grid& g, const std::string& title)
{
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << g.width() << "\" height=\""
       << g.height() << "\" font-family=\"monospace\" font-size=\"10\">\n";
    os << "<title>" << svg_escape(title) << "</title>\n";
    /* axes */
    os << "<line x1=\"" << g.x(g.smin) - kGrid / 2 << "\" y1=\"" << g.y(g.tmin) + kGrid / 2
       << "\" x2=\"" << g.x(g.smax) + kGrid / 2 << "\" y2=\"" << g.y(g.tmin) + kGrid / 2
       << "\" stroke=\"black\"/>\n";
    os << "<line x1=\"" << g.x(g.smin) - kGrid / 2 << "\" y1=\"" << g.y(g.tmin) + kGrid / 2
       << "\" x2=\"" << g.x(g.smin) - kGrid / 2 << "\" y2=\"" << g.y(g.tmax) - kGrid / 2
       << "\" stroke=\"black\"/>\n";
}

}  // namespace

std::string chart_svg_fig103(i64 p)
{
    auto rows = figure_10_3_data(p);
    /* group labels per cell; colons separate co-located labels */
    std::map<std::pair<i64, i64>, std::vector<std::string>> cells;
    i64 tmax = 0;
    for (const auto& r : rows) {
        cells[{r.s, r.t}].push_back(r.label);
        tmax = std::max(tmax, r.t);
    }
    Grid g{-4, 0, 0, tmax + 1};
    std::ostringstream os;
    svg_header(os, g, "Galois filtration placement of the Lambda_* basis, p=" +
                          std::to_string(p));
    for (i64 s = g.smin; s <= g.smax; ++s)
        os << "<text x=\"" << g.x(s) << "\" y=\"" << g.y(g.tmin) + kGrid
           << "\" text-anchor=\"middle\">" << s << "</text>\n";
    for (i64 t = 0; t <= tmax; t += 2)
        os << "<text x=\"" << g.x(g.smin) - kGrid << "\" y=\"" << g.y(t)
           << "\" text-anchor=\"end\">" << t << "</text>\n";
    for (const auto& [cell, labels] : cells) {
        std::string text;
        for (size_t i = 0; i < labels.size(); ++i) {
            if (i)
                text += " : ";
            text += labels[i];
        }
        os << "<text class=\"cls\" x=\"" << g.x(cell.first) << "\" y=\"" << g.y(cell.second)
           << "\" text-anchor=\"middle\">" << svg_escape(text) << "</text>\n";
    }
    os << "</svg>\n";
    return os.str();
}

std::string chart_svg_page(const SsEngine& eng, const PageSnapshot& page, bool allow_untrusted)
{
    const Window& win = eng.basis().window();
    const Presentation& P = eng.basis().pres();
    for (const auto& [bd, d] : page.dims)
        if (!page.is_trusted(bd.first, bd.second) && !allow_untrusted)
            throw CalcError("chart contains untrusted bidegrees; pass --allow-untrusted to "
                            "render them");
    Grid g{win.smin, win.smax, win.tmin, win.tmax};
    std::ostringstream os;
    svg_header(os, g, "E^" + std::to_string(page.page) + " over F_" + std::to_string(P.p().p));
    /* one labeled glyph per basis class; representatives name the classes by
     * their leading E^2-monomial, colon-joined when co-located */
    for (const auto& [bd, d] : page.dims) {
        bool tr = page.is_trusted(bd.first, bd.second);
        auto reps = eng.page_representatives(bd.first, bd.second);
        std::string text;
        if (static_cast<int>(reps.size()) == d) {
            for (size_t i = 0; i < reps.size(); ++i) {
                if (i)
                    text += " : ";
                text += P.mono_string(reps[i].terms.front().m);
            }
        } else {
            /* history pages keep dimensions only */
            for (int i = 0; i < d; ++i)
                text += (i ? " : *" : "*");
        }
        os << "<text class=\"cls\" x=\"" << g.x(bd.first) << "\" y=\"" << g.y(bd.second)
           << "\" text-anchor=\"middle\"" << (tr ? "" : " fill=\"gray\"") << ">"
           << svg_escape(text) << "</text>\n";
    }
    os << "</svg>\n";
    return os.str();
}

}  // namespace v1ss
