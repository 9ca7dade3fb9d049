#include "v1ss/jsonio.hpp"

#include "json.hpp"

namespace v1ss {

using json = nlohmann::json;

namespace {

void expect_keys(const json& j, const std::vector<std::string>& allowed,
                 const std::string& where)
{
    if (!j.is_object())
        throw CalcError("scenario json: expected an object at " + where);
    for (auto it = j.begin(); it != j.end(); ++it) {
        if (std::find(allowed.begin(), allowed.end(), it.key()) == allowed.end())
            throw CalcError("scenario json: unknown key '" + it.key() + "' in " + where);
    }
}

i64 get_int(const json& j, const std::string& key, const std::string& where)
{
    if (!j.contains(key) || !j[key].is_number_integer())
        throw CalcError("scenario json: missing integer '" + key + "' in " + where);
    return j[key].get<i64>();
}

std::string get_str(const json& j, const std::string& key, const std::string& where)
{
    if (!j.contains(key) || !j[key].is_string())
        throw CalcError("scenario json: missing string '" + key + "' in " + where);
    return j[key].get<std::string>();
}

std::vector<std::pair<std::string, i64>> mono_from(const json& j, const std::string& where)
{
    if (!j.is_object())
        throw CalcError("scenario json: monomial must be an object in " + where);
    std::vector<std::pair<std::string, i64>> m;
    for (auto it = j.begin(); it != j.end(); ++it) {
        if (!it.value().is_number_integer())
            throw CalcError("scenario json: exponent of '" + it.key() + "' must be an integer");
        m.push_back({it.key(), it.value().get<i64>()});
    }
    return m;
}

Expr expr_from(const json& j, const std::string& where)
{
    std::string op = get_str(j, "op", where);
    if (op == "E" || op == "P" || op == "Pl" || op == "Gamma") {
        expect_keys(j, {"op", "name", "s", "t"}, where);
        std::string n = get_str(j, "name", where);
        i64 s = get_int(j, "s", where), t = get_int(j, "t", where);
        if (op == "E") return E(n, s, t);
        if (op == "P") return P(n, s, t);
        if (op == "Pl") return Pl(n, s, t);
        return Gamma(n, s, t);
    }
    if (op == "Ph") {
        expect_keys(j, {"op", "name", "s", "t", "h"}, where);
        return Ph(get_str(j, "name", where), get_int(j, "s", where), get_int(j, "t", where),
                  static_cast<int>(get_int(j, "h", where)));
    }
    if (op == "span") {
        expect_keys(j, {"op", "entries"}, where);
        std::vector<std::tuple<std::string, i64, i64>> es;
        for (const auto& e : j.at("entries")) {
            if (!e.is_array() || e.size() != 3)
                throw CalcError("scenario json: span entry must be [label, s, t]");
            es.push_back({e[0].get<std::string>(), e[1].get<i64>(), e[2].get<i64>()});
        }
        return span_list(std::move(es));
    }
    if (op == "fam") {
        expect_keys(j, {"op", "name", "dir_s", "dir_t", "off_s", "off_t", "predicate"}, where);
        return span_family(get_str(j, "name", where), get_int(j, "dir_s", where),
                           get_int(j, "dir_t", where), get_int(j, "off_s", where),
                           get_int(j, "off_t", where),
                           pred_from_string(get_str(j, "predicate", where)));
    }
    if (op == "tensor" || op == "sum") {
        expect_keys(j, {"op", "args"}, where);
        std::vector<Expr> args;
        for (const auto& a : j.at("args"))
            args.push_back(expr_from(a, where + "/" + op));
        return op == "tensor" ? tensor(std::move(args)) : dsum(std::move(args));
    }
    if (op == "shift") {
        expect_keys(j, {"op", "s", "t", "arg"}, where);
        return shift(get_int(j, "s", where), get_int(j, "t", where),
                     expr_from(j.at("arg"), where + "/shift"));
    }
    if (op == "one") {
        expect_keys(j, {"op"}, where);
        return one();
    }
    throw CalcError("scenario json: unknown expression op '" + op + "'");
}

}  // namespace

Pred pred_from_string(const std::string& s)
{
    if (s == "all")
        return Pred::all();
    if (s == "p!|i")
        return Pred::not_mult();
    if (s.rfind("vp>=", 0) == 0)
        return Pred::vp_ge(std::stoi(s.substr(4)));
    if (s.rfind("vp=", 0) == 0)
        return Pred::vp_eq(std::stoi(s.substr(3)));
    auto a = s.find("<=i<=");
    if (a != std::string::npos)
        return Pred::range(std::stoll(s.substr(0, a)), std::stoll(s.substr(a + 5)));
    throw CalcError("unknown predicate: '" + s + "'");
}

Scenario scenario_from_json(const std::string& text)
{
    json j = json::parse(text, nullptr, true, /*allow comments*/ false);
    expect_keys(j,
                {"p", "n", "window", "generators", "span_constraints", "rules", "annotations",
                 "expected", "id"},
                "top level");
    Prime p(get_int(j, "p", "top level"));
    Scenario sc{"custom", p, 1};
    if (j.contains("id"))
        sc.id = get_str(j, "id", "top level");
    if (j.contains("n"))
        sc.n = static_cast<int>(get_int(j, "n", "top level"));
    if (!j.contains("window"))
        throw CalcError("scenario json: missing window");
    expect_keys(j["window"], {"smin", "smax", "tmin", "tmax"}, "window");
    sc.window = Window{get_int(j["window"], "smin", "window"),
                       get_int(j["window"], "smax", "window"),
                       get_int(j["window"], "tmin", "window"),
                       get_int(j["window"], "tmax", "window")};
    if (sc.window.smin > sc.window.smax || sc.window.tmin > sc.window.tmax)
        throw CalcError("scenario json: empty window");

    if (!j.contains("generators") || !j["generators"].is_array())
        throw CalcError("scenario json: missing generators array");
    std::vector<GeneratorSpec> gens;
    for (const auto& g : j["generators"]) {
        expect_keys(g, {"name", "s", "t", "kind", "height", "annihilated"}, "generator");
        GeneratorSpec gs;
        gs.name = get_str(g, "name", "generator");
        gs.s = get_int(g, "s", gs.name);
        gs.t = get_int(g, "t", gs.name);
        auto k = kind_from_name(get_str(g, "kind", gs.name));
        if (!k)
            throw CalcError("scenario json: unknown kind for " + gs.name);
        gs.kind = *k;
        if (g.contains("height"))
            gs.height = static_cast<int>(get_int(g, "height", gs.name));
        if (g.contains("annihilated"))
            gs.annihilated = g["annihilated"].get<bool>();
        gens.push_back(gs);
    }
    gens = expand_divided_powers(p, gens, sc.window.tmax);

    std::vector<SpanConstraint> constraints;
    if (j.contains("span_constraints")) {
        /* constraints refer to generators by name */
        std::map<std::string, int> idx;
        for (size_t i = 0; i < gens.size(); ++i)
            idx[gens[i].name] = static_cast<int>(i);
        for (const auto& c : j["span_constraints"]) {
            expect_keys(c, {"generators", "allowed"}, "span_constraints");
            SpanConstraint scn;
            for (const auto& nm : c.at("generators")) {
                auto it = idx.find(nm.get<std::string>());
                if (it == idx.end())
                    throw CalcError("scenario json: span constraint names unknown generator");
                scn.gens.push_back(it->second);
            }
            for (const auto& t : c.at("allowed")) {
                std::vector<int> tup;
                for (const auto& v : t)
                    tup.push_back(v.get<int>());
                scn.allowed.push_back(std::move(tup));
            }
            constraints.push_back(std::move(scn));
        }
    }
    sc.pres = std::make_shared<Presentation>(p, std::move(gens), std::move(constraints));

    if (j.contains("rules"))
        for (const auto& r : j["rules"]) {
            expect_keys(r, {"page", "source", "target", "note"}, "rule");
            DiffRule dr;
            dr.page = get_int(r, "page", "rule");
            if (r.contains("note"))
                dr.note = get_str(r, "note", "rule");
            const auto& src = r.at("source");
            expect_keys(src, {"monomial", "free_exponent", "predicate", "generator"}, "source");
            if (src.contains("generator")) {
                dr.mode = DiffRule::Generator;
                dr.source_gen = get_str(src, "generator", "source");
                for (const auto& t : r.at("target")) {
                    expect_keys(t, {"coeff", "monomial"}, "target");
                    RuleTarget rt;
                    if (t.contains("coeff"))
                        rt.coeff = get_int(t, "coeff", "target");
                    rt.fixed = mono_from(t.at("monomial"), "target");
                    dr.targets.push_back(rt);
                }
            } else {
                dr.mode = DiffRule::Family;
                auto mono = mono_from(src.at("monomial"), "source");
                std::string free;
                if (src.contains("free_exponent"))
                    free = get_str(src, "free_exponent", "source");
                dr.free_gen = free;
                for (auto& [g, e] : mono) {
                    if (g == free)
                        dr.src_offset = e;
                    else
                        dr.src_fixed.push_back({g, e});
                }
                if (src.contains("predicate"))
                    dr.pred = pred_from_string(get_str(src, "predicate", "source"));
                for (const auto& t : r.at("target")) {
                    expect_keys(t, {"coeff", "monomial", "free_offset"}, "target");
                    RuleTarget rt;
                    if (t.contains("coeff"))
                        rt.coeff = get_int(t, "coeff", "target");
                    if (t.contains("free_offset"))
                        rt.free_offset = get_int(t, "free_offset", "target");
                    rt.fixed = mono_from(t.at("monomial"), "target");
                    dr.targets.push_back(rt);
                }
            }
            sc.rules.push_back(std::move(dr));
        }

    if (j.contains("annotations")) {
        for (auto it = j["annotations"].begin(); it != j["annotations"].end(); ++it) {
            std::vector<std::string> vals;
            for (const auto& v : it.value())
                vals.push_back(v.get<std::string>());
            sc.annotations[it.key()] = vals;
        }
    }
    if (j.contains("expected"))
        for (const auto& e : j["expected"]) {
            expect_keys(e, {"after_page", "label", "even_columns_only", "expr"}, "expected");
            Checkpoint ck;
            ck.after_page = get_int(e, "after_page", "expected");
            if (e.contains("label"))
                ck.label = get_str(e, "label", "expected");
            if (e.contains("even_columns_only"))
                ck.even_columns_only = e["even_columns_only"].get<bool>();
            ck.expected = expr_from(e.at("expr"), "expected");
            sc.checkpoints.push_back(ck);
        }
    return sc;
}

}  // namespace v1ss
