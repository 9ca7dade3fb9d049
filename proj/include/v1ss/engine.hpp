#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "v1ss/algebra.hpp"
#include "v1ss/expr.hpp"

namespace v1ss {

/* One monomial of a differential-rule target; the free exponent (when the
 * rule has one) enters the free generator's exponent with unit slope. */
struct RuleTarget {
    i64 coeff = 1;
    std::vector<std::pair<std::string, i64>> fixed; /* generator -> exponent */
    i64 free_offset = 0;                            /* exponent of the free gen is i + offset */
};

/* A differential d^page.  Two modes:
 *  - Generator: source is a single generator, extended by the Leibniz rule
 *    (with multiplicities) over all monomials.
 *  - Family: source is a monomial template with one free exponent i subject
 *    to a predicate; a monomial matches when its exponents agree with the
 *    template away from the free generator, whose whole exponent determines
 *    i; the matched part is treated as generator-level data, so the leftover
 *    factor multiplies the target. */
struct DiffRule {
    i64 page = 2;
    enum Mode { Generator, Family } mode = Generator;
    std::string source_gen;                              /* Generator mode */
    std::vector<std::pair<std::string, i64>> src_fixed;  /* Family mode */
    std::string free_gen;                                /* Family mode, may be empty */
    i64 src_offset = 0;                                  /* source exponent = i + offset */
    Pred pred = Pred::all();
    std::vector<RuleTarget> targets;
    std::string note;
};

struct Checkpoint {
    i64 after_page = 0; /* compare the term left after this page has fired */
    Expr expected;
    bool even_columns_only = false;
    std::string label;
    std::optional<Window> restrict_to; /* compare only inside this box */
};

struct Scenario {
    std::string id;
    Prime p;
    int n = 1;
    std::shared_ptr<Presentation> pres;
    std::vector<DiffRule> rules;
    Window window;
    std::vector<Checkpoint> checkpoints;
    std::map<std::string, std::vector<std::string>> annotations;
    std::vector<std::string> notes;

    std::vector<i64> rule_pages() const;
};

/* compiled rule bound to generator indices */
struct CompiledRule {
    const DiffRule* src = nullptr;
    i64 page = 0;
    DiffRule::Mode mode = DiffRule::Generator;
    int gen = -1;
    Element gen_target; /* Generator mode target, fixed element */
    std::vector<std::pair<int, i64>> fixed;
    int free_gen = -1;
    i64 src_offset = 0;
    Pred pred = Pred::all();
    struct Tgt {
        i64 coeff;
        std::vector<std::pair<int, i64>> fixed;
        i64 free_offset;
    };
    std::vector<Tgt> targets;
};

std::vector<CompiledRule> compile_rules(const Presentation& P, const std::vector<DiffRule>& rules);

/* checks target = source + (-r, r-1) for every rule */
void validate_rule_bidegrees(const Presentation& P, const std::vector<DiffRule>& rules);

/* Leibniz/template extension of the page-r rules to a monomial */
Element extend_differential(const Presentation& P, const std::vector<CompiledRule>& rules,
                            i64 page, const Monomial& m);
Element extend_differential(const Presentation& P, const std::vector<DiffRule>& rules, i64 page,
                            const Monomial& m);

struct PageSnapshot {
    i64 page = 2;       /* this is the E^page-term */
    i64 fired_page = 0; /* 0 for the initial term */
    std::map<std::pair<i64, i64>, int> dims;
    std::map<std::pair<i64, i64>, bool> trusted;
    int dim(i64 s, i64 t) const
    {
        auto it = dims.find({s, t});
        return it == dims.end() ? 0 : it->second;
    }
    bool is_trusted(i64 s, i64 t) const
    {
        auto it = trusted.find({s, t});
        return it != trusted.end() && it->second;
    }
};

struct CompareReport {
    std::string label;
    i64 page = 0;
    bool pass = true;
    int compared = 0;
    int untrusted_excluded = 0;
    struct Mism {
        i64 s, t;
        int got, want;
    };
    std::vector<Mism> mismatches; /* capped */
    i64 total_mismatches = 0;
};

struct EulerCheck {
    i64 fired_page;
    i64 lo, hi;    /* run of total degrees */
    bool pass;
};

struct RunResult {
    std::vector<PageSnapshot> history; /* E^2, then one snapshot per fired page */
    std::vector<CompareReport> checkpoint_reports;
    std::vector<EulerCheck> euler_checks;
    bool d_squared_ok = true;
    std::string d_squared_witness;
    bool all_pass() const;
};

class SsEngine {
public:
    SsEngine(const Scenario& sc);

    /* fires every rule page in increasing order; records snapshots,
     * evaluates checkpoints, asserts d..d = 0 before each homology pass */
    RunResult run(bool check_d_squared = true);

    const BasisTable& basis() const { return basis_; }

    /* representatives of the stabilized page at one bidegree, as elements
     * in the E^2-monomial basis (available after run) */
    std::vector<Element> page_representatives(i64 s, i64 t) const;

    /* membership in the stabilized cycle / boundary spans at a bidegree */
    bool in_stabilized_cycles(i64 s, i64 t, const Element& e) const;
    bool in_stabilized_boundaries(i64 s, i64 t, const Element& e) const;

    /* dimension comparison against a closed form over trusted bidegrees */
    CompareReport compare_with_expression(const PageSnapshot& page, const Expr& expr,
                                          bool even_columns_only, const std::string& label,
                                          const std::optional<Window>& restrict_to = {}) const;

private:
    const Scenario& sc_;
    BasisTable basis_;
    std::vector<CompiledRule> rules_;

    /* E^2-dimension of a bidegree outside the window (cached) */
    mutable std::map<std::pair<i64, i64>, int> outside_dim_;
    struct FinalBucket {
        std::vector<std::vector<i64>> z_rows, b_rows;
    };
    std::map<std::pair<i64, i64>, FinalBucket> final_state_;
    mutable bool support_cached_ = false;
    mutable std::optional<i64> sup_smin_, sup_smax_, sup_tmin_, sup_tmax_;
    int e2_dim(i64 s, i64 t) const;
};

}  // namespace v1ss
