#pragma once

#include "v1ss/catalog.hpp"

namespace v1ss {

/* ---- restriction-map bookkeeping (the R - 1 tower) --------------------- */

struct TfData {
    Expr ker;
    Expr coker;
    int tower_depth = 0; /* largest k whose tower stage meets the window */
    bool tower_surjections_ok = false;
};

/* ker(R-1) and cok(R-1) built from the tower of summands with the stated
 * R-behavior; `hi` is the top of the inspection window in total degree */
TfData tf_kernel_cokernel(i64 p, i64 hi);

struct AssemblyCheck {
    std::string label;
    bool pass = true;
    std::string detail;
};

/* V(1)_* TC(l/p): ker + suspended coker above 2p-2, patched below from
 * E(del, ebar1); every internal consistency check is reported */
struct TcData {
    Expr expr;
    std::vector<AssemblyCheck> checks;
    bool pass() const;
};
TcData tc_assembly(i64 p, i64 hi);

/* V(1)_* K(l/p): removes a desuspended E(ebar1) from TC */
TcData k_theory_assembly(i64 p, i64 hi);

/* ---- the summand map of the restriction homomorphism ------------------- */

struct P82Report {
    bool pass = true;
    std::vector<AssemblyCheck> checks;
    int b_families = 0; /* index families hitting B_2 in the window */
    int c_families = 0;
};
P82Report prop_8_2_map(i64 p, const Window& window);

/* ---- fraction-field assembly ------------------------------------------- */

struct FractionFieldData {
    Expr tc_ff;
    Expr lambda_star;
    Expr k_ff_v2inv;
    PoincareSeries tc_ff_series; /* the raw cofiber series, flag-independent */
    bool dlog_relation_assumed = true;
    i64 trc_kernel_dim = 0; /* dim of Sigma^{-2} E(dlp, dlv){ebar1} */
    std::vector<AssemblyCheck> checks;
    bool pass() const;
};
FractionFieldData fraction_field_assembly(i64 p, i64 lo, i64 hi, bool assume_dlog_relation);

/* ---- exhaustive degree-arithmetic checkers ------------------------------ */

struct LemmaConflict {
    std::string family;
    i64 i, e, j;
};
/* classes of lower filtration in the same total degree as
 * y = (tmu2)^{rho(2n-1)} mu2^j, vp(j) = 2n-2; empty list = lemma verified.
 * j runs over vp(j) = 2n-2 with |j| <= jbound * p^{2n-2}. */
std::vector<LemmaConflict> lemma_7_8_check(i64 p, int n, i64 jbound = 24);

struct LemmaCandidate {
    std::string family;
    i64 i, j, e, page;
};
/* sources x with d(x) = (tmu2)^{rho(2n-1)} t^i, vp(i) = 2n, of length
 * >= 2 rho(2n) + 2; the unique survivor per i must be t^{...} ebar1 */
std::vector<LemmaCandidate> lemma_7_9_check(i64 p, int n, i64 ibound = 24);

/* ---- the conjectural THH square ----------------------------------------- */

struct Conj56Report {
    bool consistent = true;
    std::vector<AssemblyCheck> rows;
    PoincareSeries iterated_cofiber;
    bool conjectural = true; /* always; surfaced in the report */
};
Conj56Report conjecture_5_6_consistency(i64 p, i64 lo, i64 hi);

/* ---- chart data --------------------------------------------------------- */

struct Fig103Row {
    i64 s, t;
    std::string label;
    bool v2_marker = false; /* the parenthetical (v2) placement */
};
/* Galois-filtration placement of the Lambda_* basis; 24 proper rows at p=3 */
std::vector<Fig103Row> figure_10_3_data(i64 p);

}  // namespace v1ss
