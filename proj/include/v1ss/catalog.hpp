#pragma once

#include "v1ss/engine.hpp"

namespace v1ss {

/* length function for the differential schedules:
 * rho(2k-1) = (p^{2k+1}+1)/(p+1), rho(2k) = (p^{2k+2}-p^2)/(p^2-1), k >= 0 */
i64 rho(i64 k, const Prime& p);

std::vector<std::string> scenario_ids();
bool scenario_needs_n(const std::string& id);

/* fully populated scenario; n is ignored where it does not apply */
Scenario build_scenario(const std::string& id, i64 p, int n);
Scenario build_scenario(const std::string& id, i64 p, int n, const Window& window);

Window default_window(const std::string& id, i64 p, int n);

/* expression catalogs shared by scenarios, assemblies and the CLI */
namespace exprs {

/* bigraded page expressions */
Expr cor72_e3(i64 p, int n);
Expr cor72_mid_odd(i64 p, int n, int m); /* E^{2 rho(2m-1)+1} */
Expr cor72_mid_even(i64 p, int n, int m);
Expr cor72_einf(i64 p, int n);
Expr cor75_e3(i64 p, int n);
Expr cor75_mid_odd(i64 p, int n, int m);
Expr cor75_mid_even(i64 p, int n, int m);
Expr cor75_einf(i64 p, int n);
Expr thm712a(i64 p, int kmax); /* S^1-Tate associated graded */
Expr thm712b(i64 p, int kmax); /* S^1-homotopy fixed points, mu2 inverted */

/* total-graded module formulas */
Expr v1_thh_zp(i64 p);
Expr v1_thh_z(i64 p);
Expr v1_thh_ell(i64 p);
Expr v1_thh_ellp(i64 p);
Expr tc_zp(i64 p);
Expr tc_z(i64 p);
Expr tc_zq(i64 p);
Expr tc_ell(i64 p);
Expr tc_ellp(i64 p);       /* the TC closed form */
Expr k_ellp(i64 p);        /* the K-theory closed form */
Expr tc_ell_pinv(i64 p);
Expr tc_ell_L(i64 p);
Expr tc_ellp_Lp(i64 p);
Expr tc_ff(i64 p);         /* TC of the fraction field */
Expr lambda_star(i64 p);
Expr k_ff_v2inv(i64 p);
Expr ker_r1(i64 p);        /* kernel of R - 1 */
Expr coker_r1(i64 p);

Expr by_name(const std::string& name, i64 p); /* total-graded catalog lookup */
std::vector<std::string> expr_names();

}  // namespace exprs

}  // namespace v1ss
