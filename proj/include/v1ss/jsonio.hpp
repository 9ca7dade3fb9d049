#pragma once

#include <string>

#include "v1ss/engine.hpp"

namespace v1ss {

/* Loads a scenario from JSON text.  Strict: unknown keys are rejected so
 * typos in hand-written scenario files fail loudly.  Divided-power
 * generators are expanded into their truncated surrogates inside the
 * window.  Schema (all integers exact):
 *
 * {
 *   "p": 5, "n": 1,
 *   "window": {"smin": -40, "smax": 10, "tmin": 0, "tmax": 60},
 *   "generators": [
 *     {"name": "u", "s": -1, "t": 0, "kind": "exterior"},
 *     {"name": "mu0", "s": 0, "t": 2, "kind": "truncated", "height": 5},
 *     {"name": "t", "s": -2, "t": 0, "kind": "laurent", "annihilated": false}
 *   ],
 *   "span_constraints": [
 *     {"generators": ["eps0", "mu0", "ebar1"], "allowed": [[0,0,0], [1,0,0]]}
 *   ],
 *   "rules": [
 *     {"page": 2,
 *      "source": {"monomial": {"eps0": 1, "mu0": -1}, "free_exponent": "mu0",
 *                 "predicate": "1<=i<=4"},
 *      "target": [{"coeff": 1, "monomial": {"t": 1}, "free_offset": 0}],
 *      "note": "optional"}
 *   ],
 *   "annotations": {"infinite_cycles": ["lam2"]},
 *   "expected": [
 *     {"after_page": 2, "label": "E3", "even_columns_only": false,
 *      "expr": {"op": "tensor", "args": [
 *         {"op": "E", "name": "u", "s": -1, "t": 0},
 *         {"op": "Pl", "name": "t", "s": -2, "t": 0}]}}
 *   ]
 * }
 *
 * In "source.monomial" the free generator's entry is the exponent offset.
 * Predicates: "all" | "vp=K" | "vp>=K" | "LO<=i<=HI" | "p!|i".
 * Expression ops: E, P, Ph (height "h"), Pl, Gamma, span (entries
 * [label, s, t]), fam (name/dir_s/dir_t/off_s/off_t/predicate), tensor,
 * sum, shift (s, t, arg), one.
 */
Scenario scenario_from_json(const std::string& text);

Pred pred_from_string(const std::string& s);

}  // namespace v1ss
