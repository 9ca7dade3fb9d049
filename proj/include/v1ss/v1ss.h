#ifndef V1SS_H
#define V1SS_H

/* C interface to the spectral sequence calculator.  All computation state
 * lives behind the opaque result handle; callers own results and release
 * them with v1ss_result_free.  Functions return V1SS_OK on success; on any
 * other status v1ss_last_error() carries a message (thread local). */

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum {
    V1SS_OK = 0,
    V1SS_EINVAL = 1,  /* bad arguments, unknown ids, malformed scenarios */
    V1SS_EFAIL = 2    /* internal computation failure */
} v1ss_status;

typedef struct v1ss_result v1ss_result;

const char* v1ss_version(void);
const char* v1ss_last_error(void);

/* window is {smin, smax, tmin, tmax}; pass NULL for the scenario default */
v1ss_status v1ss_run(const char* scenario_id, long p, long n, const long window[4],
                     v1ss_result** out);

/* run a scenario loaded from JSON text (see the scenario schema docs) */
v1ss_status v1ss_run_json(const char* json_text, v1ss_result** out);

/* Poincare series of a named closed form over [lo, hi] in total degree */
v1ss_status v1ss_series(const char* expr_name, long p, long lo, long hi, v1ss_result** out);

/* full acceptance checklist for the given primes */
v1ss_status v1ss_verify_all(const long* primes, size_t nprimes, v1ss_result** out);

/* source: "figure-10-3" or a scenario id (final page is charted) */
v1ss_status v1ss_chart(const char* source, long p, long n, const long window[4],
                       int allow_untrusted, v1ss_result** out);

/* the fraction-field assembly with the dlog-relation flag */
v1ss_status v1ss_fraction_field(long p, long lo, long hi, int assume_dlog_relation,
                                v1ss_result** out);

/* 1 = every check carried by the result passed, 0 otherwise */
int v1ss_result_passed(const v1ss_result* r);

/* rendered artifacts; kinds: "report", "json", "tsv", "svg".
 * returns NULL when the result has no artifact of that kind */
const char* v1ss_result_text(const v1ss_result* r, const char* kind);

/* ids available to v1ss_run / v1ss_series, one per line */
v1ss_status v1ss_list(const char* what, v1ss_result** out);

void v1ss_result_free(v1ss_result* r);

#ifdef __cplusplus
}
#endif

#endif /* V1SS_H */
