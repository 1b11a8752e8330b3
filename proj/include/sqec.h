/* C interface to the square-root Euler class calculus library.
 *
 * All computation is exact; inputs and outputs are JSON strings (rationals
 * are strings like "3/2" or "1/2+1/2*i", never floats). Every call returns
 * a status code; on failure the message is retained on the context and the
 * output pointer is left untouched. Returned strings are heap-allocated and
 * must be released with sqec_string_free.
 */
#ifndef SQEC_H
#define SQEC_H

#ifdef __cplusplus
extern "C" {
#endif

typedef struct sqec_ctx sqec_ctx;

#define SQEC_OK 0
#define SQEC_ERR_SCHEMA 2     /* malformed input or JSON schema violation */
#define SQEC_ERR_VALIDATION 3 /* well-formed input rejected by a precondition */
#define SQEC_ERR_INTERNAL 4   /* internal convention assertion failed */

int sqec_ctx_new(sqec_ctx** out);
void sqec_ctx_free(sqec_ctx* ctx);

/* Message for the most recent failing call on this context. */
const char* sqec_last_error(const sqec_ctx* ctx);

void sqec_string_free(char* s);

const char* sqec_version(void);

/* Torus localization job: {"torus_rank":1,"theory":"chow"|"ktheory",
 * "points":[{"name":"P1","fixed_contribution":"1","t_moving":[[1]],
 * "e_moving":{"weights":[[2],[-2]],"positive_half":[[2]],"sign":1},
 * "insertion":"t^2"}], "expand_order":8, "limit":true}.
 * Result: per-point canonical strings, total, and optional limit/series. */
int sqec_localize(sqec_ctx* ctx, const char* job_json, char** out_json);

/* Characteristic classes of weight representations:
 * {"op":"euler"|"sqrt-euler"|"k-euler"|"k-sqrt-euler"|"sqrt-det"|"anderson"|"todd",
 *  "rank":1,"weights":[[2],[-2]],"positive_half":[[2]],"sign":1,"order":6}. */
int sqec_class_eval(sqec_ctx* ctx, const char* request_json, char** out_json);

/* Quadratic-space operations: {"op":"sign"|"normal-form"|"reduce"|"validate",
 * "space":{"gram":[["1","0"],["0","1"]],"orientation":"1",
 *          "subspace":[["1","-i"]]}}. */
int sqec_quadform_eval(sqec_ctx* ctx, const char* request_json, char** out_json);

/* Local CY4 reduction check: {"f0":[[1],[1]],"f1":[[3]],"rank":1}. */
int sqec_dt3_check(sqec_ctx* ctx, const char* request_json, char** out_json);

/* Catalan square-root truncation Sq_k with its exact identities. */
int sqec_sq_poly(sqec_ctx* ctx, int k, char** out_json);

/* Parse an insertion expression and return its canonical rendering. */
int sqec_poly_parse(sqec_ctx* ctx, const char* src, int rank, char** out_canonical);

/* Human-readable table for any result document produced by this API. */
int sqec_format_table(sqec_ctx* ctx, const char* result_json, char** out_text);

#ifdef __cplusplus
}
#endif

#endif /* SQEC_H */
