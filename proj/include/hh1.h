/* C API for the hh1 library: first Hochschild cohomology data, truncated
 * integrable-derivation structure and group-algebra transfer maps for
 * finite-dimensional algebras over prime fields.
 *
 * Handles are opaque; every function returns a status code. Report commands
 * produce deterministic JSON text owned by the caller (free with
 * hh1_string_free). On failure, hh1_last_error() describes the problem.
 */

#ifndef HH1_H
#define HH1_H

#ifdef __cplusplus
extern "C" {
#endif

typedef enum hh1_status {
    HH1_OK = 0,
    HH1_ERR_INPUT = 2, /* parse failures, caps, bad arguments */
    HH1_ERR_MATH = 3   /* violated mathematical preconditions */
} hh1_status;

typedef struct hh1_algebra hh1_algebra;

/* Message for the most recent failure on this thread. */
const char* hh1_last_error(void);

/* Parse the JSON algebra format (fields p, labels, table, unit). The
 * dimension cap honours the HH1_MAX_DIM environment variable, hard-capped
 * at 64. */
hh1_status hh1_algebra_parse(const char* json_text, hh1_algebra** out);

/* Built-in algebras: "s3" or "cN" for 1 <= N <= 12. */
hh1_status hh1_algebra_builtin(const char* name, unsigned p, hh1_algebra** out);

void hh1_algebra_free(hh1_algebra* a);
unsigned hh1_algebra_dim(const hh1_algebra* a);
unsigned hh1_algebra_modulus(const hh1_algebra* a);

/* Derivation arguments accept a builtin name (f0/f1/f2, valid on the c3
 * builtin with p = 3) or JSON matrix text ([[...], ...] or
 * {"matrix": [[...], ...]}). */

hh1_status hh1_cmd_validate(const hh1_algebra* a, char** out_json);
hh1_status hh1_cmd_center(const hh1_algebra* a, char** out_json);
hh1_status hh1_cmd_hh1(const hh1_algebra* a, char** out_json);
hh1_status hh1_cmd_ppower(const hh1_algebra* a, const char* derivation, char** out_json);
hh1_status hh1_cmd_bracket(const hh1_algebra* a, const char* derivation_a,
                           const char* derivation_b, char** out_json);
hh1_status hh1_cmd_integrate(const hh1_algebra* a, const char* derivation, unsigned r,
                             unsigned order, unsigned branch_limit, char** out_json);
hh1_status hh1_cmd_hh1r(const hh1_algebra* a, unsigned r, unsigned order, unsigned branch_limit,
                        char** out_json);
/* Uses the built-in s3_over_c3 setup; no input handle. */
hh1_status hh1_cmd_counterexample(char** out_json);
hh1_status hh1_cmd_morita_check(const hh1_algebra* a, unsigned m, char** out_json);

void hh1_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif /* HH1_H */
