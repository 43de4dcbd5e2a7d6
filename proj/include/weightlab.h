/* weightlab C API: label counting, radical-subgroup classification and
 * brute-force cross-checks for finite general linear and unitary groups.
 *
 * All functions that produce output allocate a NUL-terminated string that the
 * caller releases with wl_string_free.  Errors are reported through the
 * wl_status return value; wl_last_error_message gives a human-readable
 * description of the most recent failure on the calling thread.
 */
#ifndef WEIGHTLAB_H
#define WEIGHTLAB_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct wl_context wl_context;

typedef enum wl_status {
    WL_OK = 0,
    WL_ERR_INVALID = 1,   /* invalid parameters */
    WL_ERR_CAP = 2,       /* a configured cap was exceeded */
    WL_ERR_VERIFY = 3,    /* a verification-style call found a mismatch */
    WL_ERR_INTERNAL = 4
} wl_status;

/* q must be a prime power, eta +1 or -1, ell a prime different from the
 * characteristic.  Returns NULL on invalid parameters. */
wl_context* wl_context_new(uint64_t q, int eta, uint64_t ell);
void wl_context_free(wl_context* ctx);

void wl_string_free(char* s);
const char* wl_last_error_message(void);
const char* wl_version(void);

/* group is "gl" or "sl" (the eta of the context decides linear vs unitary).
 * with_oracle != 0 additionally computes the brute-force ell-regular class
 * count (subject to closure_cap; pass 0 for the default cap) and fails with
 * WL_ERR_VERIFY if it disagrees with the label count. */
wl_status wl_count(wl_context* ctx, unsigned n, const char* group, int with_oracle,
                   uint64_t closure_cap, char** json_out);

/* JSON-lines (format = "jsonl") or tab-separated (format = "tsv") records,
 * one per Brauer label of GL_n/GU_n. */
wl_status wl_labels(wl_context* ctx, unsigned n, const char* format, char** out);

/* shape_json: {"n0": int, "components": [{"kind": "R"|"S"|"E+"|"E-",
 * "m": int, "alpha": int, "gamma": int, "c": [ints]}]} .
 * Classification record: specialness, determinant data, splitting count,
 * exceptional case, D-substitution and the replacement case id. */
wl_status wl_radical(wl_context* ctx, const char* shape_json, char** json_out);

/* options_json (all optional): {"m_max": 3, "alpha_max": 1, "gamma_max": 2,
 * "ell_q": [[3,4],...], "inject_sign_flip": false, "emit_matrices": false}.
 * Emits one JSON line per claim plus a trailing summary line.  Returns
 * WL_ERR_VERIFY when any claim fails. */
wl_status wl_verify_section3(const char* options_json, char** json_out);

/* Brute-force conjugacy-class/radical-subgroup tables.  group is one of
 * "gl", "sl", "gu", "su"; the context eta must match. */
wl_status wl_bruteforce_classes(wl_context* ctx, unsigned n, const char* group,
                                uint64_t closure_cap, char** json_out);
wl_status wl_bruteforce_radical(wl_context* ctx, unsigned n, const char* group,
                                uint64_t closure_cap, char** json_out);

#ifdef __cplusplus
}
#endif

#endif /* WEIGHTLAB_H */
