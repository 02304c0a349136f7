/*
 * C interface to the vvmf library: exact q-expansions of vector-valued
 * modular functions from fundamental data (Lambda, X), algebraic validators,
 * half-integer-weight form spaces, and representation diagnostics.
 *
 * All functions returning vvmf_status leave a human-readable message
 * retrievable via vvmf_last_error() on failure. Strings returned through
 * out-parameters are heap-allocated and must be released with
 * vvmf_string_free(). Handles are opaque and freed with their _free function.
 * All inputs and outputs are JSON; the schemas are documented in README.md.
 */
#ifndef VVMF_H
#define VVMF_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum vvmf_status {
  VVMF_OK = 0,
  VVMF_CHECK_FAILED = 1,       /* a mathematical check evaluated to false */
  VVMF_PARSE_ERROR = 2,        /* malformed input */
  VVMF_PRECONDITION_FAILED = 3,/* violated mathematical precondition */
  VVMF_INTERNAL_ERROR = 4
} vvmf_status;

const char* vvmf_version(void);

/* Thread-local message describing the most recent failure. */
const char* vvmf_last_error(void);

void vvmf_string_free(char* s);

/*
 * One-shot job runner: command is one of validate, expand, det-check,
 * hyper-check, dual, shift, basis, invert, gf-check, dims, form-basis,
 * rep-audit, reduce. options_json may be NULL or "{}". The full report JSON
 * (command, inputs-digest, results, checks) is always produced when the
 * command is recognized, including for failing checks.
 */
vvmf_status vvmf_run_job(const char* command, const char* input_json,
                         const char* options_json, char** report_json_out);

/* ---- handle API --------------------------------------------------------- */

typedef struct vvmf_repdata_t vvmf_repdata_t;
typedef struct vvmf_fundamental_t vvmf_fundamental_t;
typedef struct vvmf_modrep_t vvmf_modrep_t;

/* Fundamental data {"lambda": ["p/q", ...], "X": [["p/q", ...], ...]}. */
vvmf_status vvmf_repdata_parse(const char* json, vvmf_repdata_t** out);
void vvmf_repdata_free(vvmf_repdata_t* rep);
int vvmf_repdata_dim(const vvmf_repdata_t* rep);
vvmf_status vvmf_repdata_to_json(const vvmf_repdata_t* rep, char** json_out);
vvmf_status vvmf_repdata_dual(const vvmf_repdata_t* rep, vvmf_repdata_t** out);
/* Spectral, monodromy and trace validators; report as in run_job. */
vvmf_status vvmf_repdata_validate(const vvmf_repdata_t* rep, char** report_json_out);

/* q-expansion of the fundamental matrix through q^order (relative). */
vvmf_status vvmf_fundamental_expand(const vvmf_repdata_t* rep, long order,
                                    vvmf_fundamental_t** out);
void vvmf_fundamental_free(vvmf_fundamental_t* f);
long vvmf_fundamental_order(const vvmf_fundamental_t* f);
vvmf_status vvmf_fundamental_to_json(const vvmf_fundamental_t* f, char** json_out);
/* Single entry as a series ({"offset": .., "coeffs": [..], "order": ..}). */
vvmf_status vvmf_fundamental_entry(const vvmf_fundamental_t* f, size_t row, size_t col,
                                   char** series_json_out);

/* Representation {"conductor": N, "S": [[..]], "T_diag": [..]}. */
vvmf_status vvmf_modrep_parse(const char* json, vvmf_modrep_t** out);
void vvmf_modrep_free(vvmf_modrep_t* rep);
/* Rationality, congruence and positivity diagnostics; pass a negative
 * component index to skip the distinguished-column test. */
vvmf_status vvmf_modrep_audit(const vvmf_modrep_t* rep, int distinguished_component,
                              char** report_json_out);

#ifdef __cplusplus
}
#endif

#endif /* VVMF_H */
