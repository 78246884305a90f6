/* hgc — convolution algebras of finite measured groupoid actions.
 *
 * C interface to the core library: load and validate groupoids and measured
 * G-spaces, build orbit spaces and structure-constant tables, convolve and
 * involute finitely supported functions, compute I-norms and reduced norms,
 * search for algebra units, and run the seeded property suite.
 *
 * Conventions
 *   - Every fallible call returns an hgc_status; HGC_OK means success.
 *     On failure, hgc_last_error() describes the problem for the calling
 *     thread until the next failing call on that thread.
 *   - Output strings (char**) are heap-allocated, UTF-8, NUL-terminated;
 *     release them with hgc_string_free().  JSON outputs are in canonical
 *     form: sorted keys, two-space indent, trailing newline.
 *   - Handles are opaque and immutable; one hgc_*_free per successful
 *     constructor.  NULL handles and NULL out-pointers are argument errors.
 *   - All handles are safe for concurrent reads from multiple threads.
 */

#ifndef HGC_H
#define HGC_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum hgc_status {
  HGC_OK = 0,
  HGC_ERROR_PARSE = 1,    /* malformed file or value syntax */
  HGC_ERROR_INVALID = 2,  /* axiom violations in an object being constructed */
  HGC_ERROR_ARGUMENT = 3, /* domain error: mismatched objects, bad name, NULL */
  HGC_ERROR_IO = 4,       /* unreadable file */
  HGC_ERROR_INTERNAL = 5  /* unexpected condition inside the library */
} hgc_status;

/* A validated finite groupoid with its Haar weights. */
typedef struct hgc_groupoid hgc_groupoid;
/* A validated measured G-space bound to its groupoid. */
typedef struct hgc_space hgc_space;
/* A finitely supported function on (X*Y)/G together with its full context:
 * groupoid, destination object, source object. */
typedef struct hgc_arrow hgc_arrow;

/* Message for the most recent failure on the calling thread; never NULL.
 * The pointer stays valid until the next failing hgc_* call on the thread. */
const char* hgc_last_error(void);

/* Frees a string returned through any char** output. NULL is a no-op. */
void hgc_string_free(char* s);

/* ------------------------------------------------------------------ */
/* Groupoids                                                          */
/* ------------------------------------------------------------------ */

/* Parses and fully validates a groupoid from its JSON text.
 * HGC_ERROR_INVALID when any axiom fails (details via hgc_last_error). */
hgc_status hgc_groupoid_parse(const char* json_text, hgc_groupoid** out);

/* Parses the JSON text and reports every violated axiom without
 * constructing anything.  Succeeds with {"ok": false, ...} for invalid
 * tables; only syntax errors fail the call. */
hgc_status hgc_groupoid_check(const char* json_text, char** out_report_json);

hgc_status hgc_groupoid_to_json(const hgc_groupoid* g, char** out_json);
void hgc_groupoid_free(hgc_groupoid* g);

/* ------------------------------------------------------------------ */
/* Measured G-spaces                                                  */
/* ------------------------------------------------------------------ */

/* Parses and validates a measured G-space over g.  Weights default to 1
 * per point when the file omits them. */
hgc_status hgc_space_parse(const hgc_groupoid* g, const char* json_text,
                           hgc_space** out);

/* Validation report for a space file over g, without constructing. */
hgc_status hgc_space_check(const hgc_groupoid* g, const char* json_text,
                           char** out_report_json);

hgc_status hgc_space_to_json(const hgc_space* x, char** out_json);
void hgc_space_free(hgc_space* x);

/* ------------------------------------------------------------------ */
/* Orbit spaces and structure constants                               */
/* ------------------------------------------------------------------ */

/* Orbits of the diagonal action on X*Y for spaces over the same groupoid:
 * {"pair_count", "orbit_count", "orbits": [{"key", "members"}]}. */
hgc_status hgc_orbits(const hgc_space* left, const hgc_space* right,
                      char** out_json);

/* Structure-constant table of (X*X)/G:
 * {"orbits", "star", "constants": [[o, p, q, "value"], ...]}. */
hgc_status hgc_hyper(const hgc_space* x, char** out_json);

/* ------------------------------------------------------------------ */
/* Arrows (functions on orbit spaces)                                 */
/* ------------------------------------------------------------------ */

/* Parses a function file: {"groupoid", "dst_space", "src_space", "values"}.
 * The three context entries are inline objects or file-path strings
 * resolved against base_dir (may be NULL for "."). */
hgc_status hgc_arrow_parse(const char* json_text, const char* base_dir,
                           hgc_arrow** out);

hgc_status hgc_arrow_to_json(const hgc_arrow* f, char** out_json);
void hgc_arrow_free(hgc_arrow* f);

/* Convolution f ∗ g; the source object of f must equal the destination
 * object of g (same points, same weights, same groupoid). */
hgc_status hgc_convolve(const hgc_arrow* f, const hgc_arrow* g,
                        hgc_arrow** out);

/* Involution f*[y,x] = conj(f[x,y]). */
hgc_status hgc_involute(const hgc_arrow* f, hgc_arrow** out);

/* kind "i": maximum weighted row/column absolute sum.
 * kind "reduced": operator norm of the regular representation. */
hgc_status hgc_norm(const hgc_arrow* f, const char* kind, double* out);

/* Searches for the two-sided unit of the algebra on (X*X)/G.  *out_found
 * is 1 with the unit serialized as a function file, or 0 with
 * *out_arrow_json left NULL. */
hgc_status hgc_unit(const hgc_space* x, int* out_found, char** out_arrow_json);

/* Matrix of the regular representation in the point bases:
 * {"rows", "cols", "row_weights", "col_weights", "entries"}. */
hgc_status hgc_rep_matrix(const hgc_arrow* f, char** out_json);

/* ------------------------------------------------------------------ */
/* Property suite and shipped examples                                */
/* ------------------------------------------------------------------ */

/* Runs `trials` seeded random instances of every library law and writes
 * the deterministic transcript.  *out_ok is 1 iff no property failed. */
hgc_status hgc_axioms(uint64_t seed, int trials, int* out_ok,
                      char** out_transcript);

/* Newline-separated list of shipped example names. */
hgc_status hgc_example_names(char** out_names);

/* Builds a shipped example and returns its groupoid, space, and
 * structure-constant table as canonical JSON.  Any output pointer may be
 * NULL to skip that piece. */
hgc_status hgc_example(const char* name, char** out_groupoid_json,
                       char** out_space_json, char** out_table_json);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* HGC_H */
