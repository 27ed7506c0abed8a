#ifndef TOLSPACE_H
#define TOLSPACE_H

/* C API for the tolspace library: finite tolerance continua, level-indexed
 * closure/interior, separability, motions, nets, an exact-rational real
 * continuum, metric balls, and morphism continuity checks.
 *
 * Conventions:
 *   - Every function returns a status code (below). On failure, when `err`
 *     is non-NULL it receives a malloc'd message; free it with
 *     tolspace_string_free.
 *   - Sets of positions come back as tolspace_strings_t (ids in canonical
 *     carrier order); tabular results as tolspace_rows_t.
 *   - Rationals travel as strings in canonical lowest terms ("p/q" or "p").
 *   - Classes are referenced by declared name or inline as "{id,id,...}".
 *   - Handles are opaque; free them with the matching *_free function.
 */

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

/* Status codes mirror the CLI exit contract. */
enum {
    TOLSPACE_OK = 0,
    TOLSPACE_FAILED = 1,   /* a check/property failed, witness in err or payload */
    TOLSPACE_BAD_INPUT = 2 /* malformed input, unknown reference, size cutoff */
};

typedef struct tolspace_workspace_t tolspace_workspace_t;
typedef struct tolspace_strings_t tolspace_strings_t;
typedef struct tolspace_rows_t tolspace_rows_t;

const char* tolspace_version(void);
void tolspace_string_free(char* s);

size_t tolspace_strings_count(const tolspace_strings_t* s);
const char* tolspace_strings_get(const tolspace_strings_t* s, size_t i);
void tolspace_strings_free(tolspace_strings_t* s);

size_t tolspace_rows_count(const tolspace_rows_t* r);
size_t tolspace_rows_width(const tolspace_rows_t* r, size_t row);
const char* tolspace_rows_get(const tolspace_rows_t* r, size_t row, size_t col);
void tolspace_rows_free(tolspace_rows_t* r);

/* ---- workspaces (space-spec files) ---- */

int tolspace_workspace_load(const char* path, tolspace_workspace_t** out, char** err);
int tolspace_workspace_parse(const char* text, tolspace_workspace_t** out, char** err);
void tolspace_workspace_free(tolspace_workspace_t* ws);
int tolspace_workspace_print(const tolspace_workspace_t* ws, char** out, char** err);

int tolspace_space_count(const tolspace_workspace_t* ws, size_t* out, char** err);
int tolspace_space_name(const tolspace_workspace_t* ws, size_t index, char** out, char** err);
/* space may be "" when the file declares exactly one continuum */
int tolspace_space_levels(const tolspace_workspace_t* ws, const char* space, int* out_max_level,
                          char** err);
int tolspace_space_carrier(const tolspace_workspace_t* ws, const char* space,
                           tolspace_strings_t** out, char** err);

/* ---- core: validation and level images ---- */

/* Rows: condition | level | witness ids... ; *ok is 1 when no violations.
 * Returns TOLSPACE_FAILED when violations exist (rows still filled). */
int tolspace_validate(const tolspace_workspace_t* ws, const char* space, int* ok,
                      tolspace_rows_t** violations, char** err);
/* Side condition for point separation: 1 when every pair of monads is
 * discernible at some level; witness gets two block representatives else. */
int tolspace_monad_discernibility(const tolspace_workspace_t* ws, const char* space, int* ok,
                                  tolspace_strings_t** witness, char** err);
int tolspace_is_totally_disconnected(const tolspace_workspace_t* ws, const char* space, int* out,
                                     char** err);

int tolspace_image(const tolspace_workspace_t* ws, const char* space, const char* position,
                   int level, tolspace_strings_t** out, char** err);
int tolspace_monad(const tolspace_workspace_t* ws, const char* space, const char* position,
                   tolspace_strings_t** out, char** err);

/* ---- figures ---- */

int tolspace_closure(const tolspace_workspace_t* ws, const char* space, const char* cls,
                     int level, tolspace_strings_t** out, char** err);
int tolspace_interior(const tolspace_workspace_t* ws, const char* space, const char* cls,
                      int level, tolspace_strings_t** out, char** err);
int tolspace_figure_of(const tolspace_workspace_t* ws, const char* space, const char* cls,
                       tolspace_strings_t** out, char** err);
int tolspace_closed_hull(const tolspace_workspace_t* ws, const char* space, const char* cls,
                         int level, tolspace_strings_t** out, char** err);
int tolspace_is_figure(const tolspace_workspace_t* ws, const char* space, const char* cls,
                       int* out, char** err);
int tolspace_is_open(const tolspace_workspace_t* ws, const char* space, const char* cls,
                     int level, int* out, char** err);
int tolspace_is_closed(const tolspace_workspace_t* ws, const char* space, const char* cls,
                       int level, int* out, char** err);
int tolspace_is_clopen(const tolspace_workspace_t* ws, const char* space, const char* cls,
                       int level, int* out, char** err);
int tolspace_is_neighborhood(const tolspace_workspace_t* ws, const char* space, const char* cls,
                             const char* position, int level, int* out, char** err);
/* least separating level in *level (unchanged when not separable) */
int tolspace_separable(const tolspace_workspace_t* ws, const char* space, const char* cls_x,
                       const char* cls_y, int* separable, int* level, char** err);
/* one row per open class (its member ids); carriers capped at 20 positions */
int tolspace_open_family(const tolspace_workspace_t* ws, const char* space, int level,
                         tolspace_rows_t** out, char** err);

/* ---- connectivity ---- */

int tolspace_components(const tolspace_workspace_t* ws, const char* space, const char* cls,
                        int level, tolspace_rows_t** out, char** err);
/* when not connected: *out = 0 and witness gets one side of a violating split */
int tolspace_is_connected(const tolspace_workspace_t* ws, const char* space, const char* cls,
                          int level, int* out, tolspace_strings_t** witness, char** err);
int tolspace_motion_through(const tolspace_workspace_t* ws, const char* space, const char* cls,
                            int level, tolspace_strings_t** motion, char** err);
int tolspace_is_motion(const tolspace_workspace_t* ws, const char* space,
                       const char* const* steps, size_t n_steps, int level, int* out, char** err);
int tolspace_maximal_net(const tolspace_workspace_t* ws, const char* space, const char* cls,
                         int level, tolspace_strings_t** members, int* maximal, char** err);
int tolspace_cluster_position(const tolspace_workspace_t* ws, const char* space,
                              const char* const* seq, size_t n_seq, int level, char** member,
                              size_t* count, char** err);
int tolspace_accumulation_points(const tolspace_workspace_t* ws, const char* space,
                                 const char* cls, int budget, tolspace_strings_t** accumulation,
                                 tolspace_strings_t** isolation, char** err);
int tolspace_converges_to(const tolspace_workspace_t* ws, const char* space,
                          const char* const* seq, size_t n_seq, const char* target, int* depth,
                          char** err);

/* ---- exact rationals and the real continuum ---- */

/* op: "add" | "mul" | "neg" | "le" | "eq"; for "neg" q may be NULL; "eq"
 * consults level; boolean results print as "true"/"false". */
int tolspace_real_arith(const char* op, const char* p, const char* q, int level, char** out,
                        char** err);
int tolspace_archimedean_witness(const char* q, char** out, char** err);
int tolspace_lub(const char* const* members, size_t n_members, const char* a, const char* b,
                 int iterations, char** out, char** err);
/* kind: "open" | "closed" | "half-open-left" | "half-open-right" */
int tolspace_interval(const tolspace_workspace_t* ws, const char* space, const char* a,
                      const char* b, const char* kind, int level, tolspace_strings_t** out,
                      char** err);

/* ---- metrics ---- */

int tolspace_metric_count(const tolspace_workspace_t* ws, size_t* out, char** err);
int tolspace_metric_name(const tolspace_workspace_t* ws, size_t index, char** out, char** err);
int tolspace_metric_validate(const tolspace_workspace_t* ws, const char* metric, int* ok,
                             tolspace_rows_t** violations, char** err);
int tolspace_ball(const tolspace_workspace_t* ws, const char* metric, const char* center,
                  const char* radius, int depth, tolspace_strings_t** out, char** err);

/* ---- morphisms ---- */

int tolspace_preserves_at(const tolspace_workspace_t* ws, const char* function, int source_level,
                          int target_level, int* out, char** err);
/* rows: target level | least source level or "none"; *uniform as 0/1 */
int tolspace_modulus(const tolspace_workspace_t* ws, const char* function, tolspace_rows_t** out,
                     int* uniform, char** err);
int tolspace_preserves_connected(const tolspace_workspace_t* ws, const char* function,
                                 int source_level, int target_level, int* out,
                                 tolspace_strings_t** witness_edge, char** err);
int tolspace_push_motion(const tolspace_workspace_t* ws, const char* function,
                         const char* const* steps, size_t n_steps, int source_level,
                         int target_level, int* ok, tolspace_strings_t** image, char** err);
int tolspace_preimage_open_check(const tolspace_workspace_t* ws, const char* function,
                                 int source_level, int target_level, int* out,
                                 tolspace_strings_t** witness, char** err);
int tolspace_preimage_closed_check(const tolspace_workspace_t* ws, const char* function,
                                   int source_level, int target_level, int* out,
                                   tolspace_strings_t** witness, char** err);
int tolspace_functions_equal_at(const tolspace_workspace_t* ws, const char* function_f,
                                const char* function_g, int level, int* out, char** err);
/* metrics default to absolute difference on numeric carriers when "" is
 * passed; rows: epsilon | delta or "none" */
int tolspace_epsilon_delta(const tolspace_workspace_t* ws, const char* function,
                           const char* source_metric, const char* target_metric,
                           const char* const* epsilons, size_t n_epsilons, int* ok,
                           tolspace_rows_t** out, char** err);

/* ---- export and suites ---- */

/* level -1 emits one graph block per level */
int tolspace_export_dot(const tolspace_workspace_t* ws, const char* space, int level, char** out,
                        char** err);
/* module: core|figures|graded|connectivity|real|metric|morphism|cli|all.
 * rows: id | module | criterion | PASS/FAIL | detail. Returns
 * TOLSPACE_FAILED when any check fails. */
int tolspace_suite_run(const char* module, uint64_t seed, tolspace_rows_t** results,
                       int* failures, char** err);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* TOLSPACE_H */
