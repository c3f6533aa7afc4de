/* koptmix — K-optimal experimental designs for Scheffé mixture models.
 *
 * C interface of the shared library. All functions that can fail return a
 * koptmix_status; on failure, koptmix_last_error() yields a one-line
 * diagnostic for the calling thread. Objects returned through out-pointers
 * are owned by the caller and released with the matching *_free function.
 */

#ifndef KOPTMIX_H
#define KOPTMIX_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum koptmix_status {
  KOPTMIX_OK = 0,
  KOPTMIX_ERR_INVALID_ARGUMENT = 1,
  KOPTMIX_ERR_DIMENSION_MISMATCH = 2,
  KOPTMIX_ERR_INFEASIBLE_BOUNDS = 3,
  KOPTMIX_ERR_OUT_OF_REGION = 4,
  KOPTMIX_ERR_SINGULAR = 5,
  KOPTMIX_ERR_NO_CONVERGENCE = 6,
  KOPTMIX_ERR_PARSE = 7,
  KOPTMIX_ERR_INTERNAL = 8
} koptmix_status;

typedef struct koptmix_design koptmix_design;
typedef struct koptmix_bounds koptmix_bounds;

/* Library version string, e.g. "1.0.0". Static storage; do not free. */
const char* koptmix_version(void);

/* Message of the last failing call on this thread ("" when none). */
const char* koptmix_last_error(void);

/* Releases strings returned through char** out-parameters. */
void koptmix_string_free(char* s);

/* --- design construction ------------------------------------------- */

/* {q,m} simplex-lattice points with uniform weights. */
koptmix_status koptmix_design_lattice(int q, int m, koptmix_design** out);

/* Simplex-centroid points (2^q - 1) with uniform weights. */
koptmix_status koptmix_design_centroid(int q, koptmix_design** out);

/* Condition-number-minimizing design for the Scheffé model of the given
 * order (1 or 2). */
koptmix_status koptmix_design_k_optimal(int q, int order, koptmix_design** out);

/* Parses design JSON: {"q":3,"points":[[1,0,0],...],"weights":[...]}.
 * Weights default to uniform when absent. */
koptmix_status koptmix_design_parse_json(const char* json, koptmix_design** out);

void koptmix_design_free(koptmix_design* d);

/* --- design inspection --------------------------------------------- */

int koptmix_design_q(const koptmix_design* d);
int koptmix_design_point_count(const koptmix_design* d);

/* Copies the q coordinates of point `index` into coords_out. */
koptmix_status koptmix_design_point(const koptmix_design* d, int index, double* coords_out);
koptmix_status koptmix_design_weight(const koptmix_design* d, int index, double* weight_out);

koptmix_status koptmix_design_to_json(const koptmix_design* d, char** out);
koptmix_status koptmix_design_to_csv(const koptmix_design* d, char** out);

/* --- constrained regions ------------------------------------------- */

/* Parses bounds JSON: {"lower":[...],"upper":[...]} (either optional). */
koptmix_status koptmix_bounds_parse_json(const char* json, koptmix_bounds** out);
void koptmix_bounds_free(koptmix_bounds* b);

typedef enum koptmix_transform {
  KOPTMIX_TO_PSEUDO_LOWER = 0,
  KOPTMIX_FROM_PSEUDO_LOWER = 1,
  KOPTMIX_TO_PSEUDO_UPPER = 2,
  KOPTMIX_FROM_PSEUDO_UPPER = 3
} koptmix_transform;

/* Applies a pseudo-component transform pointwise; weights are kept. */
koptmix_status koptmix_design_transform(const koptmix_design* d, const koptmix_bounds* b,
                                        koptmix_transform direction, koptmix_design** out);

/* --- evaluation ----------------------------------------------------- */

/* Metrics report JSON for the Scheffé model of the given order:
 * {"p":6,"lambda_max":...,"lambda_min":...,"kappa":...|"inf",
 *  "log_det":...|"-inf"} */
koptmix_status koptmix_design_metrics_json(const koptmix_design* d, int order, char** out);

/* D- and K-efficiency of the closed-form K-optimal design against the
 * equal-weight {q,2} lattice for the second-order model:
 * {"eff_d_of_k":...,"eff_k_of_d":...} */
koptmix_status koptmix_efficiency_json(int q, char** out);

/* --- weight optimization -------------------------------------------- */

typedef enum koptmix_criterion { KOPTMIX_CRITERION_K = 0, KOPTMIX_CRITERION_D = 1 } koptmix_criterion;

typedef struct koptmix_optimize_options {
  int criterion;          /* koptmix_criterion */
  int multistarts;        /* >= 1 */
  unsigned long long seed;
  int symmetry_reduction; /* nonzero = exploit support orbits */
  double tolerance;       /* weight-space convergence */
  int threads;            /* multistart workers; result is thread-count independent */
} koptmix_optimize_options;

/* Fills in the defaults: K criterion, 20 starts, seed 0, symmetry on,
 * tolerance 1e-9, 1 thread. */
void koptmix_optimize_options_init(koptmix_optimize_options* opts);

/* Optimizes weights on the support of `design` (its weights are ignored)
 * for the Scheffé model of the given order. Emits OptimizeResult JSON:
 * {"weights":[...],"objective":...,"converged":true,"iterations":...,
 *  "starts_used":...} */
koptmix_status koptmix_optimize(const koptmix_design* support, int order,
                                const koptmix_optimize_options* opts, char** result_json_out);

/* --- reports --------------------------------------------------------- */

/* Vertex/midpoint weight table for q = 3..q_max; format 0 = aligned text,
 * 1 = CSV with header q,r1,n1,n1r1,r2,n2,n2r2,total_points. */
koptmix_status koptmix_table(int q_max, int format, char** out);

#ifdef __cplusplus
}
#endif

#endif /* KOPTMIX_H */
