/* C interface to the hhverify library.
 *
 * All functions return an hhv_status code. On failure a description of the
 * most recent error on the calling thread is available from
 * hhv_last_error(). Handles are opaque and owned by the caller; release them
 * with the matching *_destroy function. Strings returned through handles
 * stay valid until the handle is destroyed.
 */
#ifndef HHVERIFY_H
#define HHVERIFY_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  define HHV_API __declspec(dllexport)
#elif defined(__GNUC__)
#  define HHV_API __attribute__((visibility("default")))
#else
#  define HHV_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum hhv_status {
  HHV_OK = 0,
  HHV_ERR_DOMAIN = 1,
  HHV_ERR_PARAM = 2,
  HHV_ERR_NO_CONVERGENCE = 3,
  HHV_ERR_EMPTY_SWEEP = 4,
  HHV_ERR_CONFIG = 5,
  HHV_ERR_NULL_ARGUMENT = 6,
  HHV_ERR_INTERNAL = 7
} hhv_status;

typedef enum hhv_row_status {
  HHV_HOLDS = 0,
  HHV_VIOLATED = 1,
  HHV_HYP_FAIL = 2,
  HHV_ERROR = 3
} hhv_row_status;

typedef enum hhv_hypothesis_status {
  HHV_HYP_CHECKED = 0,
  HHV_HYP_UNCHECKED = 1,
  HHV_HYP_ASSUMED = 2
} hhv_hypothesis_status;

typedef enum hhv_variant {
  HHV_VARIANT_LITERAL = 0,
  HHV_VARIANT_DERIVED = 1
} hhv_variant;

typedef struct hhv_function hhv_function;
typedef struct hhv_sweep hhv_sweep;

/* Parameters of one theorem instance. `p` is the exponent of the
 * |f^(n)|^p convexity hypothesis (the statements of thm1.1 and thm1.3 call
 * it q). Optional fields are ignored unless their has_* flag is nonzero. */
typedef struct hhv_params {
  double a;
  double b;
  double m;
  double alpha;
  double p;
  int n;
  int has_lambda;
  double lambda;
  int has_r;
  double r;
  hhv_variant variant;
  int has_check_domain;
  double check_lo;
  double check_hi;
  double quad_tol;
  int hyp_grid;
  double hyp_tol;
} hhv_params;

typedef struct hhv_check_result {
  int passed;
  double max_violation;
  double domain_lo;
  double domain_hi;
  int has_witness;
  double witness_x;
  double witness_y;
  double witness_lambda;
  double witness_lhs;
  double witness_rhs;
} hhv_check_result;

typedef struct hhv_outcome {
  double lhs;
  double rhs;
  double margin;
  int hypothesis_ok;
  hhv_hypothesis_status hypothesis_status;
  int has_check;
  hhv_check_result check;
  /* thm1.2 only: both case values at the given lambda */
  int has_branches;
  double rhs_lower_branch;
  double rhs_upper_branch;
  /* parameters actually used (n and p may be fixed by the theorem) */
  hhv_params params;
} hhv_outcome;

typedef struct hhv_identity_result {
  double trapezoid;
  double lemma_rhs;
  double residual;
} hhv_identity_result;

typedef struct hhv_consistency_result {
  double value_a;
  double value_b;
  double rel_diff;
  int matched;
} hhv_consistency_result;

typedef struct hhv_row {
  int64_t index;
  hhv_row_status status;
  const char* theorem_id;
  const char* fn;
  const char* error; /* empty unless status == HHV_ERROR */
  hhv_outcome outcome;
} hhv_row;

typedef struct hhv_sweep_summary {
  uint64_t seed;
  double tol;
  int64_t checked;
  int64_t violations;
  int64_t errors;
  int has_min_margin;
  double min_margin;
  int64_t min_margin_index;
} hhv_sweep_summary;

HHV_API const char* hhv_version(void);
HHV_API const char* hhv_last_error(void);

/* Parses a decimal or a rational such as "4/3". */
HHV_API hhv_status hhv_parse_number(const char* text, double* out);

/* Fills defaults: a=1, b=2, m=alpha=p=1, n=2, quad_tol=1e-10, grid 64, tol 1e-9. */
HHV_API void hhv_params_init(hhv_params* params);

HHV_API hhv_status hhv_function_parse(const char* spec, hhv_function** out);
HHV_API void hhv_function_destroy(hhv_function* fn);
HHV_API const char* hhv_function_name(const hhv_function* fn);
HHV_API hhv_status hhv_function_eval(const hhv_function* fn, double x, double* out);
HHV_API hhv_status hhv_function_deriv(const hhv_function* fn, int k, double x, double* out);

HHV_API hhv_status hhv_kernel_moment(int n, double* out);
HHV_API hhv_status hhv_gamma(double x, double* out);

HHV_API hhv_status hhv_identity(const hhv_function* fn, double a, double b, double m, int n,
                                double quad_tol, hhv_identity_result* out);
HHV_API hhv_status hhv_recurrence_residual(const hhv_function* fn, double a, double b, double m,
                                           int n, double quad_tol, double* out);

HHV_API hhv_status hhv_check_hypothesis(const hhv_function* fn, int n, double p, double alpha,
                                        double m, double lo, double hi, int grid, double tol,
                                        hhv_check_result* out);

/* theorem_id: "hh", "thm1.1" ... "thm3.3", "cor_e", "cor_k", "prop1".."prop6".
 * fn may be NULL for the prop* ids. */
HHV_API hhv_status hhv_evaluate_bound(const char* theorem_id, const hhv_function* fn,
                                      const hhv_params* params, int check_hypothesis,
                                      hhv_outcome* out);
HHV_API hhv_row_status hhv_classify(const hhv_outcome* outcome, double tol);

/* kind: "A", "G", "H", "I", "L", "Lr" (r used only by Lr). */
HHV_API hhv_status hhv_mean(const char* kind, double r, double x, double y, double* out);

HHV_API hhv_status hhv_consistency(const char* pair_id, const hhv_function* fn,
                                   const hhv_params* params, hhv_consistency_result* out);

/* Runs a sweep described by a JSON config document. */
HHV_API hhv_status hhv_sweep_run(const char* config_json, int jobs, hhv_sweep** out);
HHV_API void hhv_sweep_destroy(hhv_sweep* sweep);
HHV_API int64_t hhv_sweep_row_count(const hhv_sweep* sweep);
HHV_API hhv_status hhv_sweep_row(const hhv_sweep* sweep, int64_t i, hhv_row* out);
HHV_API hhv_status hhv_sweep_summary_get(const hhv_sweep* sweep, hhv_sweep_summary* out);
/* Smallest margin >= -tol among hypothesis-passing rows; HHV_ERR_EMPTY_SWEEP if none. */
HHV_API hhv_status hhv_sweep_tightness(const hhv_sweep* sweep, double* margin, int64_t* index);

#ifdef __cplusplus
}
#endif

#endif /* HHVERIFY_H */
