#ifndef CYCLO_CYCLO_H
#define CYCLO_CYCLO_H

/* C interface to the cyclomatic quotient library. Every call returns a
 * status; on failure cyclo_last_error() describes it for the calling thread.
 * Handles are opaque and released with the matching destroy function.
 * Strings returned through `const char**` stay valid until the handle that
 * produced them is destroyed. */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define CYCLO_API __declspec(dllexport)
#else
#define CYCLO_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum cyclo_status {
  CYCLO_OK = 0,
  CYCLO_E_INVALID_SPEC = 1,
  CYCLO_E_INVALID_TABLE,
  CYCLO_E_TRIVIAL_FREE_PRODUCT_FACTOR,
  CYCLO_E_BACKEND_MISMATCH,
  CYCLO_E_UNKNOWN_SYMBOL,
  CYCLO_E_IDENTITY_GENERATOR,
  CYCLO_E_BALL_TOO_LARGE,
  CYCLO_E_EMPTY_SELECTION,
  CYCLO_E_TRIVIAL_SUBGRAPH,
  CYCLO_E_CAPACITY_OVERFLOW,
  CYCLO_E_TOO_LARGE,
  CYCLO_E_DIVISION_BY_ZERO,
  CYCLO_E_IMAGES_DO_NOT_GENERATE,
  CYCLO_E_UNSUPPORTED,
  CYCLO_E_INVALID_ARGUMENT,
  CYCLO_E_NULL_POINTER = 100,
  CYCLO_E_OUT_OF_RANGE,
  CYCLO_E_INTEGER_OVERFLOW, /* a rational does not fit in int64 */
  CYCLO_E_INTERNAL
} cyclo_status;

CYCLO_API const char* cyclo_status_name(cyclo_status status);
CYCLO_API const char* cyclo_last_error(void);

typedef struct cyclo_rational {
  int64_t num;
  int64_t den; /* > 0, gcd(num, den) = 1 */
} cyclo_rational;

typedef struct cyclo_letter {
  const char* symbol;
  int exponent;
} cyclo_letter;

typedef struct cyclo_word {
  const cyclo_letter* letters;
  size_t length;
} cyclo_word;

/* ---- groups ---- */

typedef struct cyclo_group cyclo_group;

CYCLO_API cyclo_status cyclo_group_cyclic(uint64_t order, cyclo_group** out);
CYCLO_API cyclo_status cyclo_group_free(uint32_t rank, cyclo_group** out);
/* `table` is size×size, row-major: table[a*size+b] = a*b. */
CYCLO_API cyclo_status cyclo_group_table(size_t size, const char* const* names,
                                         const uint32_t* table, const uint32_t* generators,
                                         size_t generator_count, cyclo_group** out);
CYCLO_API cyclo_status cyclo_group_direct_product(const cyclo_group* const* factors,
                                                  size_t count, cyclo_group** out);
CYCLO_API cyclo_status cyclo_group_free_product(const cyclo_group* const* factors,
                                                size_t count, cyclo_group** out);
CYCLO_API void cyclo_group_destroy(cyclo_group* group);

CYCLO_API cyclo_status cyclo_group_describe(const cyclo_group* group, const char** out);
CYCLO_API cyclo_status cyclo_group_order(const cyclo_group* group, uint64_t* order,
                                         int* finite);

typedef enum cyclo_amenability {
  CYCLO_AMENABLE_YES = 0,
  CYCLO_AMENABLE_NO = 1,
  CYCLO_AMENABLE_UNKNOWN = 2
} cyclo_amenability;

typedef struct cyclo_facts {
  uint64_t order;
  int finite;
  cyclo_amenability amenable;
  int64_t free_rank; /* -1 when not free */
  size_t generators;
  int minimal;
  int xi_maximum_attained;
} cyclo_facts;

CYCLO_API cyclo_status cyclo_group_facts(const cyclo_group* group, cyclo_facts* out);

/* ---- markings ---- */

typedef struct cyclo_marked cyclo_marked;

/* Symbols g0, g1, ... on the default generators. */
CYCLO_API cyclo_status cyclo_marked_default(const cyclo_group* group, cyclo_marked** out);
/* Binds symbols[i] to words[i], written in the default symbols. */
CYCLO_API cyclo_status cyclo_marked_remark(const cyclo_group* group,
                                           const char* const* symbols,
                                           const cyclo_word* words, size_t count,
                                           cyclo_marked** out);
CYCLO_API void cyclo_marked_destroy(cyclo_marked* marked);
CYCLO_API size_t cyclo_marked_rank(const cyclo_marked* marked);
CYCLO_API const char* cyclo_marked_symbol(const cyclo_marked* marked, size_t j);
CYCLO_API int cyclo_marked_is_default(const cyclo_marked* marked);

/* ---- balls ---- */

typedef struct cyclo_ball cyclo_ball;

typedef struct cyclo_counts {
  uint64_t beta0;
  uint64_t beta1;
  uint64_t alpha;
  uint64_t beta2;
  uint64_t e_out;
  uint64_t boundary_size;
} cyclo_counts;

/* vertex_cap = 0 selects the library default. */
CYCLO_API cyclo_status cyclo_ball_build(const cyclo_marked* marked, uint32_t radius,
                                        size_t vertex_cap, cyclo_ball** out);
CYCLO_API void cyclo_ball_destroy(cyclo_ball* ball);
CYCLO_API size_t cyclo_ball_size(const cyclo_ball* ball);
CYCLO_API uint32_t cyclo_ball_radius(const cyclo_ball* ball);
CYCLO_API cyclo_status cyclo_ball_sphere_size(const cyclo_ball* ball, uint32_t i,
                                              uint64_t* out);
/* Counts of the concentric sub-ball B_i, i <= radius. */
CYCLO_API cyclo_status cyclo_ball_counts(const cyclo_ball* ball, uint32_t i, cyclo_counts* out);
/* Thickness of B_i; *infinite is set when the boundary is empty. */
CYCLO_API cyclo_status cyclo_ball_thickness(const cyclo_ball* ball, uint32_t i,
                                            uint32_t* out, int* infinite);
/* Exhaustive sup ξ over subgraphs of B_i; CYCLO_E_TOO_LARGE above `limit`. */
CYCLO_API cyclo_status cyclo_ball_brute_xi(const cyclo_ball* ball, uint32_t i, size_t limit,
                                           cyclo_rational* out);

/* Shortest reduced circuit through generator j within `horizon`. */
CYCLO_API cyclo_status cyclo_girth(const cyclo_marked* marked, size_t j, uint32_t horizon,
                                   uint32_t* out, int* found);
CYCLO_API cyclo_status cyclo_c_value(const cyclo_marked* marked, uint32_t horizon,
                                     uint32_t* out, int* found);

/* ---- lower bounds ---- */

typedef struct cyclo_bounds cyclo_bounds;

typedef struct cyclo_bound_row {
  uint32_t radius;
  uint64_t ball_size;
  cyclo_rational xi;           /* sup ξ over subgraphs of B_r */
  cyclo_rational xi_hat_lower; /* 1 − n + xi */
  uint64_t witness_size;
  uint64_t connected_witness_size;
  uint64_t iterations;
  const char* method;
} cyclo_bound_row;

CYCLO_API cyclo_status cyclo_bounds_compute(const cyclo_marked* marked, uint32_t rmax,
                                            size_t vertex_cap, cyclo_bounds** out);
CYCLO_API void cyclo_bounds_destroy(cyclo_bounds* bounds);
CYCLO_API size_t cyclo_bounds_count(const cyclo_bounds* bounds);
CYCLO_API cyclo_status cyclo_bounds_row(const cyclo_bounds* bounds, size_t i,
                                        cyclo_bound_row* out);

/* ---- balanced sequence ---- */

typedef struct cyclo_balanced cyclo_balanced;

typedef struct cyclo_balanced_row {
  uint32_t i;
  cyclo_counts counts;
  cyclo_rational xi_ball;
  cyclo_rational theta_term;
} cyclo_balanced_row;

CYCLO_API cyclo_status cyclo_balanced_compute(const cyclo_marked* marked, uint32_t rmax,
                                              size_t vertex_cap, cyclo_balanced** out);
CYCLO_API void cyclo_balanced_destroy(cyclo_balanced* balanced);
CYCLO_API size_t cyclo_balanced_count(const cyclo_balanced* balanced);
CYCLO_API cyclo_status cyclo_balanced_row_at(const cyclo_balanced* balanced, size_t i,
                                             cyclo_balanced_row* out);
CYCLO_API cyclo_status cyclo_balanced_estimate(const cyclo_balanced* balanced,
                                               cyclo_rational* out);
/* β₀(B_{i+1})/β₀(B_i) for i < count. */
CYCLO_API cyclo_status cyclo_balanced_growth(const cyclo_balanced* balanced, size_t i,
                                             cyclo_rational* out);

/* ---- closed forms ---- */

typedef struct cyclo_prediction cyclo_prediction;

typedef enum cyclo_quantity { CYCLO_XI_HAT = 0, CYCLO_PSI_HAT = 1 } cyclo_quantity;

/* CYCLO_E_UNSUPPORTED when no closed form applies to the marking. */
CYCLO_API cyclo_status cyclo_predict(const cyclo_marked* marked, cyclo_quantity quantity,
                                     cyclo_prediction** out);
CYCLO_API void cyclo_prediction_destroy(cyclo_prediction* prediction);
CYCLO_API cyclo_status cyclo_prediction_value(const cyclo_prediction* p, cyclo_rational* out);
CYCLO_API cyclo_status cyclo_prediction_unnormalized(const cyclo_prediction* p,
                                                     cyclo_rational* out);
CYCLO_API const char* cyclo_prediction_rule(const cyclo_prediction* p);
CYCLO_API size_t cyclo_prediction_assumption_count(const cyclo_prediction* p);
CYCLO_API const char* cyclo_prediction_assumption(const cyclo_prediction* p, size_t i);

typedef struct cyclo_checks cyclo_checks;

typedef struct cyclo_check {
  const char* name;
  int passed;
  const char* detail;
} cyclo_check;

CYCLO_API cyclo_status cyclo_free_product_checks(const cyclo_group* group, cyclo_checks** out);
CYCLO_API cyclo_status cyclo_direct_product_checks(const cyclo_group* group,
                                                   cyclo_checks** out);
CYCLO_API void cyclo_checks_destroy(cyclo_checks* checks);
CYCLO_API size_t cyclo_checks_count(const cyclo_checks* checks);
CYCLO_API cyclo_status cyclo_checks_get(const cyclo_checks* checks, size_t i, cyclo_check* out);

CYCLO_API cyclo_status cyclo_girth_theta_bound(int64_t n, int64_t m, cyclo_rational* out);
CYCLO_API cyclo_status cyclo_circuit_gain_bound(int64_t n, int64_t c, cyclo_rational xi_of_s,
                                                int64_t beta0_of_s, cyclo_rational* out);
/* Orders use 0 for infinite. */
CYCLO_API cyclo_status cyclo_quotient_bound(cyclo_rational xi_hat_quotient,
                                            uint64_t quotient_order, uint64_t group_order,
                                            cyclo_rational* out);
CYCLO_API cyclo_status cyclo_schreier_upper(cyclo_rational xi_hat_group, int64_t index,
                                            cyclo_rational* out);

/* ---- Schreier bases ---- */

typedef struct cyclo_schreier cyclo_schreier;

/* Kernel of the map from the free group `source` (default marking) onto the
 * finite `target`, sending generator j to images[j], a word in the target's
 * default symbols. radius > 0 also bounds Ξ̂ on the kernel's Cayley balls. */
CYCLO_API cyclo_status cyclo_schreier_verify(const cyclo_group* source, const cyclo_group* target,
                                             const cyclo_word* images, size_t image_count,
                                             uint32_t radius, cyclo_schreier** out);
CYCLO_API void cyclo_schreier_destroy(cyclo_schreier* s);
CYCLO_API uint64_t cyclo_schreier_index(const cyclo_schreier* s);
CYCLO_API size_t cyclo_schreier_basis_size(const cyclo_schreier* s);
CYCLO_API size_t cyclo_schreier_expected_basis_size(const cyclo_schreier* s);
/* Freely reduced basis element / transversal word, e.g. "g0^2 g1^-1". */
CYCLO_API const char* cyclo_schreier_basis(const cyclo_schreier* s, size_t i);
CYCLO_API const char* cyclo_schreier_transversal(const cyclo_schreier* s, size_t coset);
CYCLO_API cyclo_status cyclo_schreier_sides(const cyclo_schreier* s, cyclo_rational* lhs,
                                            cyclo_rational* rhs, int* equal);
CYCLO_API size_t cyclo_schreier_kernel_row_count(const cyclo_schreier* s);
CYCLO_API cyclo_status cyclo_schreier_kernel_row(const cyclo_schreier* s, size_t i,
                                                 cyclo_bound_row* out);
CYCLO_API const cyclo_checks* cyclo_schreier_checks(const cyclo_schreier* s);

#ifdef __cplusplus
}
#endif

#endif
