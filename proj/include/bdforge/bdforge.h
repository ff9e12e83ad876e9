#ifndef BDFORGE_H
#define BDFORGE_H

/* C interface of the bdforge library. All structured data crosses the
 * boundary as JSON text. Strings returned through out parameters are owned
 * by the caller and released with bdf_free_string. */

#ifdef __cplusplus
extern "C" {
#endif

#if defined(BDFORGE_BUILDING)
#define BDF_API __attribute__((visibility("default")))
#else
#define BDF_API
#endif

typedef enum bdf_status {
  BDF_OK = 0,
  BDF_VERIFICATION_FAILED = 1,
  BDF_INVALID_ARGUMENT = 2,
  BDF_UNSUPPORTED_TYPE = 3,
  BDF_PARSE_ERROR = 4,
  BDF_INTERNAL_ERROR = 5
} bdf_status;

typedef struct bdf_algebra bdf_algebra;

BDF_API const char* bdf_status_name(bdf_status status);

/* Message of the last failing call on this thread; "" after success. */
BDF_API const char* bdf_last_error_message(void);

BDF_API void bdf_free_string(char* s);

/* type is one of "A", "B", "C", "D", "G". */
BDF_API bdf_status bdf_algebra_create(const char* type, int rank, bdf_algebra** out);
BDF_API void bdf_algebra_destroy(bdf_algebra* algebra);
BDF_API int bdf_algebra_dimension(const bdf_algebra* algebra);

/* {"type", "rank", "dimension", "cartan_matrix", "basis": [{"index", "label", "weight"}]} */
BDF_API bdf_status bdf_basis_json(const bdf_algebra* algebra, char** out_json);

/* {"omega": tensor, "omega_h": tensor} */
BDF_API bdf_status bdf_casimir_json(const bdf_algebra* algebra, char** out_json);

/* {"count": n, "triples": [triple, ...]} */
BDF_API bdf_status bdf_enumerate_triples(const bdf_algebra* algebra, char** out_json);

/* Builds r_BD for a triple. rh_json may be NULL for the canonical Cartan part.
 * {"r", "lambda", "cyb_zero", "r_h"} */
BDF_API bdf_status bdf_bd_build(const bdf_algebra* algebra, const char* triple_json, const char* rh_json,
                                char** out_json);

/* {"is_rmatrix", "rejection", "lambda"}; BDF_VERIFICATION_FAILED when r is
 * not an r-matrix. Coefficients may lie in Q(sqrt d). */
BDF_API bdf_status bdf_verify_rmatrix(const bdf_algebra* algebra, const char* r_json, char** out_json);

/* Axioms of the coboundary cobracket of r:
 * {"antisymmetric", "cojacobi", "cocycle"} plus witnesses on failure. */
BDF_API bdf_status bdf_verify_bialgebra(const bdf_algebra* algebra, const char* r_json, char** out_json);

/* {"pi": {"1": "2", ...}} or {"pi": null}. */
BDF_API bdf_status bdf_find_pi(const bdf_algebra* algebra, const char* triple_json, const char* rh_json,
                               char** out_json);

/* Galois cocycle u = chi pi^ over Q(sqrt d). pi_json may be NULL to use
 * find_pi; BDF_VERIFICATION_FAILED when no pi exists.
 * {"d", "pi", "u", "cocycle_condition"} */
BDF_API bdf_status bdf_twist_cocycle(const bdf_algebra* algebra, const char* triple_json, const char* rh_json, long d,
                                     const char* pi_json, char** out_json);

/* Descent of sqrt(d) times the standard cobracket to su_n(Q, d), 2 <= n <= 4.
 * {"n", "d", "basis", "structure", "cobracket", "axioms", "case_sqrt_d", "case_one", "roundtrip"} */
BDF_API bdf_status bdf_descend_sun(int n, long d, char** out_json);

/* Every check for one type and rank; threads <= 0 uses the hardware
 * concurrency. BDFORGE_THREADS caps the worker count. */
BDF_API bdf_status bdf_full_suite(const char* type, int rank, long d, int threads, char** out_json);

#ifdef __cplusplus
}
#endif

#endif
