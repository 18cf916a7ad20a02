/* eulercert — exact mod-2 obstruction certificates for equivariant maps.
 *
 * C interface to the eulercert core. All objects are opaque handles created
 * and destroyed through this API; every fallible call returns an ec_status
 * and leaves a diagnostic retrievable with ec_last_error() on failure.
 * Strings returned through char** out-parameters are owned by the caller and
 * released with ec_string_free().
 *
 * Polynomials use the canonical text form: terms in decreasing order joined
 * by '+', each term a '*'-joined list of factors x<i> or x<i>^<e>, with "1"
 * for the empty monomial and "0" for the zero polynomial.
 */

#ifndef EULERCERT_H
#define EULERCERT_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define EC_API __declspec(dllexport)
#else
#define EC_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ec_status {
    EC_OK = 0,
    EC_ERR_INVALID_ARGUMENT = 1, /* precondition violated (rank/arity/range) */
    EC_ERR_PARSE = 2,            /* malformed text input */
    EC_ERR_BUDGET_EXCEEDED = 3,  /* a degree slice exceeds the bit budget */
    EC_ERR_ENGINE_MISMATCH = 4,  /* the two normal-form engines disagreed */
    EC_ERR_INTERNAL = 5
} ec_status;

typedef enum ec_engine {
    EC_ENGINE_GROEBNER = 0,
    EC_ENGINE_ORACLE = 1,
    EC_ENGINE_BOTH = 2
} ec_engine;

typedef struct ec_poly ec_poly;
typedef struct ec_presentation ec_presentation;
typedef struct ec_repspec ec_repspec;
typedef struct ec_verdict ec_verdict;

EC_API const char* ec_version(void);

/* Diagnostic for the most recent failing call on this thread. */
EC_API const char* ec_last_error(void);

EC_API void ec_string_free(char* s);

/* Memory budget, in bits, for one degree slice of the linear-algebra engine.
 * Applies to presentations created after the call; 0 restores the default
 * of 2^30. */
EC_API void ec_set_slice_budget_bits(uint64_t bits);
EC_API uint64_t ec_slice_budget_bits(void);

/* ---- polynomials over the two-element field ---- */

EC_API ec_status ec_poly_parse(const char* text, uint32_t num_vars, ec_poly** out);
EC_API ec_status ec_poly_format(const ec_poly* p, char** out);
EC_API uint32_t ec_poly_num_vars(const ec_poly* p);
EC_API int ec_poly_is_zero(const ec_poly* p);
EC_API int32_t ec_poly_degree(const ec_poly* p); /* -1 for the zero polynomial */
EC_API int ec_poly_equal(const ec_poly* a, const ec_poly* b);
EC_API void ec_poly_free(ec_poly* p);

/* ---- graded quotient-ring presentations ---- */

/* From homogeneous relation polynomials in canonical text form. */
EC_API ec_status ec_presentation_create(uint32_t num_vars, const char* const* relations,
                                        size_t count, ec_presentation** out);

/* Cohomology of the sign-change quotient of n-frames with ell line factors:
 * ell variables modulo the complete symmetric polynomials of degrees
 * n-ell+1..n. Requires 1 <= ell < n. */
EC_API ec_status ec_presentation_flag(uint32_t n, uint32_t ell, ec_presentation** out);

/* Cohomology of the full orbit space (projective n-space times the flag
 * quotient): ell+1 variables with x0 the sphere class. */
EC_API ec_status ec_presentation_base(uint32_t n, uint32_t ell, ec_presentation** out);

EC_API uint32_t ec_presentation_num_vars(const ec_presentation* pr);
EC_API size_t ec_presentation_relation_count(const ec_presentation* pr);
EC_API ec_status ec_presentation_relation(const ec_presentation* pr, size_t index, char** out);
EC_API size_t ec_presentation_groebner_count(const ec_presentation* pr);
EC_API ec_status ec_presentation_groebner(const ec_presentation* pr, size_t index, char** out);

/* Unique reduced representative of p modulo the relation ideal. */
EC_API ec_status ec_normal_form(const ec_presentation* pr, const ec_poly* p, ec_poly** out);

/* Independent membership test by per-degree linear algebra over packed bit
 * rows; p must be homogeneous. *out is 1 when p lies in the ideal. */
EC_API ec_status ec_ideal_membership(const ec_presentation* pr, const ec_poly* p, int* out);

/* Per-degree quotient dimensions for degrees 0..cap; dims must have room
 * for cap+1 entries. */
EC_API ec_status ec_hilbert_function(const ec_presentation* pr, uint32_t cap, uint32_t* dims);

EC_API void ec_presentation_free(ec_presentation* pr);

/* ---- flag-quotient facts ---- */

EC_API int32_t ec_flag_manifold_dim(uint32_t n, uint32_t ell); /* -1 on invalid input */
EC_API ec_status ec_flag_top_class(uint32_t n, uint32_t ell, char** out);

/* ---- representations of (C2)^rank ---- */

/* One `<bitstring> <multiplicity>` line per summand; '#' starts a comment.
 * Bit j of the string corresponds to variable x_j. */
EC_API ec_status ec_repspec_parse(const char* text, ec_repspec** out);
EC_API ec_status ec_repspec_format(const ec_repspec* rep, char** out);

/* The test representation for (n, ell); rank ell+1, dimension
 * n + (n-1) + ... + (n-ell). */
EC_API ec_status ec_repspec_test_representation(uint32_t n, uint32_t ell, ec_repspec** out);

EC_API uint32_t ec_repspec_rank(const ec_repspec* rep);
EC_API uint32_t ec_repspec_dimension(const ec_repspec* rep);
EC_API int ec_repspec_has_trivial_summand(const ec_repspec* rep);
EC_API void ec_repspec_free(ec_repspec* rep);

/* ---- obstruction verdicts ---- */

/* Reduced Euler class of rep in the base ring. Fails with
 * EC_ERR_INVALID_ARGUMENT when rep has a trivial summand (the class is zero
 * by convention; use ec_evaluate for the full verdict). */
EC_API ec_status ec_euler_class_image(const ec_repspec* rep, const ec_presentation* base,
                                      ec_poly** out);

EC_API ec_status ec_evaluate(const ec_repspec* rep, const ec_presentation* base,
                             ec_engine engine, ec_verdict** out);

/* Verdict for the (n, ell) instance: nonzero certifies that no equivariant
 * map from the configuration space to the representation sphere exists. */
EC_API ec_status ec_certify(uint32_t n, uint32_t ell, ec_engine engine, ec_verdict** out);

EC_API int ec_verdict_nonzero(const ec_verdict* v);
EC_API int ec_verdict_trivial_shortcut(const ec_verdict* v);
EC_API uint32_t ec_verdict_certificate_degree(const ec_verdict* v);
EC_API ec_status ec_verdict_certificate(const ec_verdict* v, char** out);
EC_API size_t ec_verdict_relation_count(const ec_verdict* v);
EC_API ec_status ec_verdict_relation(const ec_verdict* v, size_t index, char** out);
EC_API void ec_verdict_free(ec_verdict* v);

/* ---- consistency suites at desk scale ---- */

/* *ok is 1 when every suite passes; *report receives the full log. */
EC_API ec_status ec_selftest(int* ok, char** report);

#ifdef __cplusplus
}
#endif

#endif /* EULERCERT_H */
