/* Generated by cbindgen from crates/ffi. Do not edit. */

#ifndef SPECHT_H
#define SPECHT_H

#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>

/*
 Outcome of a call. The first four values match the command-line exit
 codes.
 */
typedef enum SpechtStatus {
  SPECHT_STATUS_OK = 0,
  SPECHT_STATUS_VERIFICATION_FAILED = 1,
  SPECHT_STATUS_PARSE_ERROR = 2,
  SPECHT_STATUS_PRECONDITION = 3,
  SPECHT_STATUS_NULL_POINTER = 4,
  SPECHT_STATUS_INVALID_UTF8 = 5,
  SPECHT_STATUS_INTERNAL = 6,
} SpechtStatus;

/*
 Opaque certificate handle.
 */
typedef struct SpechtCertificate SpechtCertificate;

/*
 Opaque polynomial handle.
 */
typedef struct SpechtPolynomial SpechtPolynomial;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/*
 Message describing the last failure on this thread; empty after a
 success. Owned by the library and valid until the next call.
 */
const char *specht_last_error_message(void);

/*
 Releases a string returned by this library. Null is ignored.
 */
void specht_string_free(char *s);

/*
 Whether `lhs` dominates `rhs` (both like `"3,1"`).
 */
enum SpechtStatus specht_dominates(const char *lhs, const char *rhs, bool *result);

/*
 The conjugate partition, as a newly allocated string.
 */
enum SpechtStatus specht_conjugate(const char *partition, char **result);

/*
 `μ(m)` for a monomial in `n` variables, as a newly allocated string.
 */
enum SpechtStatus specht_mu(uintptr_t n, const char *monomial, char **result);

/*
 Whether the integer point `point[0..len]` lies in the Specht variety of
 `shape`, decided from its orbit type.
 */
enum SpechtStatus specht_point_in_variety(const char *shape,
                                          const int64_t *point,
                                          uintptr_t len,
                                          bool *result);

/*
 Parses a polynomial like `"x1^2*x2 - 3/2"` over `field` in `nvars`
 variables.
 */
enum SpechtStatus specht_polynomial_parse(const char *source,
                                          const char *field_name,
                                          uintptr_t nvars,
                                          struct SpechtPolynomial **result);

/*
 Canonical text form of a polynomial, newly allocated.
 */
enum SpechtStatus specht_polynomial_to_string(const struct SpechtPolynomial *polynomial,
                                              char **result);

void specht_polynomial_free(struct SpechtPolynomial *polynomial);

/*
 Certificate that the Specht polynomial with the given columns (like
 `"1,3|2|4"`) lies in the Specht ideal of the dominating shape `upper`.
 */
enum SpechtStatus specht_certificate_dominance(const char *columns,
                                               const char *upper,
                                               const char *field_name,
                                               uintptr_t n,
                                               struct SpechtCertificate **result);

/*
 Certificate that the symmetric ideal generated by `polynomial` contains a
 Specht polynomial of shape `μ(m)^⊥`. `monomial` may be null to use the
 leading monomial. `general` selects the construction valid in every
 characteristic instead of the factorial-normalized one.
 */
enum SpechtStatus specht_certificate_symmetric(const struct SpechtPolynomial *polynomial,
                                               const char *monomial,
                                               bool general,
                                               struct SpechtCertificate **result);

enum SpechtStatus specht_certificate_from_json(const char *json, struct SpechtCertificate **result);

enum SpechtStatus specht_certificate_to_json(const struct SpechtCertificate *certificate,
                                             char **result);

/*
 `SPECHT_STATUS_OK` if the certificate expands to its target,
 `SPECHT_STATUS_VERIFICATION_FAILED` if it does not.
 */
enum SpechtStatus specht_certificate_verify(const struct SpechtCertificate *certificate);

/*
 Number of entries in the certificate.
 */
enum SpechtStatus specht_certificate_len(const struct SpechtCertificate *certificate,
                                         uintptr_t *result);

void specht_certificate_free(struct SpechtCertificate *certificate);

/*
 Solves a system given as JSON (`{"n", "field", "generators"}`) and
 returns the solution report as JSON. With `verify`, a disagreement with
 brute force yields `SPECHT_STATUS_VERIFICATION_FAILED` (the report is
 still returned).
 */
enum SpechtStatus specht_solve_json(const char *system_json,
                                    bool verify,
                                    uint64_t budget,
                                    char **result);

/*
 Isotypic pruning report for a monomial in `n` variables, as JSON.
 */
enum SpechtStatus specht_isotypic_json(uintptr_t n, const char *monomial, char **result);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* SPECHT_H */
