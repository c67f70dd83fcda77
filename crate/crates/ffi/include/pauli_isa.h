#ifndef PAULI_ISA_H
#define PAULI_ISA_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result codes. Zero is success.
 */
typedef enum PauliIsaStatus {
  PAULI_ISA_STATUS_OK = 0,
  PAULI_ISA_STATUS_NULL_POINTER = 1,
  PAULI_ISA_STATUS_INVALID_UTF8 = 2,
  PAULI_ISA_STATUS_PARSE = 3,
  PAULI_ISA_STATUS_INVALID_SPEC = 4,
  PAULI_ISA_STATUS_NOT_INVERTIBLE = 5,
  PAULI_ISA_STATUS_UNSUPPORTED = 6,
  PAULI_ISA_STATUS_USAGE = 7,
  PAULI_ISA_STATUS_INTERNAL = 8,
} PauliIsaStatus;

/**
 * Opaque translation-invariant Clifford QCA.
 */
typedef struct PauliIsaQca PauliIsaQca;

/**
 * Opaque translation-invariant Pauli subalgebra.
 */
typedef struct PauliIsaSpec PauliIsaSpec;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failed call on this thread, or null. Valid until the
 * next call into this library on the same thread.
 */
const char *pauli_isa_last_error(void);

/**
 * Library version as a static string.
 */
const char *pauli_isa_version(void);

/**
 * # Safety
 * `s` must be null or a string returned by this library.
 */
void pauli_isa_string_free(char *s);

/**
 * # Safety
 * `json` must be a NUL-terminated string and `out` a valid pointer.
 */
enum PauliIsaStatus pauli_isa_spec_from_json(const char *json, struct PauliIsaSpec **out);

/**
 * # Safety
 * `name` must be a NUL-terminated string and `out` a valid pointer.
 */
enum PauliIsaStatus pauli_isa_spec_builtin(const char *name, struct PauliIsaSpec **out);

/**
 * # Safety
 * `spec` must be null or a handle from this library not yet freed.
 */
void pauli_isa_spec_free(struct PauliIsaSpec *spec);

/**
 * # Safety
 * `spec` must be a live handle and `out` a valid pointer.
 */
enum PauliIsaStatus pauli_isa_spec_to_json(const struct PauliIsaSpec *spec, char **out);

/**
 * # Safety
 * `spec` must be a live handle and `out` a valid pointer.
 */
enum PauliIsaStatus pauli_isa_spec_spread(const struct PauliIsaSpec *spec, uint32_t *out);

/**
 * Decides invertibility. `certificate` may be null; otherwise it receives
 * the certificate as JSON.
 *
 * # Safety
 * `spec` must be a live handle and `invertible` a valid pointer.
 */
enum PauliIsaStatus pauli_isa_check_invertible(const struct PauliIsaSpec *spec,
                                               bool *invertible,
                                               char **certificate);

/**
 * Decomposition projector as a JSON matrix of polynomial strings.
 *
 * # Safety
 * `spec` must be a live handle and `out` a valid pointer.
 */
enum PauliIsaStatus pauli_isa_projector(const struct PauliIsaSpec *spec, char **out);

/**
 * # Safety
 * `spec` must be a live handle and `out` a valid pointer.
 */
enum PauliIsaStatus pauli_isa_commutant(const struct PauliIsaSpec *spec, struct PauliIsaSpec **out);

/**
 * Whether two specs generate the same module.
 *
 * # Safety
 * Both handles must be live and `out` a valid pointer.
 */
enum PauliIsaStatus pauli_isa_same_span(const struct PauliIsaSpec *a,
                                        const struct PauliIsaSpec *b,
                                        bool *out);

/**
 * # Safety
 * `spec` must be a live handle and `out` a valid pointer.
 */
enum PauliIsaStatus pauli_isa_lift(const struct PauliIsaSpec *spec, struct PauliIsaQca **out);

/**
 * # Safety
 * `u` must be null or a handle from this library not yet freed.
 */
void pauli_isa_qca_free(struct PauliIsaQca *u);

/**
 * # Safety
 * `u` must be a live handle and `out` a valid pointer.
 */
enum PauliIsaStatus pauli_isa_qca_to_json(const struct PauliIsaQca *u, char **out);

/**
 * # Safety
 * `u` must be a live handle and `out` a valid pointer.
 */
enum PauliIsaStatus pauli_isa_qca_is_symplectic(const struct PauliIsaQca *u, bool *out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* PAULI_ISA_H */
