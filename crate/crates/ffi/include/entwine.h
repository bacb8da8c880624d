#ifndef ENTWINE_H
#define ENTWINE_H

#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>

// Outcome of a call.
typedef enum EntwineStatus {
  // The call succeeded and the property holds.
  ENTWINE_STATUS_OK = 0,
  // The call succeeded and the property fails or the system is infeasible.
  ENTWINE_STATUS_FAILS = 1,
  ENTWINE_STATUS_INVALID_INPUT = 2,
  ENTWINE_STATUS_NULL_POINTER = 3,
  ENTWINE_STATUS_INTERNAL = 4,
  ENTWINE_STATUS_PANIC = 5,
} EntwineStatus;

// Parsed structure file.
typedef struct EntwineDocument EntwineDocument;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Parses a structure file. On success `*out` owns a handle to release with
// [`entwine_document_free`].
//
// # Safety
// `json` is a nul-terminated string; `out` is valid for writes.
enum EntwineStatus entwine_document_parse(const char *json, struct EntwineDocument **out);

// # Safety
// `doc` is null or a handle from [`entwine_document_parse`] not yet freed.
void entwine_document_free(struct EntwineDocument *doc);

// Verifies every structure in the document; `Ok` iff all checks pass.
//
// # Safety
// `doc` is a live handle; `report` is null or valid for writes.
enum EntwineStatus entwine_check(const struct EntwineDocument *doc, char **report);

// Solves for a witness; `kind` is one of `integral`, `cointegral`,
// `integral-map`, `cointegral-map`, `lambda`, `frakz`. `Ok` iff feasible.
//
// # Safety
// `doc` is a live handle; `kind` is a nul-terminated string; `report` is
// null or valid for writes.
enum EntwineStatus entwine_solve(const struct EntwineDocument *doc,
                                 const char *kind,
                                 bool normalized,
                                 char **report);

// Full report on the extension given by `coactionA`; `Ok` iff separable.
//
// # Safety
// `doc` is a live handle; `report` is null or valid for writes.
enum EntwineStatus entwine_extension_report(const struct EntwineDocument *doc, char **report);

// Report on the coextension given by `actionC`; `Ok` iff coseparable.
//
// # Safety
// `doc` is a live handle; `report` is null or valid for writes.
enum EntwineStatus entwine_coextension_report(const struct EntwineDocument *doc, char **report);

// `dim H^n(A, B, M)` with `B` and `M` taken from the document as the CLI
// does. `report`, when non-null, receives the full JSON report.
//
// # Safety
// `doc` is a live handle; `dim` is valid for writes; `report` is null or
// valid for writes.
enum EntwineStatus entwine_hochschild(const struct EntwineDocument *doc,
                                      uint32_t n,
                                      size_t *dim,
                                      char **report);

// `dim H^1` of the regular bimodule relative to the coinvariants, or to
// the scalars when the document has no `coactionA`.
//
// # Safety
// `doc` is a live handle; `dim` is valid for writes.
enum EntwineStatus entwine_h1_regular(const struct EntwineDocument *doc, size_t *dim);

// Re-verifies a certificate file against the document; `Ok` iff it holds.
//
// # Safety
// `doc` is a live handle; `certificate` is a nul-terminated string;
// `report` is null or valid for writes.
enum EntwineStatus entwine_verify_certificate(const struct EntwineDocument *doc,
                                              const char *certificate,
                                              char **report);

// Writes the named catalog example as an `entwine/1` document. `field` is
// `Q` or `F<p>`; `d` and `m` are ignored when zero.
//
// # Safety
// `name` and `field` are nul-terminated strings; `out` is valid for writes.
enum EntwineStatus entwine_catalog(const char *name,
                                   const char *field,
                                   uint32_t n,
                                   uint32_t d,
                                   uint32_t m,
                                   char **out);

// Releases a string returned through an out-parameter.
//
// # Safety
// `s` is null or a string from this library not yet freed.
void entwine_string_free(char *s);

// Message of the last failed call on this thread; empty after a success.
// Valid until the next call on the same thread.
const char *entwine_last_error(void);

// Library version as a static string.
const char *entwine_version(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* ENTWINE_H */
