#ifndef CUBIC_BUNDLES_H
#define CUBIC_BUNDLES_H

/* Generated by cbindgen from src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum {
  CB_FORMAT_TEXT = 0,
  CB_FORMAT_STRUCTURED = 1,
} CbFormat;

/*
 Result of every fallible call.
 */
typedef enum {
  CB_STATUS_OK = 0,
  CB_STATUS_NULL_POINTER = 1,
  CB_STATUS_INVALID_UTF8 = 2,
  CB_STATUS_PARSE = 3,
  CB_STATUS_VALIDATION = 4,
  CB_STATUS_ARITHMETIC = 5,
  CB_STATUS_HYPOTHESIS = 6,
  CB_STATUS_IO = 7,
  CB_STATUS_INTERNAL = 8,
} CbStatus;

/*
 A bundle of singular plane cubics.
 */
typedef struct CbDescriptor CbDescriptor;

/*
 Fibers, constants and divisors of a construction.
 */
typedef struct CbInput CbInput;

/*
 The report of a scenario run.
 */
typedef struct CbReport CbReport;

/*
 A parsed scenario file.
 */
typedef struct CbScenario CbScenario;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/*
 The message of the last failed call on this thread, or null. Valid until
 the next failing call on the same thread.
 */
const char *cb_last_error(void);

/*
 A static description of a status code.
 */
const char *cb_status_message(CbStatus status);

/*
 # Safety
 `s` must be null or a string returned by this library.
 */
void cb_string_free(char *s);

/*
 Parses and validates a scenario given as JSON text.

 # Safety
 `json` must be a nul-terminated string and `out` a valid pointer.
 */
CbStatus cb_scenario_parse(const char *json, CbScenario **out);

/*
 # Safety
 `s` must be null or a handle from [`cb_scenario_parse`].
 */
void cb_scenario_free(CbScenario *s);

/*
 Executes every request of the scenario. Per-request failures are part of
 the report; see [`cb_report_exit_code`].

 # Safety
 `s` must be a live scenario handle and `out` a valid pointer.
 */
CbStatus cb_scenario_run(const CbScenario *s, CbReport **out);

/*
 `0` when every request succeeded without findings, `2` otherwise.

 # Safety
 `r` must be null or a live report handle.
 */
int32_t cb_report_exit_code(const CbReport *r);

/*
 # Safety
 `r` must be a live report handle and `out` a valid pointer.
 */
CbStatus cb_report_render(const CbReport *r, CbFormat format, char **out);

/*
 # Safety
 `r` must be null or a handle from [`cb_scenario_run`].
 */
void cb_report_free(CbReport *r);

/*
 Parses and validates a construction input given as JSON text.

 # Safety
 `json` must be a nul-terminated string and `out` a valid pointer.
 */
CbStatus cb_input_parse(const char *json, CbInput **out);

/*
 # Safety
 `i` must be null or an input handle.
 */
void cb_input_free(CbInput *i);

/*
 # Safety
 `i` must be a live input handle and `out` a valid pointer.
 */
CbStatus cb_input_to_json(const CbInput *i, char **out);

/*
 # Safety
 `i` must be a live input handle and `projective` a valid pointer.
 */
CbStatus cb_decide_projective(const CbInput *i, bool *projective);

/*
 # Safety
 `i` must be a live input handle and `out` a valid pointer.
 */
CbStatus cb_construct(const CbInput *i, CbDescriptor **out);

/*
 Reads the construction data back from a descriptor.

 # Safety
 `d` must be a live descriptor handle and `out` a valid pointer.
 */
CbStatus cb_recover(const CbDescriptor *d, CbInput **out);

/*
 # Safety
 `d` must be a live descriptor handle and `out` a valid pointer.
 */
CbStatus cb_descriptor_to_json(const CbDescriptor *d, char **out);

/*
 # Safety
 `d` must be null or a descriptor handle.
 */
void cb_descriptor_free(CbDescriptor *d);

/*
 Whether `f^k` reduces into the subring for the osculating section with
 parameter `xi` at a cusp of multiplicity `m`.

 # Safety
 `xi` must be a nul-terminated scalar and `member` a valid pointer.
 */
CbStatus cb_cartier_member(const char *xi, uint32_t k, uint32_t m, bool *member);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* CUBIC_BUNDLES_H */
