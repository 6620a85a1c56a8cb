/* C interface for the rank vertex cover compression library. */

#pragma once

/* Generated by cbindgen from the rvc-ffi crate; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result codes. The nonzero values up to 4 match the `rvc` CLI exit codes.
 */
typedef enum RvcStatus {
  RVC_OK = 0,
  /**
   * Malformed input, bad options, or any other hard failure; see
   * `rvc_last_error`.
   */
  RVC_ERR_INPUT = 1,
  /**
   * Compression fell back to a constant instance instead of reducing.
   */
  RVC_ERR_FALLBACK = 2,
  /**
   * A brute-force check was requested on an instance above the oracle
   * size limit.
   */
  RVC_ERR_ORACLE_LIMIT = 3,
  /**
   * Verification ran and the two instances disagree.
   */
  RVC_ERR_NOT_EQUIVALENT = 4,
  RVC_ERR_NULL_POINTER = 5,
  RVC_ERR_UTF8 = 6,
  RVC_ERR_PANIC = 7,
} RvcStatus;

/**
 * Opaque handle to a rank vertex cover instance.
 */
typedef struct RvcInstance RvcInstance;

/**
 * Options for `rvc_compress`. Obtain defaults from
 * `rvc_compress_options_default` and override fields as needed.
 */
typedef struct RvcCompressOptions {
  /**
   * Slack above the maximum matching size; the cover budget is mu + k.
   */
  uint64_t k;
  /**
   * Seed for the deterministic random stream.
   */
  uint64_t seed;
  /**
   * Nonzero selects faithful (rational-coefficient) mode; zero the fast
   * single-prime mode.
   */
  int faithful;
  /**
   * Nonzero re-checks input/output equivalence with the brute-force
   * oracle; failures surface as RVC_ERR_NOT_EQUIVALENT.
   */
  int verify;
  /**
   * Nonzero disables the small-instance decision shortcut.
   */
  int no_shortcut;
  /**
   * Error budget as a fraction string such as "1/20"; NULL keeps the
   * default of 1/20.
   */
  const char *epsilon;
} RvcCompressOptions;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Default compression options: k = 0, seed = 0, fast mode, no verification,
 * shortcut enabled, epsilon 1/20.
 */
struct RvcCompressOptions rvc_compress_options_default(void);

/**
 * Compress a graph in DIMACS edge format into a rank vertex cover
 * instance. On success `*out` holds the new instance and, when
 * `report_out` is non-NULL, `*report_out` holds the textual run report.
 * Both are also written for the degraded statuses RVC_ERR_FALLBACK and
 * RVC_ERR_NOT_EQUIVALENT.
 *
 * # Safety
 * `dimacs` and `options.epsilon` (when non-NULL) must point to NUL
 * terminated strings; `out` and `report_out` must be valid to write.
 */
enum RvcStatus rvc_compress(const char *dimacs,
                            const struct RvcCompressOptions *options,
                            struct RvcInstance **out,
                            char **report_out);

/**
 * Parse an instance from its RVC1 text serialization.
 *
 * # Safety
 * `text` must be NUL terminated; `out` must be valid to write.
 */
enum RvcStatus rvc_instance_from_text(const char *text, struct RvcInstance **out);

/**
 * Serialize an instance to RVC1 text; round-trips byte for byte through
 * `rvc_instance_from_text`.
 *
 * # Safety
 * `inst` must be a live handle; `out` must be valid to write.
 */
enum RvcStatus rvc_instance_to_text(const struct RvcInstance *inst, char **out);

/**
 * Key=value statistics block for an instance, same layout as `rvc stats`.
 *
 * # Safety
 * `inst` must be a live handle; `out` must be valid to write.
 */
enum RvcStatus rvc_instance_stats(const struct RvcInstance *inst, char **out);

/**
 * Decide the instance by brute force. Writes 1 for YES, 0 for NO. Only
 * instances with at most 16 elements are decidable; larger ones report
 * RVC_ERR_ORACLE_LIMIT.
 *
 * # Safety
 * `inst` must be a live handle; `out_yes` must be valid to write.
 */
enum RvcStatus rvc_instance_decide(const struct RvcInstance *inst, int *out_yes);

/**
 * Check two instances for equivalence by brute force, writing 1 when both
 * decide the same way and 0 otherwise. Subject to the same size limit as
 * `rvc_instance_decide`.
 *
 * # Safety
 * `a` and `b` must be live handles; `out_equivalent` must be valid to
 * write.
 */
enum RvcStatus rvc_verify(const struct RvcInstance *a,
                          const struct RvcInstance *b,
                          int *out_equivalent);

/**
 * Release an instance handle. NULL is a no-op.
 *
 * # Safety
 * `inst` must come from this library and not have been freed already.
 */
void rvc_instance_free(struct RvcInstance *inst);

/**
 * Release a string returned by this library. NULL is a no-op.
 *
 * # Safety
 * `s` must come from this library and not have been freed already.
 */
void rvc_string_free(char *s);

/**
 * Message for the most recent failure on the calling thread, empty if none.
 * The pointer stays valid until the next library call on this thread.
 */
const char *rvc_last_error(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus
