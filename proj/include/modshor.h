/* modshor — windowed period-finding factorizer.
 *
 * C interface to the shared library. A factoring run is configured by a JSON
 * object (the same format the CLI accepts via --config):
 *
 *   {
 *     "n": 15,                 // composite, odd, not a prime power
 *     "base": 2,               // optional; sampled from the seed when absent
 *     "blocks": [3, 4, 4, 5],  // counting qubits per phase-estimation block
 *     "overlaps": [0, 2, 3, 2],// shared bits with the left neighbour
 *     "shots": 0,              // 0 = exact mode (deterministic ranking)
 *     "top_k": 2,              // candidates kept per block
 *     "max_combos": 2,         // stitched sequences kept while integrating
 *     "seed": 7,               // master seed for all random streams
 *     "backend": "analytic",   // or "statevector"
 *     "retries": 1,            // fresh-base re-runs when no factor is found
 *     "jobs": 0                // worker threads; 0 = one per block
 *   }
 *
 * All functions are thread-safe as long as each ms_run handle is used from
 * one thread at a time.
 */

#ifndef MODSHOR_H
#define MODSHOR_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

/* Status codes; they double as the CLI exit codes. */
enum {
  MS_OK = 0,            /* factor found */
  MS_ERR_CONFIG = 1,    /* invalid configuration, see ms_run_error */
  MS_ERR_NO_FACTOR = 2  /* pipeline completed without a nontrivial factor */
};

/* Opaque handle owning the outcome of one factoring run. */
typedef struct ms_run ms_run;

/* Runs the pipeline described by config_json. Returns NULL only when the
 * handle itself cannot be allocated; every other failure is reported through
 * the handle's status. The caller frees the handle with ms_run_free. */
ms_run* ms_run_from_json(const char* config_json);

void ms_run_free(ms_run* run);

/* MS_OK, MS_ERR_CONFIG or MS_ERR_NO_FACTOR. */
int ms_run_status(const ms_run* run);

/* Single-line diagnostic naming the offending field; NULL unless the status
 * is MS_ERR_CONFIG. Owned by the handle. */
const char* ms_run_error(const ms_run* run);

/* Canonical JSON report (stable key order, exact rational phases). NULL on
 * configuration errors. Owned by the handle. */
const char* ms_run_report_json(const ms_run* run);

/* Human-readable summary including stage timings. NULL on config errors. */
const char* ms_run_summary(const ms_run* run);

/* 0 and writes the value when present, nonzero otherwise. */
int ms_run_factor(const ms_run* run, uint64_t* factor_out);
int ms_run_period(const ms_run* run, uint64_t* period_out);

/* Layout of the per-block histograms: attempts and blocks are 1-based. */
size_t ms_run_attempt_count(const ms_run* run);
size_t ms_run_block_count(const ms_run* run, size_t attempt);

/* Two-column CSV (bitstring, probability-or-count) for one block of one
 * attempt; NULL when out of range. Owned by the handle. */
const char* ms_run_histogram_csv(const ms_run* run, size_t attempt,
                                 size_t block);

const char* ms_version(void);

#ifdef __cplusplus
}
#endif

#endif /* MODSHOR_H */
