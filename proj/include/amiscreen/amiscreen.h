/* SPDX-License-Identifier: Apache-2.0
 *
 * amiscreen — adverse-media screening engine.
 *
 * C interface over the screening core: opaque engine handles, status codes
 * mirroring the CLI exit-code contract, and JSON strings for structured data.
 * Every char* returned through an out-parameter is heap-allocated and must be
 * released with ami_string_free().
 */
#ifndef AMISCREEN_H
#define AMISCREEN_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct ami_engine ami_engine;

typedef enum ami_status {
    AMI_OK = 0,
    AMI_ERROR = 1,        /* transport/config/internal failure; see ami_last_error */
    AMI_NO_EVIDENCE = 2,  /* screening completed but produced no usable evidence */
    AMI_USAGE = 64        /* invalid arguments */
} ami_status;

const char* ami_version(void);

/* config_json: {"base": {...config file contents...},
 *               "overrides": {...flag-level overrides...}}
 * Both keys optional. Either object may carry "playbook_path". Precedence:
 * defaults < backend profile < base < AMI_* environment < overrides. */
ami_status ami_engine_create(const char* config_json, ami_engine** out_engine);
void ami_engine_destroy(ami_engine* engine);

/* Message valid until the next call on the same engine. */
const char* ami_last_error(const ami_engine* engine);

typedef void (*ami_progress_fn)(const char* message, void* user_data);
void ami_engine_set_progress(ami_engine* engine, ami_progress_fn fn, void* user_data);

/* The engine's effective configuration (secrets masked), as JSON. */
ami_status ami_engine_config(ami_engine* engine, char** out_json);

/* identity_json: {"name": str, "dob": str?, "attributes": {str: str}?}
 * Writes the full ScreeningReport JSON. AMI_NO_EVIDENCE still produces a
 * report. */
ami_status ami_screen(ami_engine* engine, const char* identity_json, char** out_report_json);

/* Runs the evaluation protocol over a dataset directory holding up to four
 * population CSVs (clean.csv, pep.csv, rw.csv, sdn.csv); writes means/ECDF/
 * efficiency/summary files under out_dir and returns the summary JSON plus a
 * printable means table. */
ami_status ami_eval(ami_engine* engine, const char* dataset_dir, const char* out_dir,
                    char** out_summary_json, char** out_table_text);

/* Records search results (and page bodies when with_pages != 0) for each name
 * into snapshot_dir. Requires live search credentials. */
ami_status ami_snapshot_record(ami_engine* engine, const char* const* names, size_t n_names,
                               const char* snapshot_dir, int with_pages);

/* Integrity + schema check of a snapshot directory. On failure the error
 * message names the offending file. */
ami_status ami_snapshot_verify(const char* snapshot_dir, char** out_error);

/* Loads and validates a playbook file without running anything. */
ami_status ami_playbook_check(const char* playbook_path, char** out_error);

void ami_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif /* AMISCREEN_H */
