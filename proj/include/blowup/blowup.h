/* C interface to the blowup library.
 *
 * All handles are opaque and owned by the caller; release them with the
 * matching *_free function. Strings returned through out-parameters are
 * allocated by the library and released with bw_string_free. Every function
 * returning bw_status records a message for the calling thread that
 * bw_last_error() returns until the next failing call.
 */
#ifndef BLOWUP_BLOWUP_H
#define BLOWUP_BLOWUP_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(__GNUC__)
#define BW_API __attribute__((visibility("default")))
#else
#define BW_API
#endif

typedef enum bw_status {
  BW_OK = 0,
  BW_ERR_INPUT = 1,        /* malformed input or unsuitable document */
  BW_ERR_PRECONDITION = 2, /* documented precondition does not hold */
  BW_ERR_CAP = 3,          /* a configured size cap or budget was exceeded */
  BW_ERR_INTERNAL = 4,     /* consistency check failed; please report */
  BW_ERR_ARGUMENT = 5      /* null handle or unknown option name */
} bw_status;

typedef enum bw_verdict {
  BW_VERDICT_TRUE = 0,
  BW_VERDICT_FALSE = 1,
  BW_VERDICT_INCONCLUSIVE = 2,
  BW_VERDICT_NOT_APPLICABLE = 3
} bw_verdict;

typedef struct bw_document bw_document;
typedef struct bw_config bw_config;
typedef struct bw_report bw_report;

BW_API const char* bw_version(void);
BW_API int bw_schema_version(void);
BW_API const char* bw_last_error(void);
BW_API void bw_string_free(char* s);

/* Number of commands and the i-th command name (static storage). */
BW_API size_t bw_command_count(void);
BW_API const char* bw_command_name(size_t i);

/* `labels` may be NULL; otherwise a whitespace-separated label table that fixes
 * the vertex numbering. `source` names the input in diagnostics and may be NULL. */
BW_API bw_status bw_document_parse(const char* text, size_t length, const char* labels,
                                   const char* source, bw_document** out);
BW_API bw_status bw_document_parse_file(const char* path, const char* labels, bw_document** out);
/* Graph on vertices 1..n from `count` pairs stored as pairs[2i], pairs[2i+1]. */
BW_API bw_status bw_document_from_edges(int n, const int* pairs, size_t count, bw_document** out);
BW_API int bw_document_vertex_count(const bw_document* doc);
BW_API void bw_document_free(bw_document* doc);

BW_API bw_status bw_config_new(bw_config** out);
BW_API void bw_config_free(bw_config* cfg);
/* Integer keys: chromatic_cap_n, clutter_cap_n, hb_dim_cap, scan_bound,
 * alpha_box_low, alpha_box_high, enumeration_budget, assume_perfect (0/1). */
BW_API bw_status bw_config_set_int(bw_config* cfg, const char* key, long long value);
/* String keys: cone (rees|simis|generators), ideal (cover|edge). */
BW_API bw_status bw_config_set_string(bw_config* cfg, const char* key, const char* value);

BW_API bw_status bw_run(const char* command, const bw_document* doc, const bw_config* cfg,
                        bw_report** out);
BW_API bw_verdict bw_report_verdict(const bw_report* report);
BW_API size_t bw_report_check_count(const bw_report* report);
/* Pretty-printed JSON; timing is omitted when include_timing is 0. */
BW_API bw_status bw_report_to_json(const bw_report* report, int include_timing, char** out);
BW_API bw_status bw_report_to_text(const bw_report* report, char** out);
BW_API void bw_report_free(bw_report* report);

#ifdef __cplusplus
}
#endif

#endif /* BLOWUP_BLOWUP_H */
