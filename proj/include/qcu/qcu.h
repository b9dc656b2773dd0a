#ifndef QCU_H
#define QCU_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define QCU_API __declspec(dllexport)
#else
#define QCU_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum qcu_status {
  QCU_OK = 0,
  QCU_ERR_INVALID_INPUT = 1,
  QCU_ERR_FIELD_MISMATCH = 2,
  QCU_ERR_DIVISION_BY_ZERO = 3,
  QCU_ERR_FIELD_TOO_SMALL = 4,
  QCU_ERR_NOT_A_SQUARE = 5,
  QCU_ERR_VERIFICATION = 6,
  QCU_ERR_IO = 7,
  QCU_ERR_NULL_ARGUMENT = 8,
  QCU_ERR_INTERNAL = 9
} qcu_status;

typedef struct qcu_config qcu_config;
typedef struct qcu_report qcu_report;
typedef struct qcu_candidate qcu_candidate;

QCU_API const char* qcu_version(void);
QCU_API const char* qcu_status_name(qcu_status status);
/* Message of the last failed call on this thread; "" if none. */
QCU_API const char* qcu_last_error(void);

/* field: "Q" or an odd prime in decimal; NULL selects the default prime. */
QCU_API qcu_status qcu_config_new(const char* field, uint64_t seed, qcu_config** out);
QCU_API void qcu_config_free(qcu_config* cfg);
/* "text" or "json". */
QCU_API qcu_status qcu_config_set_format(qcu_config* cfg, const char* format);
/* Negative removes the cap. */
QCU_API qcu_status qcu_config_set_degree_cap(qcu_config* cfg, int cap);
QCU_API qcu_status qcu_config_set_verbosity(qcu_config* cfg, int verbosity);
QCU_API const char* qcu_config_field(const qcu_config* cfg);

/* Commands take parallel arrays of parameter names and values.
   command: pencil | mf | clifford | betti | ulrich. */
QCU_API qcu_status qcu_run_command(const qcu_config* cfg, const char* command, const char* const* keys,
                                   const char* const* values, size_t count, qcu_report** out);
/* suite: grouplaw | clifford | betti | knorrer | ulrich-e2e. */
QCU_API qcu_status qcu_run_suite(const qcu_config* cfg, const char* suite, const char* const* keys,
                                 const char* const* values, size_t count, qcu_report** out);
/* object: betti | cohomology | candidate; format: text | latex | json. */
QCU_API qcu_status qcu_export(const qcu_config* cfg, const char* object, const char* const* keys,
                              const char* const* values, size_t count, const char* path, const char* format,
                              qcu_report** out);

QCU_API void qcu_report_free(qcu_report* report);
QCU_API int qcu_report_passed(const qcu_report* report);
/* Rendered transcript in the configured format; owned by the report. */
QCU_API const char* qcu_report_text(const qcu_report* report);
QCU_API size_t qcu_report_check_count(const qcu_report* report);
QCU_API const char* qcu_report_check_name(const qcu_report* report, size_t index);
QCU_API int qcu_report_check_passed(const qcu_report* report, size_t index);

/* Ulrich candidates. JSON is the format written by qcu_export. */
QCU_API qcu_status qcu_candidate_from_json(const char* json, qcu_candidate** out);
/* n >= 2, d: comma separated n+1 values in the config's field. */
QCU_API qcu_status qcu_candidate_construct(const qcu_config* cfg, int n, const char* d, qcu_candidate** out);
QCU_API void qcu_candidate_free(qcu_candidate* cand);
QCU_API size_t qcu_candidate_rows(const qcu_candidate* cand);
QCU_API size_t qcu_candidate_cols(const qcu_candidate* cand);
QCU_API size_t qcu_candidate_variables(const qcu_candidate* cand);
/* Canonical JSON; owned by the candidate. */
QCU_API const char* qcu_candidate_json(const qcu_candidate* cand);
/* *ok = 1 iff A*B' = 0, A*C1 = q1*id and A*C2 = q2*id. */
QCU_API qcu_status qcu_candidate_certificates(const qcu_candidate* cand, int* ok);
/* Sets entry (row, col) of A to the polynomial text (negative controls). */
QCU_API qcu_status qcu_candidate_set_entry(qcu_candidate* cand, size_t row, size_t col, const char* poly);
QCU_API qcu_status qcu_candidate_hilbert(const qcu_candidate* cand, int trials, uint64_t seed, int* passed);

QCU_API qcu_status qcu_betti_number(int g, int i, long* out);
QCU_API qcu_status qcu_knorrer_check(int n, int* ok);

#ifdef __cplusplus
}
#endif

#endif
