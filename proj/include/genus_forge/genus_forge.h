#ifndef GENUS_FORGE_H
#define GENUS_FORGE_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define GF_API __declspec(dllexport)
#else
#define GF_API __attribute__((visibility("default")))
#endif

typedef enum gf_status {
  GF_OK = 0,
  GF_ERR_INVALID_ARGUMENT = 1,
  GF_ERR_DOMAIN = 2,
  GF_ERR_PRECISION = 3,
  GF_ERR_UNSUPPORTED = 4,
  GF_ERR_INTERNAL = 5
} gf_status;

typedef enum gf_check_status { GF_CHECK_PASS = 0, GF_CHECK_FAIL = 1, GF_CHECK_ERROR = 2 } gf_check_status;

/* An ordered list of verification reports. */
typedef struct gf_reports gf_reports;

/* Message of the last failing call on this thread; never NULL. */
GF_API const char* gf_last_error(void);
GF_API const char* gf_version(void);

/* Strings returned through char** out-parameters are owned by the caller. */
GF_API void gf_string_free(char* s);

/* params: "k=1/2,g2=3" or NULL; order <= 0 picks the smallest usable order. */
GF_API gf_status gf_eval(const char* genus, const char* space, const char* params, int order, char** value_out);
GF_API gf_status gf_model_json(const char* space, char** json_out);
/* relations_out may be NULL. */
GF_API gf_status gf_solve_fe(int order, char** relations_out, char** json_out);

/* order <= 0 uses the built-in default for the case. */
GF_API gf_status gf_verify_theorem_a(const char* which, const char* genus, int order, gf_reports** out);
GF_API gf_status gf_verify_s1(int codim, int degree, gf_reports** out);
GF_API gf_status gf_verify_transition(const char* which, const char* e1, int order, gf_reports** out);
GF_API gf_status gf_verify_cov(const char* tower, int order, gf_reports** out);
GF_API gf_status gf_verify_hodge(int n, int lmax, int pmax, gf_reports** out);
/* Every built-in check, sorted by name. */
GF_API gf_status gf_report_all(gf_reports** out);
/* The named built-in checks, sorted by name; an unknown name is an error. */
GF_API gf_status gf_report_select(const char* const* checks, size_t count, gf_reports** out);

GF_API size_t gf_check_count(void);
GF_API const char* gf_check_name(size_t i);

GF_API size_t gf_reports_count(const gf_reports* r);
GF_API int gf_reports_all_passed(const gf_reports* r);
/* Accessors return NULL / GF_CHECK_ERROR for an out-of-range index. */
GF_API const char* gf_reports_check(const gf_reports* r, size_t i);
GF_API gf_check_status gf_reports_status(const gf_reports* r, size_t i);
GF_API const char* gf_reports_lhs(const gf_reports* r, size_t i);
GF_API const char* gf_reports_rhs(const gf_reports* r, size_t i);
/* NULL when the check passed. */
GF_API const char* gf_reports_discrepancy(const gf_reports* r, size_t i);
GF_API long gf_reports_millis(const gf_reports* r, size_t i);
/* Appends the reports of src to dst; src is left unchanged. */
GF_API gf_status gf_reports_append(gf_reports* dst, const gf_reports* src);
/* JSON array of report objects; deterministic != 0 writes millis as 0. */
GF_API gf_status gf_reports_json(const gf_reports* r, int deterministic, char** json_out);
GF_API void gf_reports_free(gf_reports* r);

#ifdef __cplusplus
}
#endif

#endif
