/*
 * hypbound: certified bounds for the hyperbolic metric density of plane
 * domains G = D \ E (unit disk minus a compact obstacle set).
 *
 * C interface. Domains are opaque handles; every fallible call returns an
 * hb_status and, on failure, leaves a message retrievable with hb_last_error()
 * on the calling thread. Strings returned through char** out-parameters are
 * heap allocated and must be released with hb_string_free(). Domain handles
 * are immutable after creation and may be shared between threads.
 */
#ifndef HYPBOUND_H
#define HYPBOUND_H

#include <stddef.h>
#include <stdint.h>

#if defined(HB_BUILDING_LIBRARY)
#define HB_API __attribute__((visibility("default")))
#else
#define HB_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum hb_status {
  HB_OK = 0,
  HB_ERR_INVALID_ARGUMENT = 1,
  HB_ERR_PARSE = 2,
  HB_ERR_IO = 3,
  HB_ERR_NOT_IN_DOMAIN = 4,
  HB_ERR_NOT_ON_BOUNDARY = 5,
  HB_ERR_EMPTY_SET = 6,
  HB_ERR_HYPOTHESIS = 7,
  HB_ERR_TRUNCATION = 8,
  HB_ERR_MALFORMED_PATH = 9,
  HB_ERR_ZERO_ARGUMENT = 10,
  HB_ERR_OUT_OF_DOMAIN = 11,
  HB_ERR_STARVATION = 12,
  HB_ERR_BAD_DELTA = 13,
  HB_ERR_INTERNAL = 99
} hb_status;

typedef enum hb_membership { HB_IN_G = 0, HB_IN_E = 1, HB_OUTSIDE = 2 } hb_membership;

typedef enum hb_oracle_kind { HB_ORACLE_DISK = 0, HB_ORACLE_PUNCTURED = 1 } hb_oracle_kind;

typedef enum hb_case {
  HB_CASE_CIRCLE_NEAREST = 0,
  HB_CASE_FAR_FROM_E = 1,
  HB_CASE_MID_RANGE = 2,
  HB_CASE_DEEP_SMALL_GAP = 3,
  HB_CASE_DEEP_COMPARABLE = 4
} hb_case;

typedef struct hb_domain hb_domain;

typedef struct hb_validation {
  int ok;                    /* halving hypothesis holds */
  long long first_violation; /* -1 when none */
  double delta;              /* the remaining fields are 0 unless ok */
  double c;
  double branch_log4delta;
  double branch_5log2;
  double c_circle;
  double c_deep_cap;
  size_t warning_count;
} hb_validation;

typedef struct hb_bounds {
  double d;
  double L;
  double lower;
  double upper;
  double witness_a_re;
  double witness_a_im;
  double witness_s;
  int has_thm1; /* 1 if the domain satisfies the halving hypothesis */
  double thm1_bound;
  int chain_ok;
} hb_bounds;

typedef struct hb_certificate {
  hb_case case_tag;
  double z_re, z_im;
  double zeta_re, zeta_im;
  double b_re, b_im;
  double log_ratio;
  double case_log_cap;
  double implied_lower;
  double c;
  int verified;
  char failure[256]; /* empty when verified */
} hb_certificate;

typedef struct hb_sweep_summary {
  size_t rows;
  size_t violations;
  long long first_violation; /* row index, -1 when none */
} hb_sweep_summary;

typedef struct hb_slit_summary {
  size_t rows;
  double sup_product_paper;
  double sup_product_literal;
  int closed_form_ok;
} hb_slit_summary;

typedef struct hb_oracle_summary {
  size_t checked;
  size_t failures;
} hb_oracle_summary;

HB_API const char* hb_version(void);
HB_API const char* hb_status_name(hb_status status);
HB_API const char* hb_last_error(void);
HB_API void hb_string_free(char* s);

/* 4 + ln(3 + 2 sqrt 2) */
HB_API double hb_kappa(void);

HB_API hb_status hb_domain_load(const char* path, hb_domain** out);
HB_API hb_status hb_domain_parse(const char* json, hb_domain** out);
HB_API hb_status hb_domain_oracle(hb_oracle_kind kind, hb_domain** out);
HB_API void hb_domain_free(hb_domain* domain);

HB_API hb_status hb_contains(const hb_domain* domain, double re, double im, hb_membership* out);

/* report (nullable): human readable, including heuristic warnings. */
HB_API hb_status hb_validate(const hb_domain* domain, hb_validation* out, char** report);

HB_API hb_status hb_compute_bounds(const hb_domain* domain, double re, double im, hb_bounds* out);

/* Sweep CSV header line and the row for z, newline terminated. */
HB_API hb_status hb_bounds_csv(const hb_domain* domain, double re, double im, char** csv);

/* tol <= 0 selects the default certificate tolerance 1e-9. json (nullable)
 * receives {case, z, zeta, b, log_ratio, case_log_cap, implied_lower, c}. */
HB_API hb_status hb_certify(const hb_domain* domain, double re, double im, double tol, hb_certificate* out,
                            char** json);

/* Re-checks a serialized certificate against the domain. */
HB_API hb_status hb_verify_certificate_json(const hb_domain* domain, const char* json, double tol, int* verified,
                                            char** failure);

/* threads == 0 uses all hardware threads. first_violation_row (nullable)
 * receives the CSV line of the first row with chain_ok == false. */
HB_API hb_status hb_sweep(const hb_domain* domain, size_t n, uint64_t seed, unsigned threads, const char* out_path,
                          hb_sweep_summary* out, char** first_violation_row);

/* out_path or csv (both nullable) receive the CSV; report (nullable) the
 * human-readable summary. */
HB_API hb_status hb_slit_audit(const double* deltas, size_t n, const char* out_path, hb_slit_summary* out,
                               char** csv, char** report);

HB_API hb_status hb_oracle_check(hb_oracle_kind kind, size_t n, uint64_t seed, hb_oracle_summary* out,
                                 char** first_failure_row);

#ifdef __cplusplus
}
#endif

#endif /* HYPBOUND_H */
