/*
 * lindef - exact invariants of finite-dimensional local algebras over F_p:
 * minimal free resolutions, linear-part homology, comparison maps on Tor,
 * and the derived ring verdicts (s, Koszul, complete intersection, Golod).
 *
 * C API over an opaque-handle core. All functions returning lde_status set a
 * thread-local message retrievable via lde_last_error() on failure. Strings
 * returned through char** are heap-allocated; release them with
 * lde_string_free().
 */
#ifndef LINDEF_H
#define LINDEF_H

#ifdef __cplusplus
extern "C" {
#endif

typedef enum lde_status {
  LDE_OK = 0,
  LDE_ERR_PARSE = 1,          /* bad spec / polynomial / module text */
  LDE_ERR_FIELD = 2,          /* field characteristic is not prime */
  LDE_ERR_RELATION_ORDER = 3, /* relation with a term of degree < 2 */
  LDE_ERR_TRUNCATION = 4,     /* verdict needs an untruncated presentation */
  LDE_ERR_RESOURCE = 5,       /* resolution exceeded the memory guard */
  LDE_ERR_ARGUMENT = 6,       /* invalid argument */
  LDE_ERR_CHECK_FAILED = 7,   /* corpus expectations not reproduced */
  LDE_ERR_INTERNAL = 8
} lde_status;

typedef struct lde_ring lde_ring;     /* parsed ring spec */
typedef struct lde_report lde_report; /* analysis result */

typedef struct lde_options {
  int depth;          /* homological depth; <= 0 takes the spec's value (default 8) */
  int powers;         /* nonzero: also analyze R/m^n and m^n up to the socle degree */
  int include_timing; /* nonzero: real timing_ms in the JSON output */
  long long max_entries;   /* memory guard on beta_i * dim; <= 0: default 2e6 */
  const char* module_text; /* optional cokernel presentation matrix, or NULL */
} lde_options;

const char* lde_version(void);
/* message of the last failure on this thread; empty string if none */
const char* lde_last_error(void);

lde_status lde_ring_parse(const char* spec_text, lde_ring** out);
void lde_ring_free(lde_ring* ring);

/* opts may be NULL for defaults */
lde_status lde_analyze(const lde_ring* ring, const lde_options* opts, lde_report** out);
void lde_report_free(lde_report* report);

/* part: "table", "json", "nu", "ld", "koszul" */
lde_status lde_report_render(const lde_report* report, const char* part, char** out_text);
void lde_string_free(char* s);

/* 1 when every consistency check passed, else 0 */
int lde_report_checks_clean(const lde_report* report);
/* 1 when the analysis hit the resource guard and carries partial results */
int lde_report_incomplete(const lde_report* report);

/* built-in example rings */
int lde_corpus_count(void);
const char* lde_corpus_name(int idx);
const char* lde_corpus_description(int idx);
const char* lde_corpus_spec(int idx);
/* re-analyzes entry idx and compares with its curated expectations;
 * LDE_OK on full agreement, LDE_ERR_CHECK_FAILED with details otherwise */
lde_status lde_corpus_check(int idx, int depth, char** out_summary);

#ifdef __cplusplus
}
#endif

#endif /* LINDEF_H */
