/* mcgbraid — exact mapping-class computations on the once-bounded surface.
 *
 * C interface over the C++ core. All objects are opaque handles owned by
 * the caller and released with the matching *_free function. Functions
 * returning mcgb_status set a thread-local error message retrievable via
 * mcgb_last_error(). Strings returned as char* are heap-allocated and must
 * be released with mcgb_string_free().
 */
#ifndef MCGBRAID_H
#define MCGBRAID_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum mcgb_status {
  MCGB_OK = 0,
  MCGB_ERR_PARSE = 1,         /* malformed word / braid / expression text */
  MCGB_ERR_INVALID_GENUS = 2, /* genus < 1 or otherwise unusable */
  MCGB_ERR_INVALID_INDEX = 3, /* generator or curve index out of range */
  MCGB_ERR_INVALID_RANGE = 4, /* bad parameter combination */
  MCGB_ERR_RANK_MISMATCH = 5, /* word or map does not fit the genus */
  MCGB_ERR_NULL_ARGUMENT = 6,
  MCGB_ERR_INTERNAL = 7
} mcgb_status;

/* Freely reduced word in the surface generators x1,y1,...,xg,yg. */
typedef struct mcgb_word mcgb_word;
/* Mapping class: relator-fixing automorphism with a certified inverse. */
typedef struct mcgb_class mcgb_class;
/* Result of a verification run. */
typedef struct mcgb_report mcgb_report;

const char* mcgb_version(void);
const char* mcgb_last_error(void);
void mcgb_string_free(char* s);

/* -- words ---------------------------------------------------------- */

/* Text format: whitespace-separated `x<k>`, `y<k>`, optionally `^-1`;
 * `1` is the empty word. */
mcgb_status mcgb_word_parse(const char* text, mcgb_word** out);
char* mcgb_word_format(const mcgb_word* w);
mcgb_status mcgb_word_concat(const mcgb_word* u, const mcgb_word* v,
                             mcgb_word** out);
mcgb_status mcgb_word_invert(const mcgb_word* w, mcgb_word** out);
/* Boundary word [y1,x1]...[yg,xg]. */
mcgb_status mcgb_relator(int genus, mcgb_word** out);
/* [y_i,x_i]...[y_j,x_j] for 1 <= i <= j. */
mcgb_status mcgb_partial_relator(int i, int j, mcgb_word** out);
int mcgb_word_equal(const mcgb_word* u, const mcgb_word* v);
size_t mcgb_word_length(const mcgb_word* w);
void mcgb_word_free(mcgb_word* w);

/* -- mapping classes -------------------------------------------------- */

/* Evaluates an expression such as
 *   (a1 b1 a1)^4 (a2 b2 (a1 b1 a1)^-1 w1 a1 b1 a1^2 b1)^-3
 *   hR' hA
 *   beta(2,3) phi(s1 s2^-1) t(R1)
 * at the given genus. */
mcgb_status mcgb_class_eval(const char* expr, int genus, mcgb_class** out);
mcgb_status mcgb_class_apply(const mcgb_class* mc, const mcgb_word* w,
                             mcgb_word** out);
mcgb_status mcgb_class_invert(const mcgb_class* mc, mcgb_class** out);
int mcgb_class_genus(const mcgb_class* mc);
int mcgb_class_equal(const mcgb_class* a, const mcgb_class* b);
/* NULL when equal; otherwise "gen: lhs vs rhs" naming the first generator
 * on which the two classes disagree. */
char* mcgb_class_first_difference(const mcgb_class* a, const mcgb_class* b);
/* Fixture format: `genus <g>` then 2g lines `x<k> -> <word>`. */
char* mcgb_class_format(const mcgb_class* mc);
void mcgb_class_free(mcgb_class* mc);

/* Images of x1..xn under the braid-group action on the free group;
 * strands = 0 infers the smallest strand count from the word. */
mcgb_status mcgb_artin_format(const char* braid_text, int strands, char** out);

/* -- verification ------------------------------------------------------ */

typedef struct mcgb_suite_config {
  int max_genus;      /* generator / braid-relation sweeps (default 5) */
  int max_rs;         /* r+s bound for block braidings (default 6) */
  int max_rst;        /* r+s+t bound for axiom triples (default 6) */
  int max_naturality; /* r+s bound for naturality samples (default 4) */
  int max_strands;    /* injectivity smoke strands (default 3) */
  int max_braid_len;  /* injectivity smoke word length (default 6) */
  uint64_t seed;      /* randomized algebra-law checks */
  int inject_fault;   /* test-only: corrupt one braiding fixture */
  const char* filter; /* optional check-name prefix, may be NULL */
} mcgb_suite_config;

void mcgb_suite_config_init(mcgb_suite_config* cfg);
mcgb_status mcgb_suite_run(const mcgb_suite_config* cfg, mcgb_report** out);
int mcgb_report_passed(const mcgb_report* r);
int mcgb_report_total(const mcgb_report* r);
int mcgb_report_failures(const mcgb_report* r);
/* structured = 0: readable text; structured = 1: one JSON record per line. */
char* mcgb_report_render(const mcgb_report* r, int structured);
void mcgb_report_free(mcgb_report* r);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* MCGBRAID_H */
