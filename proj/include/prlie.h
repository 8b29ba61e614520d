/* prlie — pseudo-Riemannian Lie algebra toolkit, C API.
 *
 * All objects are opaque handles created and destroyed by this library.
 * Functions return PRL_OK on success; on failure they return an error code
 * and leave a message retrievable with prl_last_error() (thread-local).
 * Strings returned through char** are allocated by the library and must be
 * released with prl_string_free(). Rationals cross this boundary as text,
 * "p/q" or "p".
 */
#ifndef PRLIE_H
#define PRLIE_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum prl_status {
  PRL_OK = 0,
  PRL_ERR_ARGUMENT = 1,     /* null handle, bad index, contract violation */
  PRL_ERR_PARSE = 2,        /* text could not be parsed */
  PRL_ERR_INPUT = 3,        /* Jacobi failure, degenerate form, bad params */
  PRL_ERR_PRECONDITION = 4, /* e.g. decomposing a non-Riemann-Lie instance */
  PRL_ERR_LIMIT = 5,        /* enumeration exceeds the configured ceiling */
  PRL_ERR_BUG = 6           /* internal invariant violated: report it */
} prl_status;

typedef struct prl_algebra prl_algebra;
typedef struct prl_form prl_form;
typedef struct prl_report prl_report;        /* check report */
typedef struct prl_decomp prl_decomp;        /* Riemann-Lie decomposition */
typedef struct prl_search prl_search;        /* form search result */

const char* prl_version(void);

/* Message for the most recent failure on this thread; never NULL. */
const char* prl_last_error(void);

void prl_string_free(char* s);
void prl_algebra_free(prl_algebra* a);
void prl_form_free(prl_form* f);
void prl_report_free(prl_report* r);
void prl_decomp_free(prl_decomp* d);
void prl_search_free(prl_search* s);

/* --- instances ---------------------------------------------------------- */

/* Parses the instance text format (see README); both outputs optional. */
prl_status prl_parse_text(const char* text, prl_algebra** algebra_out, prl_form** form_out);
prl_status prl_parse_file(const char* path, prl_algebra** algebra_out, prl_form** form_out);

/* Serializes an instance back to the text format. */
prl_status prl_emit_text(const prl_algebra* a, const prl_form* f, const char* name,
                         char** text_out);

int prl_algebra_dim(const prl_algebra* a);
/* Basis name at index i, or NULL when out of range (no error raised). */
const char* prl_algebra_basis_name(const prl_algebra* a, int i);
int prl_algebra_solvable(const prl_algebra* a);
int prl_algebra_nilpotent(const prl_algebra* a);

int prl_form_dim(const prl_form* f);
int prl_form_nondegenerate(const prl_form* f);
int prl_form_positive_definite(const prl_form* f);

/* --- generators --------------------------------------------------------- */

/* Block construction: m generators rotating n planes; rates is a row-major
 * m*n array of rational strings. The form is the identity. */
prl_status prl_construct_block(int m, int n, const char* const* rates, prl_algebra** algebra_out,
                               prl_form** form_out);

/* Catalog entry by name with key/value text parameters. */
prl_status prl_catalog(const char* name, int nparams, const char* const* keys,
                       const char* const* values, prl_algebra** algebra_out, prl_form** form_out);

/* --- verification ------------------------------------------------------- */

/* Computes the compatible product and checks PR1/PR2/PR3/PR3'. */
prl_status prl_check(const prl_algebra* a, const prl_form* f, prl_report** report_out);

int prl_report_pr1_ok(const prl_report* r);
int prl_report_pr2_ok(const prl_report* r);
int prl_report_pr3_ok(const prl_report* r);
int prl_report_pr3_prime_ok(const prl_report* r);
int prl_report_pseudo_riemannian(const prl_report* r);
int prl_report_riemann_lie(const prl_report* r);
int prl_report_solvable(const prl_report* r);
int prl_report_center_dim(const prl_report* r);
prl_status prl_report_signature(const prl_report* r, int* positives, int* negatives, int* zeros);
/* Product entry e_i * e_j as "p/q" coefficient of e_k. */
prl_status prl_report_product_entry(const prl_report* r, int i, int j, int k, char** value_out);
prl_status prl_report_text(const prl_report* r, char** text_out);
prl_status prl_report_json(const prl_report* r, char** json_out);

/* --- decomposition ------------------------------------------------------ */

/* Splits a Riemann-Lie instance as g = S (+) U. Fails with
 * PRL_ERR_PRECONDITION naming the failed check otherwise. */
prl_status prl_decompose(const prl_algebra* a, const prl_form* f, prl_decomp** decomp_out);

int prl_decomp_s_dim(const prl_decomp* d);
int prl_decomp_u_dim(const prl_decomp* d);
int prl_decomp_checks_ok(const prl_decomp* d);
prl_status prl_decomp_text(const prl_decomp* d, char** text_out);
prl_status prl_decomp_json(const prl_decomp* d, char** json_out);

/* --- form search -------------------------------------------------------- */

/* Enumerates symmetric Gram matrices with entries from `values`
 * (nvalues rational strings). randomized == 0 runs the exhaustive grid
 * (refused with PRL_ERR_LIMIT above `ceiling` candidates; pass 0 for the
 * default ceiling); otherwise `count` seeded samples are drawn. */
prl_status prl_search_forms(const prl_algebra* a, const char* const* values, int nvalues,
                            int randomized, uint64_t count, uint64_t seed, uint64_t ceiling,
                            prl_search** search_out);

uint64_t prl_search_tested(const prl_search* s);
uint64_t prl_search_degenerate(const prl_search* s);
uint64_t prl_search_passed(const prl_search* s);
/* Passing form as a parsable instance text (algebra + form). */
prl_status prl_search_pass_text(const prl_search* s, uint64_t index, char** text_out);
prl_status prl_search_text(const prl_search* s, char** text_out);
prl_status prl_search_json(const prl_search* s, char** json_out);

#ifdef __cplusplus
}
#endif

#endif /* PRLIE_H */
