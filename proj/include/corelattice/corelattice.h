/* corelattice C API: exact enumeration for numerical sets, core partitions,
 * and lattice points of core polytopes.
 *
 * Conventions:
 *   - Every fallible function returns clx_status; results come back through
 *     out-parameters. CLX_OK is 0.
 *   - Objects are opaque handles freed with their clx_*_free function.
 *   - Strings returned through char** are heap-allocated; release them with
 *     clx_string_free. Arrays returned through int64_t** are released with
 *     clx_i64_array_free.
 *   - On failure, clx_last_error() returns a thread-local message describing
 *     what went wrong.
 *   - Counts that can exceed 2^53 are returned as decimal strings.
 */
#ifndef CORELATTICE_H
#define CORELATTICE_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum clx_status {
  CLX_OK = 0,
  CLX_ERR_INVALID_ARGUMENT = 1, /* bad value, parse failure, precondition */
  CLX_ERR_DOMAIN = 2,           /* operation undefined for this input */
  CLX_ERR_BUDGET = 3,           /* exhaustive-scan cap exceeded */
  CLX_ERR_VERIFY = 4,           /* a verification assertion failed */
  CLX_ERR_NULL = 5,             /* null handle or out-pointer */
  CLX_ERR_INTERNAL = 6,         /* internal cross-check failed */
  CLX_DONE = 7                  /* iterator exhausted (not an error) */
} clx_status;

typedef struct clx_numset clx_numset;
typedef struct clx_partition clx_partition;
typedef struct clx_apery clx_apery;
typedef struct clx_core_iter clx_core_iter;
typedef struct clx_tree_iter clx_tree_iter;

const char* clx_version(void);
const char* clx_last_error(void);
void clx_string_free(char* s);
void clx_i64_array_free(int64_t* a);

/* ---- numerical sets ---------------------------------------------------- */

/* Text form: elements up to F+1 then an arrow, e.g. "0,1,4,5,7,→";
 * the ASCII fallback "->" is accepted on input. */
clx_status clx_numset_parse(const char* text, clx_numset** out);
clx_status clx_numset_from_gaps(const int64_t* gaps, size_t n, clx_numset** out);
clx_status clx_numset_from_generators(const int64_t* gens, size_t n,
                                      clx_numset** out);
void clx_numset_free(clx_numset* t);
clx_status clx_numset_format(const clx_numset* t, char** out);
clx_status clx_numset_to_json(const clx_numset* t, char** out);
int64_t clx_numset_frobenius(const clx_numset* t);
int64_t clx_numset_genus(const clx_numset* t);
clx_status clx_numset_contains(const clx_numset* t, int64_t n, int* out);
clx_status clx_numset_gaps(const clx_numset* t, int64_t** out, size_t* len);
clx_status clx_numset_is_semigroup(const clx_numset* t, int* out);
clx_status clx_numset_is_symmetric(const clx_numset* t, int* out);
/* requires a semigroup */
clx_status clx_numset_is_pseudosymmetric(const clx_numset* t, int* out);
clx_status clx_numset_atom_monoid(const clx_numset* t, clx_numset** out);
clx_status clx_numset_dual(const clx_numset* t, clx_numset** out);
/* requires a semigroup */
clx_status clx_numset_missing_pairs(const clx_numset* t, int64_t** out,
                                    size_t* len);
/* requires a semigroup */
clx_status clx_numset_minimal_generators(const clx_numset* t, int64_t** out,
                                         size_t* len);

/* ---- partitions --------------------------------------------------------- */

clx_status clx_partition_parse(const char* text, clx_partition** out);
clx_status clx_partition_from_parts(const int64_t* parts, size_t n,
                                    clx_partition** out);
void clx_partition_free(clx_partition* p);
clx_status clx_partition_format(const clx_partition* p, char** out);
clx_status clx_partition_to_json(const clx_partition* p, char** out);
clx_status clx_partition_size(const clx_partition* p, int64_t* out);
clx_status clx_partition_conjugate(const clx_partition* p, clx_partition** out);
clx_status clx_partition_hook_grid(const clx_partition* p, char** out);
clx_status clx_partition_hook_set(const clx_partition* p, int64_t** out,
                                  size_t* len);
clx_status clx_partition_hook_multiset(const clx_partition* p, int64_t** out,
                                       size_t* len);
clx_status clx_partition_is_core(const clx_partition* p, int64_t a, int* out);
/* the profile-walk bijection and its inverse */
clx_status clx_phi(const clx_numset* t, clx_partition** out);
clx_status clx_phi_inverse(const clx_partition* p, clx_numset** out);

/* ---- Apery tuples ------------------------------------------------------- */

clx_status clx_apery_of(const clx_numset* t, int64_t a, clx_apery** out);
clx_status clx_apery_parse(const char* text, clx_apery** out);
void clx_apery_free(clx_apery* t);
clx_status clx_apery_format(const clx_apery* t, char** out);
clx_status clx_apery_to_json(const clx_apery* t, char** out);
clx_status clx_apery_set(const clx_apery* t, clx_numset** out);
int64_t clx_apery_modulus(const clx_apery* t);
clx_status clx_apery_coords(const clx_apery* t, int64_t** out, size_t* len);
clx_status clx_apery_genus(const clx_apery* t, int64_t* out);
clx_status clx_apery_frobenius(const clx_apery* t, int64_t* out);
clx_status clx_apery_partition_size(const clx_apery* t, int64_t* out);
clx_status clx_apery_conjugate(const clx_apery* t, clx_apery** out);
clx_status clx_apery_is_semigroup(const clx_apery* t, int* out);

/* counting closed forms; results as decimal strings */
clx_status clx_count_acores_by_max_hook(int64_t a, int64_t k, int64_t l,
                                        char** out);
clx_status clx_count_acores_max_hook_below(int64_t a, int64_t k, char** out);
clx_status clx_count_acores_by_parts(int64_t a, int64_t g, int at_most,
                                     char** out);

/* ---- polytopes and enumeration ------------------------------------------ */

/* Stats of the (a, b_1..b_m)-core polytope (from_semigroups = 0) or of the
 * oversemigroup polytope of <a, b> (from_semigroups != 0, single b). JSON per
 * schemas/stats.schema.json. */
clx_status clx_core_stats_json(int64_t a, const int64_t* bs, size_t nbs,
                               int from_semigroups, int jobs, char** out);

/* Lexicographic stream of lattice points. */
clx_status clx_core_iter_new(int64_t a, const int64_t* bs, size_t nbs,
                             int from_semigroups, clx_core_iter** out);
clx_status clx_core_iter_next(clx_core_iter* it, clx_apery** out); /* CLX_DONE */
void clx_core_iter_free(clx_core_iter* it);

clx_status clx_count_oversemigroups(int64_t a, int64_t b, char** out);
/* {"a":..,"b":..,"strata":{"0":..,...},"total":..} keyed by genus (a=3) or
 * middle Apery entry (a=4) */
clx_status clx_oversemigroups_by_genus_json(int64_t a, int64_t b, char** out);
clx_status clx_ratio_table_json(int64_t a, int64_t b_limit, char** out);

/* ---- anti-atom ----------------------------------------------------------- */

/* requires a semigroup; JSON per schemas/antiatom.schema.json */
clx_status clx_anti_atom_json(const clx_numset* s, int include_witnesses,
                              char** out);
/* {"rows":[...]} with one row per N in [1, n_max], schemas/gamma.schema.json */
clx_status clx_gamma_json(int64_t n_max, char** out);
clx_status clx_count_semigroups_by_frobenius(int64_t n, char** out);

/* ---- semigroup tree ------------------------------------------------------ */

clx_status clx_tree_iter_new(int64_t max_genus, int annotate,
                             clx_tree_iter** out);
/* JSON lines per schemas/treenode.schema.json */
clx_status clx_tree_iter_next(clx_tree_iter* it, char** out); /* CLX_DONE */
void clx_tree_iter_free(clx_tree_iter* it);
clx_status clx_tree_census_json(int64_t max_genus, char** out);
clx_status clx_tree_dot(int64_t max_genus, int annotate, char** out);

/* ---- verification --------------------------------------------------------- */

/* JSON array of suite names. */
clx_status clx_verify_suites(char** out);
/* Runs one suite (or "all"). Returns CLX_OK when every check passes,
 * CLX_ERR_VERIFY when some fail; either way *out carries the report JSON
 * (an array of reports for "all"). */
clx_status clx_verify(const char* suite, char** out);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* CORELATTICE_H */
