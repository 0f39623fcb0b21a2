/* C interface to the Ore polynomial / sum-rank code library.
 *
 * All structured data crosses the boundary as UTF-8 JSON strings; strings
 * returned through `char**` are heap-allocated and must be released with
 * orc_string_free(). Every function returns a status code; on failure a
 * human-readable message is available through orc_last_error().
 */
#ifndef ORECODES_H
#define ORECODES_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct orc_ctx orc_ctx;
typedef struct orc_poly orc_poly;

enum {
    ORC_OK = 0,
    ORC_EVERIFY = 1,  /* a verification run found a violated property */
    ORC_EINVAL = 2,   /* malformed input or parameters */
    ORC_EPRECOND = 3, /* violated mathematical precondition */
    ORC_EBUDGET = 4,  /* enumeration budget exceeded */
    ORC_EINTERNAL = 5
};

const char* orc_version(void);
/* Message for the most recent failure on this thread. */
const char* orc_last_error(void);
void orc_string_free(char* s);

/* --- contexts ---------------------------------------------------------- */

/* twist_json may be NULL for a zero twist. */
int orc_ctx_frobenius(int64_t p, int e, int s, const char* twist_json, orc_ctx** out);
/* a_json: the derivation scale, a nonzero rational function. */
int orc_ctx_differential(int64_t p, const char* a_json, orc_ctx** out);
int orc_ctx_from_json(const char* descriptor_json, orc_ctx** out);
void orc_ctx_free(orc_ctx* ctx);

/* Descriptor plus derived data (centre generator, basis, Gram matrix). */
int orc_ctx_describe(const orc_ctx* ctx, char** json_out);

/* --- field and point helpers ------------------------------------------- */

int orc_upsilon(const orc_ctx* ctx, const char* elem_json, char** json_out);
int orc_tau(const orc_ctx* ctx, const char* elem_json, char** json_out);
int orc_is_ramified(const orc_ctx* ctx, const char* elem_json, int* out);
int orc_c_dual(const orc_ctx* ctx, const char* elem_json, char** json_out);

/* --- Ore polynomial arithmetic ------------------------------------------ */

int orc_poly_parse(const orc_ctx* ctx, const char* coeffs_json, orc_poly** out);
void orc_poly_free(orc_poly* f);
int orc_poly_to_json(const orc_poly* f, char** json_out);
int orc_poly_add(const orc_poly* f, const orc_poly* g, orc_poly** out);
int orc_poly_mul(const orc_poly* f, const orc_poly* g, orc_poly** out);
/* side: 0 right (f = q g + r), 1 left (f = g q + r) */
int orc_poly_divmod(const orc_poly* f, const orc_poly* g, int side, orc_poly** q, orc_poly** r);
int orc_poly_rgcd(const orc_poly* f, const orc_poly* g, orc_poly** out);
int orc_poly_lclm(const orc_poly* f, const orc_poly* g, orc_poly** out);
/* Matrix of the evaluation of f at the pseudo-linear point c. */
int orc_poly_ev(const orc_poly* f, const char* point_json, char** matrix_json_out);

/* --- codes --------------------------------------------------------------- */

/* params: {"family":"lrs"|"lg","k":int,"points":[...],
 *          "subspaces":[cols... | "0" | "K"],"check_msrd":bool}.
 * Output: the code descriptor; with check_msrd also "d" and "msrd". */
int orc_code_build(const orc_ctx* ctx, const char* params_json, char** json_out);

/* params: {"k":int,"points":[...],"subspaces":[...],"corrupt":bool}.
 * *ok is 1 when every pairing vanishes and the dimensions add up. */
int orc_dualcheck(const orc_ctx* ctx, const char* params_json, char** report_json, int* ok);

/* Residue report for num/den: per-point trace-of-residue values and their
 * sum; "asserted" tells whether the degree margin certifies a zero sum. */
int orc_residue_demo(const orc_ctx* ctx, const char* num_json, const char* den_json,
                     char** report_json);

/* Full verification suites; *ok is 1 when every criterion passes. */
int orc_selftest(uint64_t seed, char** report_json, int* ok);

#ifdef __cplusplus
}
#endif

#endif
