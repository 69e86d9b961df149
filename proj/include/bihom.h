/* bihom: exact structure-constant workbench for BiHom-algebraic structures.
 *
 * C interface of the shared library. All objects are opaque handles; every
 * function that can fail reports through a status code and, where noted, a
 * malloc'd error string the caller must release with bh_string_free.
 *
 * Status codes mirror the CLI exit codes:
 *   BH_OK         operation succeeded, all checks passed
 *   BH_VIOLATIONS structure is well-formed but violates axioms / preconditions
 *   BH_ERROR      malformed input (parse error, shape error, unknown name)
 */
#ifndef BIHOM_H
#define BIHOM_H

#ifdef __cplusplus
extern "C" {
#endif

typedef struct bh_record bh_record;
typedef struct bh_report bh_report;

enum bh_status { BH_OK = 0, BH_VIOLATIONS = 1, BH_ERROR = 2 };

const char* bh_version(void);

/* --- records ------------------------------------------------------------ */

/* Parses a record from canonical JSON. Returns NULL on error; *err (if
 * non-NULL) receives a message. */
bh_record* bh_record_parse(const char* json, char** err);

/* Canonical JSON for a record. Never fails on a live handle. */
char* bh_record_serialize(const bh_record* rec);

const char* bh_record_kind(const bh_record* rec);

void bh_record_free(bh_record* rec);
void bh_string_free(char* s);

/* --- checking ------------------------------------------------------------*/

/* Runs every checker that applies to the record's kind. max_witnesses <= 0
 * selects the default (16). Returns NULL with *err set on shape errors. */
bh_report* bh_check(const bh_record* rec, int max_witnesses, char** err);

int bh_report_passed(const bh_report* rep);
long long bh_report_total_violations(const bh_report* rep);
char* bh_report_to_json(const bh_report* rep);
char* bh_report_to_text(const bh_report* rep);
void bh_report_free(bh_report* rep);

/* --- constructions ------------------------------------------------------ */

/* Runs a named construction over the input records (see the README for the
 * op list). variant is "left", "right" or NULL. On BH_OK, *out receives the
 * built record and *report its re-validation. On BH_VIOLATIONS, *report
 * carries the failed precondition (or validation) report and *out is NULL
 * unless the structure was still assembled. On BH_ERROR, *err is set. */
int bh_construct(const char* op, const bh_record* const* inputs, int n_inputs,
                 const char* variant, int max_witnesses, bh_record** out,
                 bh_report** report, char** err);

/* --- catalog -------------------------------------------------------------*/

/* Newline-separated preset names. */
char* bh_catalog_list(void);

bh_record* bh_catalog_get(const char* name, char** err);

/* Deterministic random structure candidate; *passed (if non-NULL) receives
 * the verdict of the kind's checker on the candidate. */
bh_record* bh_random_structure(const char* kind, int dim, unsigned long long seed,
                               int sparsity, int* passed, char** err);

/* --- Yang-Baxter residuals ------------------------------------------------*/

/* Computes the abhYBe residual of a "qt" record or the coabhYBe residual of
 * a "coqt" record, at the record's kind-adjusted weight. Returns BH_OK if
 * the residual vanishes, BH_VIOLATIONS if not (*json still receives the
 * residual), BH_ERROR on malformed input. */
int bh_residual(const bh_record* rec, char** json, char** err);

#ifdef __cplusplus
}
#endif

#endif /* BIHOM_H */
