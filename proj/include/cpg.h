/* C interface to the cpgroups library.
 *
 * Every operation returns a cpg_status and, on success, a cpg_report holding
 * the result as JSON and as key=value text. Handles are opaque and owned by
 * the caller; release them with the matching *_free function. Strings
 * returned by accessors stay valid until their handle is freed.
 *
 * After a failing call, cpg_last_error() describes the failure. The message
 * is thread-local and is overwritten by the next failing call.
 */
#ifndef CPG_H
#define CPG_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(CPG_BUILDING_LIBRARY)
#define CPG_API __attribute__((visibility("default")))
#else
#define CPG_API
#endif

typedef enum cpg_status {
  CPG_OK = 0,               /* success, or a "yes" answer */
  CPG_FALSE = 1,            /* computed successfully; the answer is "no" */
  CPG_INPUT_ERROR = 2,      /* malformed input or violated precondition */
  CPG_BUDGET_EXHAUSTED = 3, /* answer unknown within the configured budget */
  CPG_INTERNAL_ERROR = 4    /* a certification step failed */
} cpg_status;

typedef struct cpg_group cpg_group;               /* finite permutation group */
typedef struct cpg_presentation cpg_presentation; /* finitely presented group */
typedef struct cpg_report cpg_report;             /* result of an operation */

typedef struct cpg_options {
  uint64_t aut_node_budget; /* automorphism search nodes */
  uint64_t max_cosets;      /* coset enumeration and quotient index cap */
} cpg_options;

CPG_API void cpg_options_default(cpg_options* options);
CPG_API const char* cpg_version(void);
CPG_API const char* cpg_last_error(void);
CPG_API const char* cpg_status_name(cpg_status status);

/* Groups: `S5`, `A4`, `Z12`, `D6`, `V4`, cycle lists `(1 2), (1 2 3)`, and
 * `x`-products of these. */
CPG_API cpg_status cpg_group_parse(const char* spec, cpg_group** out);
CPG_API const char* cpg_group_describe(const cpg_group* group);
CPG_API void cpg_group_free(cpg_group* group);

/* Presentations: `< a, b | a^3 = b^2 >`. */
CPG_API cpg_status cpg_presentation_parse(const char* text, cpg_presentation** out);
CPG_API const char* cpg_presentation_text(const cpg_presentation* presentation);
CPG_API void cpg_presentation_free(cpg_presentation* presentation);

/* Reports. */
CPG_API cpg_status cpg_report_status(const cpg_report* report);
/* Headline result, e.g. `A5 (order 60)`. */
CPG_API const char* cpg_report_result(const cpg_report* report);
CPG_API const char* cpg_report_json(const cpg_report* report);
CPG_API const char* cpg_report_text(const cpg_report* report);
CPG_API void cpg_report_free(cpg_report* report);

/* Operations. `options` may be NULL for defaults. On success the report
 * status is CPG_OK or CPG_FALSE and equals the return value. */
CPG_API cpg_status cpg_order(const cpg_group* g, cpg_report** out);
CPG_API cpg_status cpg_cp_subgroup(const cpg_group* g, int64_t p, cpg_report** out);
CPG_API cpg_status cpg_cp_quotient(const cpg_presentation* g, int64_t p, cpg_report** out);
CPG_API cpg_status cpg_cp_kernel(const cpg_presentation* g, int64_t p, const cpg_options* options,
                                 cpg_report** out);
CPG_API cpg_status cpg_series_presentation(const cpg_presentation* g, int64_t p, uint32_t depth,
                                           const cpg_options* options, cpg_report** out);
CPG_API cpg_status cpg_series_group(const cpg_group* g, int64_t p, uint32_t depth, cpg_report** out);
CPG_API cpg_status cpg_verdict(const cpg_group* g, int64_t p, const cpg_options* options,
                               cpg_report** out);
CPG_API cpg_status cpg_aut(const cpg_group* g, const cpg_options* options, cpg_report** out);
/* Enumerates cosets of the subgroup generated by the comma-separated
 * `subgroup` words (may be empty). */
CPG_API cpg_status cpg_coset_enum(const cpg_presentation* g, const char* subgroup,
                                  const cpg_options* options, cpg_report** out);
/* Kernel of the homomorphism sending the generators to the `;`-separated
 * permutations in `images`. */
CPG_API cpg_status cpg_kernel_table(const cpg_presentation* g, const char* images,
                                    const cpg_options* options, cpg_report** out);
/* Reidemeister-Schreier presentation of the subgroup given by words, or by
 * images (kernel) when `images` is non-NULL. */
CPG_API cpg_status cpg_rs(const cpg_presentation* g, const char* subgroup, const char* images,
                          const cpg_options* options, cpg_report** out);
CPG_API cpg_status cpg_abelianize(const cpg_presentation* g, cpg_report** out);
/* Matrix text `[[3, -2], [1, 0]]`. */
CPG_API cpg_status cpg_snf(const char* matrix, cpg_report** out);
CPG_API cpg_status cpg_torus_cover(int64_t m, int64_t n, int64_t p, cpg_report** out);
CPG_API cpg_status cpg_chbili_q(int64_t m, int64_t n, int64_t p, cpg_report** out);
CPG_API cpg_status cpg_components(int64_t p, int64_t c, cpg_report** out);
CPG_API cpg_status cpg_trefoil_obstruction(int64_t p, cpg_report** out);
CPG_API cpg_status cpg_out_obstruction(const cpg_presentation* g, int assert_out_trivial,
                                       int64_t p_max, cpg_report** out);
CPG_API cpg_status cpg_s6(int64_t p, const cpg_options* options, cpg_report** out);
CPG_API cpg_status cpg_e2_table(int64_t m, int64_t n, int64_t p, uint32_t s_max, uint32_t t_max,
                                cpg_report** out);

/* Reference checks. `id` is a catalog id or "all"; the status is CPG_FALSE
 * when any selected item fails. */
CPG_API size_t cpg_catalog_size(void);
CPG_API const char* cpg_catalog_id(size_t index);
CPG_API const char* cpg_catalog_description(size_t index);
CPG_API cpg_status cpg_verify(const char* id, cpg_report** out);

#ifdef __cplusplus
}
#endif

#endif /* CPG_H */
