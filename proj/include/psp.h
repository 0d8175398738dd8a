/* Copyright (c) psp contributors. */
/* SPDX-License-Identifier: Apache-2.0 */
#ifndef PSP_H
#define PSP_H

/* C interface to the parametric shortest path library.
 *
 * Conventions:
 *   - every function that can fail returns a psp_status; PSP_OK is 0
 *   - on failure, psp_last_error() returns a message for the calling thread,
 *     valid until that thread's next API call
 *   - all returned strings are heap-allocated; release with psp_string_free
 *   - graph text format and dump formats use 1-based vertex and arc ids
 */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define PSP_API __declspec(dllexport)
#else
#define PSP_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum psp_status {
    PSP_OK = 0,
    PSP_ERR_PARSE = 1,
    PSP_ERR_INVALID_ARGUMENT = 2,
    PSP_ERR_UNREACHABLE_VERTEX = 3,
    PSP_ERR_NOT_STRONGLY_CONNECTED = 4,
    PSP_ERR_TOO_LARGE = 5,
    PSP_ERR_OVERFLOW = 6,
    PSP_ERR_CERTIFICATION_FAILED = 7,
    PSP_ERR_BALANCE_CHECK_FAILED = 8,
    PSP_ERR_INTERNAL = 9
} psp_status;

typedef struct psp_graph psp_graph;
typedef struct psp_solution psp_solution;

PSP_API const char* psp_last_error(void);
PSP_API void psp_string_free(char* s);

/* ---- graphs ---- */

/* Parses the line-oriented text format ("p psp <n> <m>", optional
 * "s <vertex>", m lines "a <tail> <head> <cost> <param> <weight>"). */
PSP_API psp_status psp_graph_parse(const char* text, psp_graph** out);

/* m distinct ordered pairs sampled uniformly; all arcs parameterized,
 * weight 1. Deterministic in seed. */
PSP_API psp_status psp_graph_random(int32_t n, int64_t m, int64_t cost_lo, int64_t cost_hi,
                                    uint64_t seed, psp_graph** out);

PSP_API psp_status psp_graph_serialize(const psp_graph* g, char** out);
PSP_API void psp_graph_free(psp_graph* g);
PSP_API int32_t psp_graph_n(const psp_graph* g); /* 0 when g is NULL */
PSP_API int64_t psp_graph_m(const psp_graph* g); /* 0 when g is NULL */

/* ---- parametric shortest paths ---- */

/* Full parametric run from lambda = -inf. The graph must carry a source.
 * dedup != 0 collapses runs of equal breakpoints. */
PSP_API psp_status psp_parametric_solve(const psp_graph* g, int dedup, psp_solution** out);

/* Breakpoint lines "<i> <lambda>", optional parent-log lines
 * "v <vertex> <lambda> <edge>", final line "lambda_star <value>". */
PSP_API psp_status psp_solution_dump(const psp_solution* sol, int include_log, char** out);

/* Audits the solution against an independent fixed-lambda oracle on the
 * graph it was solved on. Returns PSP_OK when every check passes,
 * PSP_ERR_CERTIFICATION_FAILED otherwise; *report is set either way. */
PSP_API psp_status psp_solution_certify(const psp_graph* g, const psp_solution* sol,
                                        char** report);

PSP_API int64_t psp_solution_breakpoints(const psp_solution* sol); /* count */
PSP_API psp_status psp_solution_lambda_star(const psp_solution* sol, char** out);
PSP_API void psp_solution_free(psp_solution* sol);

/* ---- minimum mean / ratio cycles ---- */

typedef enum psp_mmc_algo {
    PSP_MMC_PARAMETRIC = 0,
    PSP_MMC_KARP = 1,
    PSP_MMC_BRUTE = 2
} psp_mmc_algo;

/* Output: "lambda_star <value>" plus "cycle <arc ids>" when the method
 * produces one; an acyclic graph gives "lambda_star inf".
 *   ratio   != 0: minimize cost/weight instead of mean (not with KARP)
 *   scc     != 0: solve per strongly connected component, take the minimum
 *   certify != 0: PARAMETRIC only, without scc; audits the underlying
 *                 parametric run and returns PSP_ERR_CERTIFICATION_FAILED
 *                 (with the report appended to *out) when a check fails */
PSP_API psp_status psp_mmc(const psp_graph* g, psp_mmc_algo algo, int ratio, int scc,
                           int certify, char** out);

/* ---- minimum balance ---- */

/* Output: "pi <vertex> <value>" per vertex, "contractions <k>", one
 * "cycle <lambda> <arc ids>" line per contraction. check != 0 appends an
 * exhaustive subset audit (n <= 20): "check balanced" or a
 * "check violation ..." line with PSP_ERR_BALANCE_CHECK_FAILED. */
PSP_API psp_status psp_balance(const psp_graph* g, int check, char** out);

/* ---- benchmark harness ---- */

typedef enum psp_bench_mode { PSP_BENCH_MMC = 0, PSP_BENCH_BALANCE = 1 } psp_bench_mode;

/* points: "n:m,n:m,...". trials <= 0 selects the default rule max(n/2, 50).
 * *csv receives the trial table; *warnings (optional, may be NULL) receives
 * newline-separated trend warnings, empty when none fire. */
PSP_API psp_status psp_bench(psp_bench_mode mode, const char* points, int32_t trials,
                             uint64_t seed, char** csv, char** warnings);

/* Fraction of `samples` random graphs whose max degree exceeds
 * 8m/n + 2*log2(n). */
PSP_API psp_status psp_degree_check(int32_t n, int64_t m, int32_t samples, uint64_t seed,
                                    double* fraction);

#ifdef __cplusplus
}
#endif

#endif /* PSP_H */
