/*
 * C API for the solution-free set laboratory.
 *
 * Conventions:
 *   - every function returns an sfl_status; out-parameters are written only
 *     on SFL_OK,
 *   - strings returned through char** are heap-allocated; release them with
 *     sfl_string_free,
 *   - sfl_last_error() describes the most recent failure on the calling
 *     thread,
 *   - counts that can exceed 64 bits are returned as decimal strings,
 *   - a null sfl_budget* means default limits; wall_ms = 0 means no
 *     wall-clock ceiling.
 */
#ifndef SFL_H
#define SFL_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum sfl_status {
    SFL_OK = 0,
    SFL_ERR_INVALID_ARGUMENT = 1,
    SFL_ERR_BUDGET = 2,
    SFL_ERR_INFEASIBLE = 3,
    SFL_ERR_INTERNAL = 4
} sfl_status;

const char* sfl_version(void);
const char* sfl_last_error(void);
void sfl_string_free(char* s);

/* ---- equations -------------------------------------------------------- */

typedef struct sfl_equation sfl_equation; /* opaque */

/* px + qy = z */
sfl_status sfl_equation_new_pq(long long p, long long q, sfl_equation** out);
/* a_1 x_1 + ... + a_k x_k = b, all a_i non-zero, k >= 2 */
sfl_status sfl_equation_new_linear(const long long* coeffs, size_t k, long long constant,
                                   sfl_equation** out);
void sfl_equation_free(sfl_equation* eq);
/* 1 if the handle holds a px+qy=z equation; p/q written when non-null */
int sfl_equation_is_pq(const sfl_equation* eq, long long* p, long long* q);

/* ---- budgets ----------------------------------------------------------- */

typedef struct sfl_budget {
    long long max_n_mu;
    long long max_n_count;
    long long max_count_log2;
    long long max_n_maximal;
    long long wall_ms;
} sfl_budget;

void sfl_budget_default(sfl_budget* out);

/* ---- oracle ------------------------------------------------------------ */

sfl_status sfl_is_solution_free(const sfl_equation* eq, const long long* elems, size_t len,
                                int* out);
sfl_status sfl_mu(const sfl_equation* eq, long long n, const sfl_budget* budget,
                  long long* out);
sfl_status sfl_mu_star(const sfl_equation* eq, long long n, long long* out);
sfl_status sfl_count_free(const sfl_equation* eq, long long n, const sfl_budget* budget,
                          char** decimal_out);
sfl_status sfl_count_maximal(const sfl_equation* eq, long long n, const sfl_budget* budget,
                             char** decimal_out);
sfl_status sfl_count_with_min(const sfl_equation* eq, long long n, long long m,
                              const sfl_budget* budget, char** decimal_out);

/* ---- JSON front ends (documents carry "schema": "sfl/1") ---------------- */

/* fields: bitwise or of 1=mu, 2=mu_star, 4=f, 8=f_max, 16=per_min; 0 = all.
 * format: 0 = JSON (includes the formula-bound report), 1 = CSV (scalars only). */
sfl_status sfl_stats(long long p, long long q, long long n, unsigned fields, int format,
                     const sfl_budget* budget, char** out);
sfl_status sfl_triples(long long p, long long q, long long n, int format, char** out);
sfl_status sfl_bound_report_json(long long p, long long q, long long n, char** json_out);
/* kind: "msf2" (q = 1 triangle construction) or "msf6" (induced matching) */
sfl_status sfl_construct_json(const char* kind, long long p, long long q, long long n,
                              char** json_out);

/* ---- verification campaigns --------------------------------------------- */

typedef struct sfl_grid {
    long long p_lo, p_hi;   /* 0 = campaign default */
    long long q_lo, q_hi;
    long long n_lo, n_hi;
    long long k_lo, k_hi;
    long long random_count;
    unsigned long long seed;
    int jobs;
} sfl_grid;

void sfl_grid_default(sfl_grid* out);

/* newline-separated campaign identifiers */
sfl_status sfl_campaign_list(char** out);

/* format: 0 = JSON, 1 = CSV. all_pass written when non-null. */
sfl_status sfl_verify_run(const char* campaign, const sfl_grid* grid,
                          const sfl_budget* budget, int format, char** report_out,
                          int* all_pass);

/* one bound report per (p, q, n) grid point; format as above */
sfl_status sfl_sweep(long long p_lo, long long p_hi, long long q_lo, long long q_hi,
                     long long n_lo, long long n_hi, int format, char** out);
/* per-m rows: p,q,n,m,k,max_is,bound_case,bound_value_num,bound_value_den (CSV only) */
sfl_status sfl_sweep_per_m(long long p_lo, long long p_hi, long long q_lo, long long q_hi,
                           long long n_lo, long long n_hi, char** out);

#ifdef __cplusplus
}
#endif

#endif /* SFL_H */
