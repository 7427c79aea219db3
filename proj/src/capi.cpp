#include "sfl.h"

#include "sfl/bounds.hpp"
#include "sfl/equation.hpp"
#include "sfl/error.hpp"
#include "sfl/linkgraph.hpp"
#include "sfl/oracle.hpp"
#include "sfl/pathgraph.hpp"
#include "sfl/serialize.hpp"
#include "sfl/verify.hpp"

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <optional>
#include <set>
#include <string>
#include <variant>

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

sfl_status fail(sfl_status code, const char* what) {
    g_last_error = what;
    return code;
}

template <typename Fn>
sfl_status guarded(Fn&& fn) {
    try {
        return fn();
    } catch (const sfl::BudgetExceeded& e) {
        return fail(SFL_ERR_BUDGET, e.what());
    } catch (const sfl::Infeasible& e) {
        return fail(SFL_ERR_INFEASIBLE, e.what());
    } catch (const std::invalid_argument& e) {
        return fail(SFL_ERR_INVALID_ARGUMENT, e.what());
    } catch (const std::exception& e) {
        return fail(SFL_ERR_INTERNAL, e.what());
    }
}

sfl::oracle::Budget to_budget(const sfl_budget* b) {
    sfl::oracle::Budget out;
    if (b) {
        out.max_n_mu = b->max_n_mu;
        out.max_n_count = b->max_n_count;
        out.max_count_log2 = b->max_count_log2;
        out.max_n_maximal = b->max_n_maximal;
        out.wall_ms = b->wall_ms;
    }
    return out;
}

sfl::verify::Grid to_grid(const sfl_grid* g) {
    sfl::verify::Grid out;
    if (g) {
        out.p_lo = g->p_lo;
        out.p_hi = g->p_hi;
        out.q_lo = g->q_lo;
        out.q_hi = g->q_hi;
        out.n_lo = g->n_lo;
        out.n_hi = g->n_hi;
        out.k_lo = g->k_lo;
        out.k_hi = g->k_hi;
        out.random_count = g->random_count;
        out.seed = g->seed;
        out.jobs = g->jobs;
    }
    return out;
}

}  // namespace

struct sfl_equation {
    std::optional<sfl::PqEquation> pq;
    std::optional<sfl::LinearEquation> linear;
};

extern "C" {

const char* sfl_version(void) { return "1.0.0"; }

const char* sfl_last_error(void) { return g_last_error.c_str(); }

void sfl_string_free(char* s) { std::free(s); }

sfl_status sfl_equation_new_pq(long long p, long long q, sfl_equation** out) {
    if (!out) return fail(SFL_ERR_INVALID_ARGUMENT, "null output pointer");
    return guarded([&] {
        auto* eq = new sfl_equation;
        eq->pq = sfl::PqEquation(p, q);
        *out = eq;
        return SFL_OK;
    });
}

sfl_status sfl_equation_new_linear(const long long* coeffs, size_t k, long long constant,
                                   sfl_equation** out) {
    if (!out || !coeffs) return fail(SFL_ERR_INVALID_ARGUMENT, "null pointer");
    return guarded([&] {
        auto* eq = new sfl_equation;
        eq->linear = sfl::LinearEquation(std::vector<long long>(coeffs, coeffs + k), constant);
        *out = eq;
        return SFL_OK;
    });
}

void sfl_equation_free(sfl_equation* eq) { delete eq; }

int sfl_equation_is_pq(const sfl_equation* eq, long long* p, long long* q) {
    if (!eq || !eq->pq) return 0;
    if (p) *p = eq->pq->p;
    if (q) *q = eq->pq->q;
    return 1;
}

void sfl_budget_default(sfl_budget* out) {
    if (!out) return;
    sfl::oracle::Budget d;
    out->max_n_mu = d.max_n_mu;
    out->max_n_count = d.max_n_count;
    out->max_count_log2 = d.max_count_log2;
    out->max_n_maximal = d.max_n_maximal;
    out->wall_ms = d.wall_ms;
}

sfl_status sfl_is_solution_free(const sfl_equation* eq, const long long* elems, size_t len,
                                int* out) {
    if (!eq || !out || (!elems && len)) return fail(SFL_ERR_INVALID_ARGUMENT, "null pointer");
    return guarded([&] {
        std::set<long long> s(elems, elems + len);
        bool free = eq->pq ? sfl::oracle::is_solution_free(*eq->pq, s)
                           : sfl::oracle::is_solution_free(*eq->linear, s);
        *out = free ? 1 : 0;
        return SFL_OK;
    });
}

sfl_status sfl_mu(const sfl_equation* eq, long long n, const sfl_budget* budget,
                  long long* out) {
    if (!eq || !out) return fail(SFL_ERR_INVALID_ARGUMENT, "null pointer");
    return guarded([&] {
        *out = eq->pq ? sfl::oracle::mu(*eq->pq, n, to_budget(budget))
                      : sfl::oracle::mu(*eq->linear, n, to_budget(budget));
        return SFL_OK;
    });
}

sfl_status sfl_mu_star(const sfl_equation* eq, long long n, long long* out) {
    if (!eq || !out) return fail(SFL_ERR_INVALID_ARGUMENT, "null pointer");
    if (!eq->pq) return fail(SFL_ERR_INVALID_ARGUMENT, "mu_star requires a px+qy=z equation");
    return guarded([&] {
        *out = sfl::oracle::mu_star(*eq->pq, n);
        return SFL_OK;
    });
}

sfl_status sfl_count_free(const sfl_equation* eq, long long n, const sfl_budget* budget,
                          char** decimal_out) {
    if (!eq || !decimal_out) return fail(SFL_ERR_INVALID_ARGUMENT, "null pointer");
    return guarded([&] {
        auto v = eq->pq ? sfl::oracle::count_solution_free(*eq->pq, n, to_budget(budget))
                        : sfl::oracle::count_solution_free(*eq->linear, n, to_budget(budget));
        *decimal_out = dup_string(v.str());
        return SFL_OK;
    });
}

sfl_status sfl_count_maximal(const sfl_equation* eq, long long n, const sfl_budget* budget,
                             char** decimal_out) {
    if (!eq || !decimal_out) return fail(SFL_ERR_INVALID_ARGUMENT, "null pointer");
    return guarded([&] {
        auto v = eq->pq ? sfl::oracle::count_maximal(*eq->pq, n, to_budget(budget))
                        : sfl::oracle::count_maximal(*eq->linear, n, to_budget(budget));
        *decimal_out = dup_string(v.str());
        return SFL_OK;
    });
}

sfl_status sfl_count_with_min(const sfl_equation* eq, long long n, long long m,
                              const sfl_budget* budget, char** decimal_out) {
    if (!eq || !decimal_out) return fail(SFL_ERR_INVALID_ARGUMENT, "null pointer");
    if (!eq->pq)
        return fail(SFL_ERR_INVALID_ARGUMENT, "count_with_min requires a px+qy=z equation");
    return guarded([&] {
        auto v = sfl::oracle::count_with_min(*eq->pq, n, m, to_budget(budget));
        *decimal_out = dup_string(v.str());
        return SFL_OK;
    });
}

sfl_status sfl_stats(long long p, long long q, long long n, unsigned fields, int format,
                     const sfl_budget* budget, char** out) {
    if (!out) return fail(SFL_ERR_INVALID_ARGUMENT, "null pointer");
    return guarded([&] {
        unsigned mask = fields ? fields : sfl::oracle::kStatsAll;
        auto rec = sfl::oracle::stats(p, q, n, mask, to_budget(budget));
        if (format == 1) {
            *out = dup_string(sfl::serialize::stats_csv(rec));
            return SFL_OK;
        }
        auto j = sfl::serialize::stats_json(rec);
        if (p >= q && p >= 2)
            j["bounds"] = sfl::serialize::bound_report_json(sfl::bounds::bound_report(p, q, n));
        *out = dup_string(j.dump(2) + "\n");
        return SFL_OK;
    });
}

sfl_status sfl_triples(long long p, long long q, long long n, int format, char** out) {
    if (!out) return fail(SFL_ERR_INVALID_ARGUMENT, "null pointer");
    return guarded([&] {
        sfl::PqEquation eq(p, q);
        auto triples = sfl::l_triples(eq, n);
        if (format == 1)
            *out = dup_string(sfl::serialize::triples_csv(triples));
        else
            *out = dup_string(sfl::serialize::triples_json(eq, n, triples).dump(2) + "\n");
        return SFL_OK;
    });
}

sfl_status sfl_bound_report_json(long long p, long long q, long long n, char** json_out) {
    if (!json_out) return fail(SFL_ERR_INVALID_ARGUMENT, "null pointer");
    return guarded([&] {
        auto rep = sfl::bounds::bound_report(p, q, n);
        *json_out = dup_string(sfl::serialize::bound_report_json(rep).dump(2) + "\n");
        return SFL_OK;
    });
}

sfl_status sfl_construct_json(const char* kind, long long p, long long q, long long n,
                              char** json_out) {
    if (!kind || !json_out) return fail(SFL_ERR_INVALID_ARGUMENT, "null pointer");
    return guarded([&]() -> sfl_status {
        std::string k = kind;
        if (k == "msf2") {
            auto c = sfl::linkgraph::msf2_construction(p, n);
            *json_out = dup_string(sfl::serialize::msf2_json(c).dump(2) + "\n");
            return SFL_OK;
        }
        if (k == "msf6") {
            auto c = sfl::linkgraph::msf6_construction(p, q, n);
            *json_out = dup_string(sfl::serialize::msf6_json(c).dump(2) + "\n");
            return SFL_OK;
        }
        return fail(SFL_ERR_INVALID_ARGUMENT, "construct kind must be msf2 or msf6");
    });
}

void sfl_grid_default(sfl_grid* out) {
    if (!out) return;
    sfl::verify::Grid d;
    *out = sfl_grid{};
    out->seed = d.seed;
    out->jobs = d.jobs;
}

sfl_status sfl_campaign_list(char** out) {
    if (!out) return fail(SFL_ERR_INVALID_ARGUMENT, "null pointer");
    std::string all;
    for (const auto& id : sfl::verify::campaign_ids()) {
        all += id;
        all += '\n';
    }
    *out = dup_string(all);
    return SFL_OK;
}

sfl_status sfl_verify_run(const char* campaign, const sfl_grid* grid,
                          const sfl_budget* budget, int format, char** report_out,
                          int* all_pass) {
    if (!campaign || !report_out) return fail(SFL_ERR_INVALID_ARGUMENT, "null pointer");
    return guarded([&] {
        auto rep = sfl::verify::run_campaign(campaign, to_grid(grid), to_budget(budget));
        *report_out = dup_string(format == 1 ? sfl::verify::report_csv(rep)
                                             : sfl::verify::report_json(rep));
        if (all_pass) *all_pass = rep.all_pass ? 1 : 0;
        return SFL_OK;
    });
}

sfl_status sfl_sweep(long long p_lo, long long p_hi, long long q_lo, long long q_hi,
                     long long n_lo, long long n_hi, int format, char** out) {
    if (!out) return fail(SFL_ERR_INVALID_ARGUMENT, "null pointer");
    return guarded([&] {
        std::string csv = sfl::serialize::bound_report_csv_header();
        sfl::serialize::json rows = sfl::serialize::json::array();
        for (long long p = p_lo; p <= p_hi; ++p)
            for (long long q = std::max(1LL, q_lo); q <= std::min(q_hi, p); ++q)
                for (long long n = n_lo; n <= n_hi; ++n) {
                    auto rep = sfl::bounds::bound_report(p, q, n);
                    if (format == 1)
                        csv += sfl::serialize::bound_report_csv_row(rep);
                    else
                        rows.push_back(sfl::serialize::bound_report_json(rep));
                }
        if (format == 1) {
            *out = dup_string(csv);
        } else {
            sfl::serialize::json j;
            j["schema"] = "sfl/1";
            j["reports"] = rows;
            *out = dup_string(j.dump(2) + "\n");
        }
        return SFL_OK;
    });
}

sfl_status sfl_sweep_per_m(long long p_lo, long long p_hi, long long q_lo, long long q_hi,
                           long long n_lo, long long n_hi, char** out) {
    if (!out) return fail(SFL_ERR_INVALID_ARGUMENT, "null pointer");
    return guarded([&] {
        std::string csv = "p,q,n,m,k,max_is,bound_case,bound_value_num,bound_value_den\n";
        for (long long p = p_lo; p <= p_hi; ++p)
            for (long long q = std::max(1LL, q_lo); q <= std::min(q_hi, p); ++q)
                for (long long n = n_lo; n <= n_hi; ++n)
                    for (long long m = 1; m <= n; ++m) {
                        auto d = sfl::pathgraph::decompose(p, q, n, m);
                        long long max_is = sfl::pathgraph::max_is_gm(p, q, n, m);
                        long long t = n / (p + q) - m;
                        std::string case_id = "-", num = "-", den = "-";
                        if (t >= 0) {
                            auto sb = sfl::pathgraph::structure_bound(p, q, n, t);
                            case_id = std::to_string(sb.case_id);
                            num = sb.bound.num().str();
                            den = sb.bound.den().str();
                        }
                        csv += std::to_string(p) + "," + std::to_string(q) + "," +
                               std::to_string(n) + "," + std::to_string(m) + "," +
                               std::to_string(d.k) + "," + std::to_string(max_is) + "," +
                               case_id + "," + num + "," + den + "\n";
                    }
        *out = dup_string(csv);
        return SFL_OK;
    });
}

}  // extern "C"
