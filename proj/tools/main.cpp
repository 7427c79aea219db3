// Command-line front end for the solution-free set laboratory. Talks to the
// shared library exclusively through the C API in sfl.h.
//
// Exit codes: 0 success, 1 usage error, 2 budget exceeded / construction
// infeasible, 3 verification failures (partial results still printed).
#include "sfl.h"

#include "CLI11.hpp"

#include <cstdio>
#include <cstdlib>
#include <string>

namespace {

struct Range {
    long long lo = 0, hi = 0;
};

// "a..b" or a single value "a"; a lower bound of "q" (as in --p q..100)
// leaves lo at 0, which campaigns resolve to "from q" pointwise.
Range parse_range(const std::string& text) {
    Range r;
    auto pos = text.find("..");
    if (pos == std::string::npos) {
        r.lo = r.hi = std::stoll(text);
    } else {
        std::string lo = text.substr(0, pos);
        r.lo = (lo == "q") ? 0 : std::stoll(lo);
        r.hi = std::stoll(text.substr(pos + 2));
    }
    if (r.lo > r.hi) throw CLI::ValidationError("range", "empty range " + text);
    return r;
}

int print_result(sfl_status st, char* out, const char* op) {
    if (st == SFL_OK) {
        std::fputs(out, stdout);
        sfl_string_free(out);
        return 0;
    }
    if (st == SFL_ERR_BUDGET || st == SFL_ERR_INFEASIBLE) {
        std::printf("{\n  \"schema\": \"sfl/1\",\n  \"error\": \"%s\",\n  \"reason\": \"%s\"\n}\n",
                    st == SFL_ERR_BUDGET ? "budget" : "infeasible", sfl_last_error());
        return 2;
    }
    std::fprintf(stderr, "sfl %s: %s\n", op, sfl_last_error());
    return 1;
}

unsigned parse_fields(const std::string& csv) {
    if (csv.empty()) return 0;
    unsigned mask = 0;
    std::size_t start = 0;
    while (start <= csv.size()) {
        auto end = csv.find(',', start);
        std::string f = csv.substr(start, end == std::string::npos ? end : end - start);
        if (f == "mu") mask |= 1u;
        else if (f == "mu_star") mask |= 2u;
        else if (f == "f") mask |= 4u;
        else if (f == "f_max") mask |= 8u;
        else if (f == "per_min") mask |= 16u;
        else throw CLI::ValidationError("--fields", "unknown field " + f);
        if (end == std::string::npos) break;
        start = end + 1;
    }
    return mask;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"solution-free set laboratory"};
    app.require_subcommand(1);
    app.fallthrough();

    long long budget_ms = 0;
    app.add_option("--budget-ms", budget_ms, "wall-clock ceiling in milliseconds")
        ->envname("SFL_BUDGET_MS");

    std::string format = "json";
    app.add_option("--format", format, "output format")->check(CLI::IsMember({"json", "csv"}));

    // ---- stats ----
    auto* stats = app.add_subcommand("stats", "oracle values and formula bounds for (p, q, n)");
    long long s_p = 0, s_q = 0, s_n = 0;
    std::string s_fields;
    stats->add_option("--p", s_p, "coefficient p")->required();
    stats->add_option("--q", s_q, "coefficient q")->required();
    stats->add_option("--n", s_n, "ground set size")->required();
    stats->add_option("--fields", s_fields, "comma list: mu,mu_star,f,f_max,per_min");

    // ---- triples ----
    auto* triples = app.add_subcommand("triples", "enumerate the L-triples of px+qy=z in [n]");
    long long t_p = 0, t_q = 0, t_n = 0;
    triples->add_option("--p", t_p)->required();
    triples->add_option("--q", t_q)->required();
    triples->add_option("--n", t_n)->required();

    // ---- verify ----
    auto* verify = app.add_subcommand("verify", "run a theorem-verification campaign");
    std::string campaign;
    verify->add_option("campaign", campaign, "campaign id (see --list)")->required();
    std::string v_p, v_q, v_n, v_k;
    long long v_random = 0, v_jobs = 1;
    unsigned long long v_seed = 7;
    verify->add_option("--p", v_p, "p range a..b (claim-a/msf5 also accept q..b)");
    verify->add_option("--q", v_q, "q range a..b");
    verify->add_option("--n", v_n, "n range a..b");
    verify->add_option("--k", v_k, "k range a..b (claim-a)");
    verify->add_option("--random", v_random, "number of random instances");
    verify->add_option("--seed", v_seed, "seed for randomized campaigns");
    verify->add_option("--jobs", v_jobs, "parallel workers (output is identical for any value)");

    // ---- construct ----
    auto* construct = app.add_subcommand("construct", "build and verify a lower-bound construction");
    std::string kind;
    long long c_p = 0, c_q = 1, c_n = 0;
    construct->add_option("kind", kind, "msf2 or msf6")->required()
        ->check(CLI::IsMember({"msf2", "msf6"}));
    construct->add_option("--p", c_p)->required();
    construct->add_option("--q", c_q);
    construct->add_option("--n", c_n)->required();

    // ---- sweep ----
    auto* sweep = app.add_subcommand("sweep", "bound reports over a (p, q, n) grid");
    std::string w_p = "2..3", w_q = "1..3", w_n = "10..30";
    bool per_m = false;
    sweep->add_option("--p", w_p, "p range a..b");
    sweep->add_option("--q", w_q, "q range a..b");
    sweep->add_option("--n", w_n, "n range a..b");
    sweep->add_flag("--per-m", per_m, "per-m structure rows instead of bound reports");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    sfl_budget budget;
    sfl_budget_default(&budget);
    budget.wall_ms = budget_ms;
    const int fmt = (format == "csv") ? 1 : 0;

    try {
        if (*stats || *triples) {
            long long p = *stats ? s_p : t_p;
            long long q = *stats ? s_q : t_q;
            long long n = *stats ? s_n : t_n;
            if (p < 1 || q < 1 || n < 0) {
                std::fprintf(stderr, "sfl: p and q must be positive, n non-negative\n");
                return 1;
            }
            if (q > p) {
                // px+qy=z and qx+py=z have the same solution triples
                std::fprintf(stderr, "sfl: note: q > p, swapping to the canonical form p=%lld q=%lld\n",
                             q, p);
                std::swap(p, q);
            }
            if (*stats) {
                char* out = nullptr;
                auto st = sfl_stats(p, q, n, parse_fields(s_fields), fmt, &budget, &out);
                return print_result(st, out, "stats");
            }
            char* out = nullptr;
            auto st = sfl_triples(p, q, n, fmt, &out);
            return print_result(st, out, "triples");
        }
        if (*verify) {
            sfl_grid grid;
            sfl_grid_default(&grid);
            if (!v_p.empty()) { auto r = parse_range(v_p); grid.p_lo = r.lo; grid.p_hi = r.hi; }
            if (!v_q.empty()) { auto r = parse_range(v_q); grid.q_lo = r.lo; grid.q_hi = r.hi; }
            if (!v_n.empty()) { auto r = parse_range(v_n); grid.n_lo = r.lo; grid.n_hi = r.hi; }
            if (!v_k.empty()) { auto r = parse_range(v_k); grid.k_lo = r.lo; grid.k_hi = r.hi; }
            grid.random_count = v_random;
            grid.seed = v_seed;
            grid.jobs = static_cast<int>(v_jobs);
            char* out = nullptr;
            int all_pass = 0;
            auto st = sfl_verify_run(campaign.c_str(), &grid, &budget, fmt, &out, &all_pass);
            int code = print_result(st, out, "verify");
            if (code != 0) return code;
            return all_pass ? 0 : 3;
        }
        if (*construct) {
            char* out = nullptr;
            auto st = sfl_construct_json(kind.c_str(), c_p, c_q, c_n, &out);
            return print_result(st, out, "construct");
        }
        if (*sweep) {
            auto rp = parse_range(w_p), rq = parse_range(w_q), rn = parse_range(w_n);
            char* out = nullptr;
            sfl_status st;
            if (per_m)
                st = sfl_sweep_per_m(rp.lo, rp.hi, rq.lo, rq.hi, rn.lo, rn.hi, &out);
            else
                st = sfl_sweep(rp.lo, rp.hi, rq.lo, rq.hi, rn.lo, rn.hi, fmt, &out);
            return print_result(st, out, "sweep");
        }
    } catch (const CLI::ValidationError& e) {
        std::fprintf(stderr, "sfl: %s\n", e.what());
        return 1;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "sfl: %s\n", e.what());
        return 1;
    }
    return 1;
}
