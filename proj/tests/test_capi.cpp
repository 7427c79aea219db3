#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "sfl.h"

#include <string>

namespace {

std::string take(char* s) {
    std::string out = s ? s : "";
    sfl_string_free(s);
    return out;
}

}  // namespace

TEST_CASE("equation handles") {
    sfl_equation* eq = nullptr;
    REQUIRE(sfl_equation_new_pq(2, 1, &eq) == SFL_OK);
    long long p = 0, q = 0;
    CHECK(sfl_equation_is_pq(eq, &p, &q) == 1);
    CHECK(p == 2);
    CHECK(q == 1);
    sfl_equation_free(eq);

    sfl_equation* bad = nullptr;
    CHECK(sfl_equation_new_pq(0, 1, &bad) == SFL_ERR_INVALID_ARGUMENT);
    CHECK(std::string(sfl_last_error()).find("positive") != std::string::npos);

    long long coeffs[] = {1, 1, -1, -1};
    sfl_equation* sidon = nullptr;
    REQUIRE(sfl_equation_new_linear(coeffs, 4, 0, &sidon) == SFL_OK);
    CHECK(sfl_equation_is_pq(sidon, nullptr, nullptr) == 0);
    sfl_equation_free(sidon);

    long long zero[] = {1, 0};
    CHECK(sfl_equation_new_linear(zero, 2, 0, &bad) == SFL_ERR_INVALID_ARGUMENT);
}

TEST_CASE("oracle through the C surface") {
    sfl_equation* eq = nullptr;
    REQUIRE(sfl_equation_new_pq(2, 1, &eq) == SFL_OK);

    long long mu = 0;
    CHECK(sfl_mu(eq, 6, nullptr, &mu) == SFL_OK);
    CHECK(mu == 4);

    char* f = nullptr;
    CHECK(sfl_count_free(eq, 4, nullptr, &f) == SFL_OK);
    CHECK(take(f) == "11");

    char* fmax = nullptr;
    CHECK(sfl_count_maximal(eq, 4, nullptr, &fmax) == SFL_OK);
    CHECK(take(fmax) == "3");

    char* with_min = nullptr;
    CHECK(sfl_count_with_min(eq, 10, 4, nullptr, &with_min) == SFL_OK);
    CHECK(take(with_min) == "64");

    long long elems[] = {3, 4, 5, 6};
    int free_flag = -1;
    CHECK(sfl_is_solution_free(eq, elems, 4, &free_flag) == SFL_OK);
    CHECK(free_flag == 1);
    long long conflict[] = {1, 3};
    CHECK(sfl_is_solution_free(eq, conflict, 2, &free_flag) == SFL_OK);
    CHECK(free_flag == 0);

    // budget errors surface as SFL_ERR_BUDGET
    CHECK(sfl_mu(eq, 65, nullptr, &mu) == SFL_ERR_BUDGET);
    sfl_budget tight;
    sfl_budget_default(&tight);
    tight.max_count_log2 = 5;
    CHECK(sfl_count_free(eq, 30, &tight, &f) == SFL_ERR_BUDGET);

    sfl_equation_free(eq);

    sfl_equation* e22 = nullptr;
    REQUIRE(sfl_equation_new_pq(2, 2, &e22) == SFL_OK);
    long long mu_star = 0;
    CHECK(sfl_mu_star(e22, 10, &mu_star) == SFL_OK);
    CHECK(mu_star == 3);
    sfl_equation_free(e22);
}

TEST_CASE("json front ends") {
    char* out = nullptr;
    REQUIRE(sfl_stats(2, 1, 12, 0, 0, nullptr, &out) == SFL_OK);
    auto stats = take(out);
    CHECK(stats.find("\"schema\": \"sfl/1\"") != std::string::npos);
    CHECK(stats.find("\"mu\": 8") != std::string::npos);
    CHECK(stats.find("\"f\": \"628\"") != std::string::npos);

    REQUIRE(sfl_stats(2, 1, 12, 0, 1, nullptr, &out) == SFL_OK);
    auto csv = take(out);
    CHECK(csv.find("p,q,n,mu,mu_star,f,f_max,elapsed_ms") == 0);

    REQUIRE(sfl_triples(2, 2, 5, 0, &out) == SFL_OK);
    auto tri = take(out);
    CHECK(tri.find("\"count\": 1") != std::string::npos);
    CHECK(tri.find("\"triples\"") != std::string::npos);

    REQUIRE(sfl_bound_report_json(2, 2, 36, &out) == SFL_OK);
    CHECK(take(out).find("thm15") != std::string::npos);

    REQUIRE(sfl_construct_json("msf2", 2, 1, 110, &out) == SFL_OK);
    auto msf2 = take(out);
    CHECK(msf2.find("\"triangle_count\": 20") != std::string::npos);
    CHECK(msf2.find("\"mis_ok\": true") != std::string::npos);

    CHECK(sfl_construct_json("msf6", 2, 2, 3, &out) == SFL_ERR_INFEASIBLE);
    CHECK(sfl_construct_json("bogus", 2, 2, 30, &out) == SFL_ERR_INVALID_ARGUMENT);
}

TEST_CASE("verify and sweep through the C surface") {
    char* list = nullptr;
    REQUIRE(sfl_campaign_list(&list) == SFL_OK);
    auto ids = take(list);
    CHECK(ids.find("fact32") != std::string::npos);
    CHECK(ids.find("msf7-sandwich") != std::string::npos);

    sfl_grid grid;
    sfl_grid_default(&grid);
    grid.n_lo = 1;
    grid.n_hi = 12;
    char* report = nullptr;
    int all_pass = 0;
    REQUIRE(sfl_verify_run("structure", &grid, nullptr, 1, &report, &all_pass) == SFL_OK);
    auto csv = take(report);
    CHECK(all_pass == 1);
    CHECK(csv.find("p,q,n,m,t,case") == 0);

    CHECK(sfl_verify_run("nope", &grid, nullptr, 1, &report, &all_pass) ==
          SFL_ERR_INVALID_ARGUMENT);

    char* sweep = nullptr;
    REQUIRE(sfl_sweep(2, 2, 1, 2, 10, 12, 1, &sweep) == SFL_OK);
    auto s = take(sweep);
    CHECK(s.find("p,q,n,mu_formula") == 0);
    CHECK(s.find("\n2,1,10,") != std::string::npos);

    char* per_m = nullptr;
    REQUIRE(sfl_sweep_per_m(2, 2, 1, 1, 20, 20, &per_m) == SFL_OK);
    auto pm = take(per_m);
    CHECK(pm.find("p,q,n,m,k,max_is,bound_case,bound_value_num,bound_value_den") == 0);
    CHECK(pm.find("2,1,20,5,1,10,") != std::string::npos);
}

TEST_CASE("version and error strings") {
    CHECK(std::string(sfl_version()) == "1.0.0");
    CHECK(sfl_mu(nullptr, 5, nullptr, nullptr) == SFL_ERR_INVALID_ARGUMENT);
    CHECK(std::string(sfl_last_error()).size() > 0);
}
