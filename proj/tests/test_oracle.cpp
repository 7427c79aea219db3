#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "sfl/oracle.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <set>
#include <tuple>
#include <vector>

using namespace sfl;
using oracle::Budget;

namespace {

// Test-side reference: full power-set scan with its own triple generation,
// independent of the conflict-system search it checks.
struct PowerSetScan {
    long long n;
    std::vector<std::uint64_t> masks;

    PowerSetScan(long long p, long long q, long long n_) : n(n_) {
        for (long long x = 1; p * x + q <= n; ++x)
            for (long long y = 1; p * x + q * y <= n; ++y) {
                long long z = p * x + q * y;
                masks.push_back((1ULL << (x - 1)) | (1ULL << (y - 1)) | (1ULL << (z - 1)));
            }
    }

    bool free_set(std::uint64_t s) const {
        for (std::uint64_t m : masks)
            if ((m & ~s) == 0) return false;
        return true;
    }

    // (f, f_max, mu)
    std::tuple<long long, long long, long long> scan() const {
        long long f = 0, fmax = 0, mu = 0;
        for (std::uint64_t s = 0; s < (1ULL << n); ++s) {
            if (!free_set(s)) continue;
            ++f;
            mu = std::max<long long>(mu, __builtin_popcountll(s));
            bool maximal = true;
            for (long long e = 1; e <= n && maximal; ++e)
                if (!(s >> (e - 1) & 1) && free_set(s | (1ULL << (e - 1)))) maximal = false;
            if (maximal) ++fmax;
        }
        return {f, fmax, mu};
    }
};

}  // namespace

TEST_CASE("golden values for 2x+y=z and 2x+2y=z") {
    PqEquation e21(2, 1), e22(2, 2);
    CHECK(oracle::count_solution_free(e21, 4) == 11);
    CHECK(oracle::count_maximal(e21, 4) == 3);
    CHECK(oracle::mu(e21, 6) == 4);
    CHECK(oracle::mu(e21, 12) == 8);
    CHECK(oracle::mu_star(e22, 10) == 3);
    CHECK(oracle::m_set(e22, 10) == std::vector<long long>{5, 7, 9});
    CHECK(oracle::m_set(e21, 6).empty());
    CHECK(oracle::count_solution_free(e21, 0) == 1);
    CHECK(oracle::count_solution_free(e22, 3) == 8);
    CHECK(oracle::mu(e21, 0) == 0);

    auto maximal21 = oracle::enumerate_maximal(e21, 4);
    std::set<std::vector<long long>> m21(maximal21.begin(), maximal21.end());
    CHECK(m21 == std::set<std::vector<long long>>{{1, 2}, {1, 4}, {2, 3, 4}});
    auto maximal22 = oracle::enumerate_maximal(e22, 4);
    std::set<std::vector<long long>> m22(maximal22.begin(), maximal22.end());
    CHECK(m22 == std::set<std::vector<long long>>{{1, 2, 3}, {2, 3, 4}});
    CHECK(oracle::count_maximal(e21, 2) == 1);
}

TEST_CASE("m_set when no triple fits") {
    PqEquation eq(5, 4);
    CHECK(oracle::m_set(eq, 8) == std::vector<long long>{1, 2, 3, 4, 5, 6, 7, 8});
    CHECK(oracle::mu_star(eq, 8) == 8);
}

TEST_CASE("is_solution_free examples") {
    PqEquation eq(2, 1);
    CHECK(oracle::is_solution_free(eq, {3, 4, 5, 6}));
    CHECK_FALSE(oracle::is_solution_free(eq, {1, 3}));
    CHECK(oracle::is_solution_free(eq, {}));
    LinearEquation sidon({1, 1, -1, -1}, 0);
    CHECK_FALSE(oracle::is_solution_free(sidon, {1, 2, 3, 4}));  // 1+4 = 2+3
    CHECK(oracle::is_solution_free(sidon, {1, 2, 4}));
}

TEST_CASE("count_with_min examples") {
    PqEquation eq(2, 1);
    CHECK(oracle::count_with_min(eq, 10, 4) == 64);  // 2^(n-m), interval regime
    CHECK(oracle::count_with_min(eq, 4, 3) == 2);
    CHECK(oracle::count_with_min(eq, 4, 4) == 1);
}

TEST_CASE("oracle agrees with full power-set scan") {
    for (auto [p, q] : std::vector<std::pair<long long, long long>>{{2, 1}, {2, 2}, {3, 2}}) {
        PqEquation eq(p, q);
        for (long long n = 0; n <= 14; ++n) {
            PowerSetScan ref(p, q, n);
            auto [f, fmax, mu] = ref.scan();
            CAPTURE(p); CAPTURE(q); CAPTURE(n);
            CHECK(oracle::count_solution_free(eq, n) == f);
            CHECK(oracle::count_maximal(eq, n) == fmax);
            CHECK(oracle::mu(eq, n) == mu);
        }
    }
    // one larger spot check
    PowerSetScan ref(2, 1, 20);
    auto [f, fmax, mu] = ref.scan();
    PqEquation eq(2, 1);
    CHECK(oracle::count_solution_free(eq, 20) == f);
    CHECK(oracle::count_maximal(eq, 20) == fmax);
    CHECK(oracle::mu(eq, 20) == mu);
}

TEST_CASE("per-min counts partition f, minus the empty set") {
    for (auto [p, q] : std::vector<std::pair<long long, long long>>{{2, 1}, {3, 2}}) {
        PqEquation eq(p, q);
        for (long long n = 1; n <= 16; ++n) {
            BigInt sum = 0;
            for (long long m = 1; m <= n; ++m) sum += oracle::count_with_min(eq, n, m);
            CHECK(sum + 1 == oracle::count_solution_free(eq, n));
        }
    }
}

TEST_CASE("interval lower bound and basic inequalities") {
    for (auto [p, q] : std::vector<std::pair<long long, long long>>{{2, 1}, {2, 2}, {4, 2}}) {
        PqEquation eq(p, q);
        for (long long n = 1; n <= 18; ++n) {
            auto f = oracle::count_solution_free(eq, n);
            auto fmax = oracle::count_maximal(eq, n);
            long long mu = oracle::mu(eq, n);
            long long mu_star = oracle::mu_star(eq, n);
            CHECK(f >= pow2(static_cast<unsigned long long>(n - n / (p + q))));
            CHECK(f >= pow2(static_cast<unsigned long long>(mu_star)));
            CHECK(f >= fmax);
            CHECK(fmax >= 1);
            CHECK(mu <= n);
            CHECK(mu_star <= mu);
        }
    }
}

TEST_CASE("maximal sets re-verify: free and not extendable") {
    PqEquation eq(2, 2);
    for (long long n : {6, 9, 12}) {
        for (const auto& s : oracle::enumerate_maximal(eq, n)) {
            std::set<long long> cur(s.begin(), s.end());
            CHECK(oracle::is_solution_free(eq, cur));
            for (long long e = 1; e <= n; ++e) {
                if (cur.count(e)) continue;
                auto ext = cur;
                ext.insert(e);
                // extension must introduce a triple inside [n]
                bool still_free = oracle::is_solution_free(eq, ext);
                CHECK_FALSE(still_free);
            }
        }
    }
}

TEST_CASE("maximal enumeration emits no duplicates") {
    PqEquation eq(2, 1);
    auto all = oracle::enumerate_maximal(eq, 14);
    std::set<std::vector<long long>> dedup(all.begin(), all.end());
    CHECK(dedup.size() == all.size());
}

TEST_CASE("generic linear equation oracle: 3x = z") {
    LinearEquation eq({3, -1}, 0);
    // conflict pairs in [9]: {1,3}, {2,6}, {3,9}
    CHECK(oracle::mu(eq, 9) == 7);
    LinearEquation four({1, 1, 1, -1}, 0);
    CHECK(oracle::mu(four, 12) == 12 - 12 / 3);
}

TEST_CASE("budgets fail loudly") {
    PqEquation eq(2, 1);
    CHECK_THROWS_AS(oracle::mu(eq, 65), BudgetExceeded);
    Budget tight;
    tight.max_count_log2 = 10;
    CHECK_THROWS_AS(oracle::count_solution_free(eq, 30, tight), BudgetExceeded);
    Budget wall;
    wall.wall_ms = 1;
    CHECK_THROWS_AS(oracle::count_solution_free(eq, 34, wall), BudgetExceeded);
    Budget small_max;
    small_max.max_n_maximal = 10;
    CHECK_THROWS_AS(oracle::count_maximal(eq, 20, small_max), BudgetExceeded);
}

TEST_CASE("stats record assembles requested fields") {
    auto rec = oracle::stats(2, 1, 12);
    REQUIRE(rec.mu);
    REQUIRE(rec.f);
    REQUIRE(rec.f_max);
    REQUIRE(rec.mu_star);
    REQUIRE(rec.per_min);
    CHECK(*rec.mu == 8);
    CHECK(rec.p == 2);
    BigInt sum = 0;
    for (auto& [m, c] : *rec.per_min) sum += c;
    CHECK(sum + 1 == *rec.f);
    CHECK(*rec.f >= pow2(static_cast<unsigned long long>(*rec.mu_star)));

    auto only_mu = oracle::stats(2, 2, 10, oracle::kStatsMuStar);
    CHECK(only_mu.mu_star);
    CHECK_FALSE(only_mu.f);
    CHECK(*only_mu.mu_star == 3);
}
