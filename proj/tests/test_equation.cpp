#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "sfl/equation.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <set>

using namespace sfl;

namespace {

// Reference triviality test: enumerate all set partitions of [k] and look
// for one with equal values inside every class and zero coefficient sum in
// every class. This is the definition the fast class-sum criterion must match.
bool trivial_by_partition_search(const std::vector<long long>& coeffs,
                                 const std::vector<long long>& x) {
    std::size_t k = coeffs.size();
    std::vector<int> cls(k, 0);
    // restricted growth strings enumerate set partitions exactly once
    auto valid = [&](int classes) {
        for (int c = 0; c < classes; ++c) {
            long long sum = 0;
            long long value = -1;
            for (std::size_t i = 0; i < k; ++i) {
                if (cls[i] != c) continue;
                if (value == -1) value = x[i];
                if (x[i] != value) return false;
                sum += coeffs[i];
            }
            if (sum != 0) return false;
        }
        return true;
    };
    std::function<bool(std::size_t, int)> rec = [&](std::size_t i, int used) {
        if (i == k) return valid(used);
        for (int c = 0; c <= used; ++c) {
            cls[i] = c;
            if (rec(i + 1, std::max(used, c + 1))) return true;
        }
        return false;
    };
    return rec(0, 0);
}

std::set<LTriple> triple_set(const PqEquation& eq, long long n) {
    auto v = l_triples(eq, n);
    return {v.begin(), v.end()};
}

}  // namespace

TEST_CASE("linear equation invariants") {
    CHECK_THROWS_AS(LinearEquation({1}, 0), std::invalid_argument);
    CHECK_THROWS_AS(LinearEquation({1, 0, -1}, 0), std::invalid_argument);
    LinearEquation sidon({1, 1, -1, -1}, 0);
    CHECK(sidon.homogeneous());
    CHECK(sidon.translation_invariant());
    LinearEquation sumfree({1, 1, -1}, 0);
    CHECK(sumfree.homogeneous());
    CHECK_FALSE(sumfree.translation_invariant());
    LinearEquation shifted({1, 1}, 4);
    CHECK_FALSE(shifted.homogeneous());
}

TEST_CASE("pq equation flags and gcd") {
    PqEquation e(4, 2);
    CHECK(e.gcd_u == 2);
    CHECK(e.p_ge_q);
    CHECK(e.p_ge_2);
    PqEquation swapped(1, 2);  // recorded, not rejected
    CHECK_FALSE(swapped.p_ge_q);
    CHECK_FALSE(swapped.p_ge_2);
    CHECK_THROWS_AS(PqEquation(0, 1), std::invalid_argument);
}

TEST_CASE("triviality: class-sum criterion on known cases") {
    LinearEquation sidon({1, 1, -1, -1}, 0);
    CHECK(is_trivial_solution(sidon, {3, 5, 3, 5}));
    CHECK(is_trivial_solution(sidon, {2, 2, 2, 2}));
    CHECK_FALSE(is_trivial_solution(sidon, {1, 4, 2, 3}));

    LinearEquation sumfree({1, 1, -1}, 0);
    CHECK_FALSE(is_trivial_solution(sumfree, {2, 2, 4}));

    LinearEquation eq21({2, 1, -1}, 0);
    CHECK_FALSE(is_trivial_solution(eq21, {1, 1, 3}));

    CHECK_THROWS_AS(is_trivial_solution(sumfree, {1, 2}), std::invalid_argument);
}

TEST_CASE("triviality: class-sum criterion equals partition search") {
    std::mt19937_64 rng(20240601);
    std::uniform_int_distribution<int> klen(2, 6), coef(-4, 4), val(1, 5);
    for (int iter = 0; iter < 1000; ++iter) {
        std::size_t k = static_cast<std::size_t>(klen(rng));
        std::vector<long long> a(k), x(k);
        for (auto& c : a) {
            do c = coef(rng); while (c == 0);
        }
        long long b = 0;
        for (std::size_t i = 0; i < k; ++i) {
            x[i] = val(rng);
            b += a[i] * x[i];
        }
        LinearEquation eq(a, b);  // satisfied by construction
        CHECK(is_trivial_solution(eq, x) == trivial_by_partition_search(a, x));
    }
}

TEST_CASE("enumerate_solutions examples") {
    LinearEquation eq21({2, 1, -1}, 0);
    std::vector<std::vector<long long>> want{{1, 1, 3}, {1, 2, 4}};
    CHECK(enumerate_solutions(eq21, 4) == want);

    LinearEquation sumfree({1, 1, -1}, 0);
    CHECK(enumerate_solutions(sumfree, 2) == std::vector<std::vector<long long>>{{1, 1, 2}});

    LinearEquation sidon({1, 1, -1, -1}, 0);
    CHECK(enumerate_solutions(sidon, 2).empty());  // all solutions in [2]^4 are trivial
}

TEST_CASE("enumerate_solutions is lexicographic and exact") {
    LinearEquation eq({3, 2, -1}, 0);
    auto sols = enumerate_solutions(eq, 12);
    CHECK(std::is_sorted(sols.begin(), sols.end()));
    for (const auto& s : sols) {
        CHECK(3 * s[0] + 2 * s[1] - s[2] == 0);
        CHECK_FALSE(is_trivial_solution(eq, s));
    }
}

TEST_CASE("enumerate_solutions budget") {
    LinearEquation eq({1, 1, 1, -1}, 0);
    CHECK_THROWS_AS(enumerate_solutions(eq, 100'000), BudgetExceeded);
}

TEST_CASE("l_triples examples") {
    std::set<LTriple> want{{1, 1, 3}, {1, 2, 4}, {1, 2, 5}, {1, 3, 5}, {1, 4, 6}, {2, 2, 6}};
    CHECK(triple_set(PqEquation(2, 1), 6) == want);
    CHECK(triple_set(PqEquation(2, 2), 5) == std::set<LTriple>{{1, 1, 4}});
    CHECK(triple_set(PqEquation(3, 2), 4).empty());
}

TEST_CASE("l_triples properties: monotone in n, never {x,x,x}") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long long> pd(1, 6), nd(1, 40);
    for (int iter = 0; iter < 60; ++iter) {
        long long p = pd(rng), q = pd(rng), n = nd(rng);
        PqEquation eq(p, q);
        auto small = triple_set(eq, n);
        auto big = triple_set(eq, n + 1);
        CHECK(std::includes(big.begin(), big.end(), small.begin(), small.end()));
        for (const auto& t : big) {
            CHECK_FALSE((t.v[0] == t.v[1] && t.v[1] == t.v[2]));
            CHECK(t.v[2] <= n + 1);
        }
    }
}
