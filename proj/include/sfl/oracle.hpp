// Ground-truth brute-force computations over [n] (n <= 64): the L-freeness
// test, mu(n), f(n), f_max(n), f(n,m), M(n) and mu*(n). Every quantity is
// computed by explicit search over the conflict system of non-trivial
// solution supports; nothing here depends on the closed-form bounds it is
// later checked against.
#pragma once

#include "sfl/equation.hpp"
#include "sfl/error.hpp"
#include "sfl/numeric.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <vector>

namespace sfl::oracle {

// Explicit resource limits. Exponential operations refuse work beyond these
// rather than hanging; a wall-clock ceiling of 0 means unlimited.
struct Budget {
    long long max_n_mu = 64;
    long long max_n_count = 64;
    long long max_count_log2 = 40;
    long long max_n_maximal = 48;
    long long wall_ms = 0;
};

// The conflict system of an equation restricted to [n]: one bitmask per
// value-support of a non-trivial solution (bit i-1 = element i). A set S is
// solution-free iff no mask is a subset of S.
struct ConflictSystem {
    long long n = 0;
    std::vector<std::uint64_t> masks;
    // completions[i] = for each mask containing element i+1, the mask with
    // that bit cleared. Element e extends a free set C iff no entry is <= C.
    std::vector<std::vector<std::uint64_t>> completions;

    static ConflictSystem build(const PqEquation& eq, long long n);
    static ConflictSystem build(const LinearEquation& eq, long long n);

    bool addable(std::uint64_t chosen, int element) const {
        for (std::uint64_t rest : completions[static_cast<std::size_t>(element - 1)])
            if ((rest & ~chosen) == 0) return false;
        return true;
    }
    bool is_free(std::uint64_t set_mask) const {
        for (std::uint64_t m : masks)
            if ((m & ~set_mask) == 0) return false;
        return true;
    }
};

bool is_solution_free(const PqEquation& eq, const std::set<long long>& s);
bool is_solution_free(const LinearEquation& eq, const std::set<long long>& s);

// Exact maximum size of an L-free subset of [n]. Branch and bound over the
// conflict system, seeded by a greedy descending scan (for px+qy=z the seed
// contains the interval [floor(n/(p+q))+1, n]), with a disjoint-conflict
// packing bound for pruning.
long long mu(const PqEquation& eq, long long n, const Budget& budget = {});
long long mu(const LinearEquation& eq, long long n, const Budget& budget = {});

// Exact maximum size of an L-free subset of [n] with minimum element m.
long long max_free_with_min(const PqEquation& eq, long long n, long long m,
                            const Budget& budget = {});

// f(n, L): number of L-free subsets of [n], empty set included.
BigInt count_solution_free(const PqEquation& eq, long long n, const Budget& budget = {});
BigInt count_solution_free(const LinearEquation& eq, long long n, const Budget& budget = {});

// f_max(n, L): number of maximal L-free subsets of [n]. Maximality of each
// candidate is verified against all single-element extensions.
BigInt count_maximal(const PqEquation& eq, long long n, const Budget& budget = {});
BigInt count_maximal(const LinearEquation& eq, long long n, const Budget& budget = {});
std::vector<std::vector<long long>> enumerate_maximal(const PqEquation& eq, long long n,
                                                      const Budget& budget = {});

// f(n, L, m): number of L-free subsets of [n] with minimum element m.
BigInt count_with_min(const PqEquation& eq, long long n, long long m,
                      const Budget& budget = {});

// M_L(n): elements of [n] lying in no L-triple, and mu*(n) = |M_L(n)|.
std::vector<long long> m_set(const PqEquation& eq, long long n);
long long mu_star(const PqEquation& eq, long long n);

struct StatsRecord {
    long long p = 0, q = 0, n = 0;
    std::optional<long long> mu;
    std::optional<long long> mu_star;
    std::optional<BigInt> f;
    std::optional<BigInt> f_max;
    std::optional<std::map<long long, BigInt>> per_min;
    long long elapsed_ms = 0;
};

enum StatsFields : unsigned {
    kStatsMu = 1u << 0,
    kStatsMuStar = 1u << 1,
    kStatsF = 1u << 2,
    kStatsFmax = 1u << 3,
    kStatsPerMin = 1u << 4,
    kStatsAll = 0x1F,
};

StatsRecord stats(long long p, long long q, long long n, unsigned fields = kStatsAll,
                  const Budget& budget = {});

}  // namespace sfl::oracle
