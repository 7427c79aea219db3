// Linear equations a_1 x_1 + ... + a_k x_k = b over the positive integers,
// the triviality test for their solutions, and range-bounded enumeration of
// non-trivial solutions and of the three-variable triples of px + qy = z.
#pragma once

#include "sfl/error.hpp"
#include "sfl/numeric.hpp"

#include <array>
#include <numeric>
#include <vector>

namespace sfl {

struct LinearEquation {
    std::vector<long long> coeffs;  // all non-zero, k >= 2
    long long constant = 0;

    LinearEquation(std::vector<long long> a, long long b);

    std::size_t k() const { return coeffs.size(); }
    bool homogeneous() const { return constant == 0; }
    bool translation_invariant() const {
        return constant == 0 &&
               std::accumulate(coeffs.begin(), coeffs.end(), 0LL) == 0;
    }
};

// The equation px + qy = z, i.e. coefficients (p, q, -1) with b = 0.
struct PqEquation {
    long long p = 0;
    long long q = 0;
    long long gcd_u = 0;   // gcd(p, q)
    bool p_ge_q = false;   // canonical-regime flags, recorded not enforced
    bool p_ge_2 = false;

    PqEquation(long long p_, long long q_);

    LinearEquation to_linear() const { return LinearEquation({p, q, -1}, 0); }
};

// A multiset {x, y, z} forming a non-trivial solution, stored sorted.
struct LTriple {
    std::array<long long, 3> v{};

    LTriple() = default;
    LTriple(long long a, long long b, long long c);

    bool contains(long long x) const { return v[0] == x || v[1] == x || v[2] == x; }
    auto operator<=>(const LTriple&) const = default;
};

// True iff every equal-value class of x has coefficient sum zero. Equivalent
// to the existential zero-sum-partition definition: admissible parts refine
// the equality classes, and the classes themselves are admissible parts.
// Caller must have checked that x satisfies the equation.
bool is_trivial_solution(const LinearEquation& eq, const std::vector<long long>& x);

// All non-trivial solutions in [n]^k, lexicographic. The last variable is
// solved for, so the scan is n^(k-1); a budget guards against larger asks.
std::vector<std::vector<long long>> enumerate_solutions(const LinearEquation& eq,
                                                        long long n,
                                                        long long budget_tuples = 200'000'000);

// Deduplicated L-triples of px + qy = z in [n]. For positive p, q no
// solution is trivial (no equal-value class can have zero coefficient sum),
// so every multiset produced is an L-triple.
std::vector<LTriple> l_triples(const PqEquation& eq, long long n);

}  // namespace sfl
