// Closed-form values and classifiers: the mu and mu* formulas, the three
// f_max exponent bounds and the selector for the best of them, the
// f_max <= f(floor((n-p)/q)) certificate, the induced-matching exponent, and
// the oracle-checked multi-variable statements (coefficient merging, the
// normalized-sum mu formula, and f_max <= f(floor(rn/p_s))).
#pragma once

#include "sfl/equation.hpp"
#include "sfl/numeric.hpp"
#include "sfl/oracle.hpp"

#include <optional>
#include <vector>

namespace sfl::bounds {

long long mu_formula(long long p, long long q, long long n);       // n - floor(n/(p+q))
long long mu_star_formula(long long p, long long q, long long n);  // #{s: s > floor((n-p)/q), gcd(p,q) does not divide s}

struct FmaxExponents {
    double thm14 = 0.0;             // (mu - mu*) * log2(3) / 3
    std::optional<Rat> thm15;       // (mu - mu*) / 2, when q >= 2, p <= q^2 - q, gcd(p,q) = q
    long long thm16 = 0;            // mu_formula at floor((n-p)/q)
};
FmaxExponents fmax_exponents(long long p, long long q, long long n);

enum class BestThm { thm14, thm15, thm16 };
const char* to_string(BestThm t);

// Which of the three upper bounds is asymptotically best for (p, q). The
// q in [10, 17] boundary compares p against an irrational threshold in
// log_3(8); the comparison is made with outward rounding on both sides.
BestThm best_selector(long long p, long long q);

// f_max(n, L) <= f(floor((n-p)/q), L), both sides by oracle; returns the
// right-hand side as an exact certificate.
BigInt msf3_bound(const PqEquation& eq, long long n, const oracle::Budget& budget = {});

// The claimed exponent of the induced-matching lower bound f_max >= 2^ell.
Rat msf6_lower(long long p, long long q, long long n);

// mu is monotone under coefficient merging: eq2 must be eq1 with two
// coefficients summed into one. True iff oracle mu(eq1) <= mu(eq2).
bool mu_merge_check(const LinearEquation& eq1, const LinearEquation& eq2, long long n,
                    const oracle::Budget& budget = {});

struct Mu5aiResult {
    bool applicable = false;   // positives split into two zero-residue groups mod sum(|negatives|)
    long long p_plus_q = 0;    // normalized p + q
    long long expected = 0;    // n - floor(n / (p+q))
    long long oracle_mu = 0;
    bool ok = false;
};
Mu5aiResult mu5ai_check(const LinearEquation& eq, long long n,
                        const oracle::Budget& budget = {});

struct Msf8Result {
    long long bound_n = 0;     // floor(r n / p_s)
    BigInt f_max;
    BigInt f_bound;
    bool ok = false;           // f_max <= f_bound
};
Msf8Result msf8_check(const std::vector<long long>& p_list, long long r, long long n,
                      const oracle::Budget& budget = {});

struct BoundReport {
    long long p = 0, q = 0, n = 0;
    long long mu_formula_value = 0;
    long long mu_star_formula_value = 0;
    std::optional<double> log2_f_upper;       // mu + log2(3/2 + C), o(1) slack not included
    FmaxExponents fmax;
    BestThm best = BestThm::thm16;
    long long lower_interval = 0;             // log2 f >= mu_formula
    std::optional<double> lower_msf2;         // log2 of 3^(triangles - affected), q = 1 only
    std::optional<Rat> lower_msf6;            // ell, p >= q >= 2 and n > 2p only
};
BoundReport bound_report(long long p, long long q, long long n);

}  // namespace sfl::bounds
