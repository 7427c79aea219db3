#include "sfl/bounds.hpp"

#include "sfl/error.hpp"
#include "sfl/linkgraph.hpp"
#include "sfl/pathgraph.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

namespace sfl::bounds {
namespace {

void require_pq(long long p, long long q) {
    if (q < 1 || q > p || p < 2)
        throw std::invalid_argument("requires p >= q >= 1 and p >= 2");
}

}  // namespace

long long mu_formula(long long p, long long q, long long n) {
    require_pq(p, q);
    if (n < 0) throw std::invalid_argument("mu_formula requires n >= 0");
    return n - n / (p + q);
}

long long mu_star_formula(long long p, long long q, long long n) {
    require_pq(p, q);
    long long u = std::gcd(p, q);
    if (u == 1) return 0;
    long long lo = floor_div(n - p, q);  // elements strictly above this
    long long count = 0;
    for (long long s = std::max(1LL, lo + 1); s <= n; ++s)
        if (s % u != 0) ++count;
    return count;
}

FmaxExponents fmax_exponents(long long p, long long q, long long n) {
    require_pq(p, q);
    FmaxExponents out;
    long long mu = mu_formula(p, q, n);
    long long mu_star = mu_star_formula(p, q, n);
    out.thm14 = static_cast<double>(mu - mu_star) * std::log2(3.0) / 3.0;
    if (q >= 2 && p <= q * q - q && std::gcd(p, q) == q)
        out.thm15 = Rat(mu - mu_star, 2);
    long long inner = std::max(0LL, floor_div(n - p, q));
    out.thm16 = inner - inner / (p + q);
    return out;
}

const char* to_string(BestThm t) {
    switch (t) {
        case BestThm::thm14: return "thm14";
        case BestThm::thm15: return "thm15";
        default: return "thm16";
    }
}

BestThm best_selector(long long p, long long q) {
    require_pq(p, q);
    bool gcd_q = std::gcd(p, q) == q;
    if (gcd_q && q >= 2 && p <= q * q - q) return BestThm::thm15;
    if (gcd_q && p >= q * q) {
        if (q <= 9) return BestThm::thm14;
        if (q <= 17) {
            // p < (a-1)(q^2-q)/(q(2-a)-1) with a = log_3 8, outward rounding.
            double a = std::log2(8.0) / std::log2(3.0);
            double a_lo = std::nextafter(std::nextafter(a, 0.0), 0.0);
            double a_hi = std::nextafter(std::nextafter(a, 2.0), 2.0);
            auto thr = [&](double av) {
                return (av - 1.0) * static_cast<double>(q * q - q) /
                       (static_cast<double>(q) * (2.0 - av) - 1.0);
            };
            double lo = thr(a_lo) - 1e-6, hi = thr(a_hi) + 1e-6;
            double pd = static_cast<double>(p);
            if (pd < lo) return BestThm::thm14;
            if (pd >= hi) return BestThm::thm16;
            throw std::logic_error("best_selector: p falls inside the rounding window");
        }
    }
    return BestThm::thm16;
}

BigInt msf3_bound(const PqEquation& eq, long long n, const oracle::Budget& budget) {
    long long inner = std::max(0LL, floor_div(n - eq.p, eq.q));
    return oracle::count_solution_free(eq, inner, budget);
}

Rat msf6_lower(long long p, long long q, long long n) {
    if (q < 2 || p < q) throw std::invalid_argument("msf6_lower requires p >= q >= 2");
    if (n <= 2 * p) throw std::invalid_argument("msf6_lower requires n > 2p");
    if (p >= q * q) return Rat(n * (q - 1) - p * q + q - 2 * q * q, q * q);
    if (p > q) return Rat(n * (p - q) - p * p + q * q - 2 * p * q, p * q);
    return Rat(n - 6 * q, 2 * q);
}

bool mu_merge_check(const LinearEquation& eq1, const LinearEquation& eq2, long long n,
                    const oracle::Budget& budget) {
    if (eq1.coeffs == eq2.coeffs && eq1.constant == eq2.constant) return true;
    if (eq1.constant != eq2.constant || eq2.k() + 1 != eq1.k())
        throw std::invalid_argument("mu_merge_check: eq2 must merge exactly two coefficients of eq1");
    std::vector<long long> target = eq2.coeffs;
    std::sort(target.begin(), target.end());
    bool valid = false;
    for (std::size_t i = 0; i < eq1.k() && !valid; ++i)
        for (std::size_t j = i + 1; j < eq1.k() && !valid; ++j) {
            if (eq1.coeffs[i] + eq1.coeffs[j] == 0) continue;  // zero coefficient not allowed
            std::vector<long long> merged;
            merged.push_back(eq1.coeffs[i] + eq1.coeffs[j]);
            for (std::size_t t = 0; t < eq1.k(); ++t)
                if (t != i && t != j) merged.push_back(eq1.coeffs[t]);
            std::sort(merged.begin(), merged.end());
            valid = (merged == target);
        }
    if (!valid)
        throw std::invalid_argument("mu_merge_check: eq2 is not a coefficient merge of eq1");
    return oracle::mu(eq1, n, budget) <= oracle::mu(eq2, n, budget);
}

Mu5aiResult mu5ai_check(const LinearEquation& eq, long long n, const oracle::Budget& budget) {
    Mu5aiResult out;
    if (!eq.homogeneous()) return out;
    std::vector<long long> pos;
    long long neg_sum = 0;
    for (long long c : eq.coeffs) {
        if (c > 0)
            pos.push_back(c);
        else
            neg_sum -= c;
    }
    if (pos.empty() || neg_sum == 0) return out;
    long long pos_sum = std::accumulate(pos.begin(), pos.end(), 0LL);
    if (pos_sum % neg_sum != 0) return out;
    // Need a split of the positive coefficients into two non-empty groups
    // whose sums are both divisible by r' = neg_sum; then t' = r', r = 1.
    bool split_found = false;
    for (unsigned long long s = 1; s + 1 < (1ULL << pos.size()) && !split_found; ++s) {
        long long sum = 0;
        for (std::size_t i = 0; i < pos.size(); ++i)
            if (s >> i & 1) sum += pos[i];
        split_found = (sum % neg_sum == 0) && ((pos_sum - sum) % neg_sum == 0);
    }
    if (!split_found) return out;
    out.applicable = true;
    out.p_plus_q = pos_sum / neg_sum;
    out.expected = n - n / out.p_plus_q;
    out.oracle_mu = oracle::mu(eq, n, budget);
    out.ok = (out.oracle_mu == out.expected);
    return out;
}

Msf8Result msf8_check(const std::vector<long long>& p_list, long long r, long long n,
                      const oracle::Budget& budget) {
    if (r < 1 || p_list.empty()) throw std::invalid_argument("msf8_check: need r >= 1 and p_list");
    for (std::size_t i = 0; i + 1 < p_list.size(); ++i)
        if (p_list[i] < p_list[i + 1])
            throw std::invalid_argument("msf8_check: p_list must be non-increasing");
    if (p_list.back() <= r) throw std::invalid_argument("msf8_check: requires p_s > r");
    std::vector<long long> coeffs = p_list;
    coeffs.push_back(-r);
    LinearEquation eq(coeffs, 0);
    Msf8Result out;
    out.bound_n = (r * n) / p_list.back();
    out.f_max = oracle::count_maximal(eq, n, budget);
    out.f_bound = oracle::count_solution_free(eq, out.bound_n, budget);
    out.ok = out.f_max <= out.f_bound;
    return out;
}

BoundReport bound_report(long long p, long long q, long long n) {
    require_pq(p, q);
    BoundReport out;
    out.p = p;
    out.q = q;
    out.n = n;
    out.mu_formula_value = mu_formula(p, q, n);
    out.mu_star_formula_value = mu_star_formula(p, q, n);
    auto nsf3 = pathgraph::nsf3_constant(p, q);
    if (nsf3.applicable)
        out.log2_f_upper = static_cast<double>(out.mu_formula_value) + std::log2(1.5 + nsf3.c);
    out.fmax = fmax_exponents(p, q, n);
    out.best = best_selector(p, q);
    out.lower_interval = out.mu_formula_value;
    if (q == 1) {
        try {
            auto c = linkgraph::msf2_construction(p, n);
            out.lower_msf2 = static_cast<double>(c.triangle_count - c.affected_triangles) *
                             std::log2(3.0);
        } catch (const Infeasible&) {
        }
    }
    if (q >= 2 && n > 2 * p) out.lower_msf6 = msf6_lower(p, q, n);
    return out;
}

}  // namespace sfl::bounds
