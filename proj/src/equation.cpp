#include "sfl/equation.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace sfl {

LinearEquation::LinearEquation(std::vector<long long> a, long long b)
    : coeffs(std::move(a)), constant(b) {
    if (coeffs.size() < 2)
        throw std::invalid_argument("LinearEquation needs k >= 2 coefficients");
    for (long long c : coeffs)
        if (c == 0) throw std::invalid_argument("LinearEquation coefficients must be non-zero");
}

PqEquation::PqEquation(long long p_, long long q_) : p(p_), q(q_) {
    if (p < 1 || q < 1)
        throw std::invalid_argument("PqEquation requires positive p and q");
    gcd_u = std::gcd(p, q);
    p_ge_q = p >= q;
    p_ge_2 = p >= 2;
}

LTriple::LTriple(long long a, long long b, long long c) : v{a, b, c} {
    std::sort(v.begin(), v.end());
}

bool is_trivial_solution(const LinearEquation& eq, const std::vector<long long>& x) {
    if (x.size() != eq.k())
        throw std::invalid_argument("solution length does not match equation arity");
    std::map<long long, long long> class_sum;
    for (std::size_t i = 0; i < x.size(); ++i) class_sum[x[i]] += eq.coeffs[i];
    for (auto& [value, sum] : class_sum)
        if (sum != 0) return false;
    return true;
}

std::vector<std::vector<long long>> enumerate_solutions(const LinearEquation& eq,
                                                        long long n,
                                                        long long budget_tuples) {
    if (n < 1) throw std::invalid_argument("enumerate_solutions requires n >= 1");
    const std::size_t k = eq.k();
    double scan = 1;
    for (std::size_t i = 0; i + 1 < k; ++i) scan *= static_cast<double>(n);
    if (scan > static_cast<double>(budget_tuples))
        throw BudgetExceeded("enumerate_solutions: n^(k-1) exceeds tuple budget");

    std::vector<std::vector<long long>> out;
    std::vector<long long> x(k, 1);
    const long long ak = eq.coeffs[k - 1];
    // Lexicographic scan over the first k-1 variables; solve for x_k.
    while (true) {
        long long partial = eq.constant;
        for (std::size_t i = 0; i + 1 < k; ++i) partial -= eq.coeffs[i] * x[i];
        if (partial % ak == 0) {
            long long last = partial / ak;
            if (last >= 1 && last <= n) {
                x[k - 1] = last;
                if (!is_trivial_solution(eq, x)) out.push_back(x);
            }
        }
        long long j = static_cast<long long>(k) - 2;
        while (j >= 0 && x[j] == n) --j;
        if (j < 0) break;
        ++x[j];
        for (std::size_t t = j + 1; t + 1 < k; ++t) x[t] = 1;
    }
    return out;
}

std::vector<LTriple> l_triples(const PqEquation& eq, long long n) {
    if (n < 0) throw std::invalid_argument("l_triples requires n >= 0");
    // ~n^2/(2pq) triples; refuse asks that would not be desk scale
    if (n > 2 && (n / eq.p) * (n / eq.q) / 2 > 100'000'000)
        throw BudgetExceeded("l_triples: triple count exceeds budget");
    std::vector<LTriple> out;
    for (long long x = 1; eq.p * x + eq.q <= n; ++x)
        for (long long y = 1; eq.p * x + eq.q * y <= n; ++y)
            out.emplace_back(x, y, eq.p * x + eq.q * y);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace sfl
