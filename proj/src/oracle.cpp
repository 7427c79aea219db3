#include "sfl/oracle.hpp"

#include <algorithm>
#include <bit>
#include <chrono>

namespace sfl::oracle {
namespace {

std::uint64_t bit_of(long long element) { return 1ULL << (element - 1); }

struct Deadline {
    std::chrono::steady_clock::time_point end{};
    bool enabled = false;
    unsigned long long ticks = 0;

    explicit Deadline(long long wall_ms) {
        if (wall_ms > 0) {
            enabled = true;
            end = std::chrono::steady_clock::now() + std::chrono::milliseconds(wall_ms);
        }
    }
    void tick() {
        if (enabled && (++ticks & 0xFFFFFULL) == 0 &&
            std::chrono::steady_clock::now() > end)
            throw BudgetExceeded("wall-clock budget exceeded");
    }
};

ConflictSystem from_supports(long long n, std::vector<std::uint64_t> supports) {
    std::sort(supports.begin(), supports.end());
    supports.erase(std::unique(supports.begin(), supports.end()), supports.end());
    // A support that contains another is redundant.
    std::sort(supports.begin(), supports.end(), [](std::uint64_t a, std::uint64_t b) {
        return std::popcount(a) < std::popcount(b);
    });
    std::vector<std::uint64_t> kept;
    for (std::uint64_t m : supports) {
        bool redundant = false;
        for (std::uint64_t s : kept)
            if ((s & ~m) == 0) { redundant = true; break; }
        if (!redundant) kept.push_back(m);
    }
    ConflictSystem sys;
    sys.n = n;
    sys.masks = std::move(kept);
    sys.completions.assign(static_cast<std::size_t>(n), {});
    for (std::uint64_t m : sys.masks) {
        std::uint64_t rest = m;
        while (rest) {
            int b = std::countr_zero(rest);
            rest &= rest - 1;
            sys.completions[static_cast<std::size_t>(b)].push_back(m & ~(1ULL << b));
        }
    }
    return sys;
}

void require_mask_range(long long n) {
    if (n < 0 || n > 64)
        throw BudgetExceeded("oracle ground set limited to n <= 64");
}

// Shared recursion state for the counting / enumeration searches. Elements
// are decided in descending order; `chosen` is always solution-free.
struct Search {
    const ConflictSystem& sys;
    Deadline dl;
    std::uint64_t chosen = 0;

    Search(const ConflictSystem& s, const Budget& b) : sys(s), dl(b.wall_ms) {}
};

}  // namespace

ConflictSystem ConflictSystem::build(const PqEquation& eq, long long n) {
    require_mask_range(n);
    std::vector<std::uint64_t> supports;
    for (const LTriple& t : l_triples(eq, n)) {
        std::uint64_t m = 0;
        for (long long v : t.v) m |= bit_of(v);
        supports.push_back(m);
    }
    return from_supports(n, std::move(supports));
}

ConflictSystem ConflictSystem::build(const LinearEquation& eq, long long n) {
    require_mask_range(n);
    std::vector<std::uint64_t> supports;
    if (n >= 1) {
        for (const auto& sol : enumerate_solutions(eq, n)) {
            std::uint64_t m = 0;
            for (long long v : sol) m |= bit_of(v);
            supports.push_back(m);
        }
    }
    return from_supports(n, std::move(supports));
}

namespace {

bool is_free_impl(const ConflictSystem& sys, const std::set<long long>& s) {
    std::uint64_t m = 0;
    for (long long v : s) {
        if (v < 1) throw std::invalid_argument("set elements must be positive");
        m |= bit_of(v);
    }
    return sys.is_free(m);
}

// ---- f(n, L) ----------------------------------------------------------

struct CountSearch : Search {
    using Search::Search;
    unsigned __int128 total = 0;

    void run(int e) {
        dl.tick();
        if (e == 0) {
            ++total;
            return;
        }
        run(e - 1);
        if (sys.addable(chosen, e)) {
            chosen |= bit_of(e);
            run(e - 1);
            chosen &= ~bit_of(e);
        }
    }
};

long long greedy_free_size(const ConflictSystem& sys) {
    std::uint64_t chosen = 0;
    long long size = 0;
    for (long long e = sys.n; e >= 1; --e)
        if (sys.addable(chosen, static_cast<int>(e))) {
            chosen |= bit_of(e);
            ++size;
        }
    return size;
}

BigInt count_free_impl(const ConflictSystem& sys, const Budget& budget) {
    if (sys.n > budget.max_n_count)
        throw BudgetExceeded("count_solution_free: n exceeds budget");
    // The greedy free set is a lower bound witness: f >= 2^|greedy|.
    if (greedy_free_size(sys) > budget.max_count_log2)
        throw BudgetExceeded("count_solution_free: estimated count exceeds 2^budget");
    CountSearch s(sys, budget);
    s.run(static_cast<int>(sys.n));
    BigInt out = static_cast<std::uint64_t>(s.total >> 64);
    out <<= 64;
    out += static_cast<std::uint64_t>(s.total);
    return out;
}

// ---- f(n, L, m) --------------------------------------------------------

long long greedy_free_size_from(const ConflictSystem& sys, long long m) {
    std::uint64_t chosen = bit_of(m);
    long long size = 1;
    for (long long e = sys.n; e > m; --e)
        if (sys.addable(chosen, static_cast<int>(e))) {
            chosen |= bit_of(e);
            ++size;
        }
    return size;
}

BigInt count_with_min_impl(const ConflictSystem& sys, long long m, const Budget& budget) {
    if (!sys.is_free(bit_of(m))) return 0;
    // f(n, m) >= 2^(greedy - 1): the greedy witness bounds the work below
    if (greedy_free_size_from(sys, m) - 1 > budget.max_count_log2)
        throw BudgetExceeded("count_with_min: estimated count exceeds 2^budget");
    CountSearch s(sys, budget);
    s.chosen = bit_of(m);
    s.total = 0;
    // Decide elements n..m+1; everything below m stays excluded.
    struct Rec {
        CountSearch& cs;
        long long floor_elem;
        void run(int e) {
            cs.dl.tick();
            if (e == floor_elem) {
                ++cs.total;
                return;
            }
            run(e - 1);
            if (cs.sys.addable(cs.chosen, e)) {
                cs.chosen |= bit_of(e);
                run(e - 1);
                cs.chosen &= ~bit_of(e);
            }
        }
    } rec{s, m};
    rec.run(static_cast<int>(sys.n));
    return BigInt(static_cast<std::uint64_t>(s.total));
}

// ---- f_max(n, L) -------------------------------------------------------

struct MaximalSearch : Search {
    using Search::Search;
    unsigned long long total = 0;
    std::vector<std::vector<long long>>* sink = nullptr;

    bool leaf_is_maximal() const {
        for (long long e = 1; e <= sys.n; ++e)
            if (!(chosen & bit_of(e)) && sys.addable(chosen, static_cast<int>(e)))
                return false;
        return true;
    }

    void run(int e) {
        dl.tick();
        if (e == 0) {
            if (leaf_is_maximal()) {
                ++total;
                if (sink) {
                    std::vector<long long> out;
                    for (long long v = 1; v <= sys.n; ++v)
                        if (chosen & bit_of(v)) out.push_back(v);
                    sink->push_back(std::move(out));
                }
            }
            return;
        }
        if (sys.addable(chosen, e)) {
            chosen |= bit_of(e);
            run(e - 1);
            chosen &= ~bit_of(e);
        }
        run(e - 1);
    }
};

unsigned long long count_maximal_impl(const ConflictSystem& sys, const Budget& budget,
                                      std::vector<std::vector<long long>>* sink) {
    if (sys.n > budget.max_n_maximal)
        throw BudgetExceeded("count_maximal: n exceeds budget");
    MaximalSearch s(sys, budget);
    s.sink = sink;
    s.run(static_cast<int>(sys.n));
    return s.total;
}

// ---- mu(n, L) ----------------------------------------------------------

struct MuSearch : Search {
    using Search::Search;
    std::vector<std::uint64_t> packing;  // masks ordered small-support first
    long long floor_elem = 0;            // elements <= floor_elem are fixed
    long long best = 0;

    long long packing_bound(int e) const {
        // Each still-live conflict with a disjoint undecided part forces at
        // least one exclusion among the undecided elements (floor_elem, e].
        std::uint64_t low_e = (e >= 64) ? ~0ULL : ((1ULL << e) - 1);
        std::uint64_t low_floor = (floor_elem >= 64) ? ~0ULL : ((1ULL << floor_elem) - 1);
        std::uint64_t undecided = low_e & ~low_floor;
        std::uint64_t used = 0;
        long long packed = 0;
        for (std::uint64_t m : packing) {
            std::uint64_t und = m & undecided;
            if (!und) continue;
            if (m & ~undecided & ~chosen) continue;  // an element already excluded
            if (und & used) continue;
            used |= und;
            ++packed;
        }
        return packed;
    }

    void run(int e, long long cnt) {
        dl.tick();
        if (e == floor_elem) {
            best = std::max(best, cnt);
            return;
        }
        if (cnt + (e - floor_elem) - packing_bound(e) <= best) return;
        if (sys.addable(chosen, e)) {
            chosen |= bit_of(e);
            run(e - 1, cnt + 1);
            chosen &= ~bit_of(e);
        }
        run(e - 1, cnt);
    }
};

long long mu_impl(const ConflictSystem& sys, const Budget& budget) {
    if (sys.n > budget.max_n_mu) throw BudgetExceeded("mu: n exceeds budget");
    if (sys.n == 0) return 0;
    MuSearch s(sys, budget);
    s.packing = sys.masks;
    s.best = greedy_free_size(sys);
    s.run(static_cast<int>(sys.n), 0);
    return s.best;
}

long long max_free_with_min_impl(const ConflictSystem& sys, long long m,
                                 const Budget& budget) {
    if (sys.n > budget.max_n_mu) throw BudgetExceeded("max_free_with_min: n exceeds budget");
    if (!sys.is_free(bit_of(m))) return 0;
    MuSearch s(sys, budget);
    s.packing = sys.masks;
    s.floor_elem = m;
    s.chosen = bit_of(m);
    s.best = 1;
    s.run(static_cast<int>(sys.n), 1);
    return s.best;
}

}  // namespace

bool is_solution_free(const PqEquation& eq, const std::set<long long>& s) {
    long long n = s.empty() ? 0 : *s.rbegin();
    return is_free_impl(ConflictSystem::build(eq, n), s);
}

bool is_solution_free(const LinearEquation& eq, const std::set<long long>& s) {
    long long n = s.empty() ? 0 : *s.rbegin();
    return is_free_impl(ConflictSystem::build(eq, n), s);
}

long long mu(const PqEquation& eq, long long n, const Budget& budget) {
    return mu_impl(ConflictSystem::build(eq, n), budget);
}

long long mu(const LinearEquation& eq, long long n, const Budget& budget) {
    return mu_impl(ConflictSystem::build(eq, n), budget);
}

long long max_free_with_min(const PqEquation& eq, long long n, long long m,
                            const Budget& budget) {
    if (m < 1 || m > n) throw std::invalid_argument("max_free_with_min: need 1 <= m <= n");
    return max_free_with_min_impl(ConflictSystem::build(eq, n), m, budget);
}

BigInt count_solution_free(const PqEquation& eq, long long n, const Budget& budget) {
    return count_free_impl(ConflictSystem::build(eq, n), budget);
}

BigInt count_solution_free(const LinearEquation& eq, long long n, const Budget& budget) {
    return count_free_impl(ConflictSystem::build(eq, n), budget);
}

BigInt count_maximal(const PqEquation& eq, long long n, const Budget& budget) {
    return count_maximal_impl(ConflictSystem::build(eq, n), budget, nullptr);
}

BigInt count_maximal(const LinearEquation& eq, long long n, const Budget& budget) {
    return count_maximal_impl(ConflictSystem::build(eq, n), budget, nullptr);
}

std::vector<std::vector<long long>> enumerate_maximal(const PqEquation& eq, long long n,
                                                      const Budget& budget) {
    std::vector<std::vector<long long>> out;
    count_maximal_impl(ConflictSystem::build(eq, n), budget, &out);
    return out;
}

BigInt count_with_min(const PqEquation& eq, long long n, long long m, const Budget& budget) {
    if (m < 1 || m > n) throw std::invalid_argument("count_with_min: need 1 <= m <= n");
    return count_with_min_impl(ConflictSystem::build(eq, n), m, budget);
}

std::vector<long long> m_set(const PqEquation& eq, long long n) {
    std::vector<bool> in_triple(static_cast<std::size_t>(n) + 1, false);
    for (const LTriple& t : l_triples(eq, n))
        for (long long v : t.v) in_triple[static_cast<std::size_t>(v)] = true;
    std::vector<long long> out;
    for (long long v = 1; v <= n; ++v)
        if (!in_triple[static_cast<std::size_t>(v)]) out.push_back(v);
    return out;
}

long long mu_star(const PqEquation& eq, long long n) {
    return static_cast<long long>(m_set(eq, n).size());
}

StatsRecord stats(long long p, long long q, long long n, unsigned fields,
                  const Budget& budget) {
    auto start = std::chrono::steady_clock::now();
    // the wall-clock ceiling covers the whole record, not each field
    auto remaining = [&]() {
        Budget b = budget;
        if (budget.wall_ms > 0) {
            auto used = std::chrono::duration_cast<std::chrono::milliseconds>(
                            std::chrono::steady_clock::now() - start)
                            .count();
            b.wall_ms = budget.wall_ms - used;
            if (b.wall_ms <= 0) throw BudgetExceeded("stats: wall-clock budget exceeded");
        }
        return b;
    };
    PqEquation eq(p, q);
    StatsRecord rec;
    rec.p = p;
    rec.q = q;
    rec.n = n;
    ConflictSystem sys = ConflictSystem::build(eq, n);
    if (fields & kStatsMu) rec.mu = mu_impl(sys, remaining());
    if (fields & kStatsMuStar) rec.mu_star = mu_star(eq, n);
    if (fields & kStatsF) rec.f = count_free_impl(sys, remaining());
    if (fields & kStatsFmax) rec.f_max = count_maximal_impl(sys, remaining(), nullptr);
    if (fields & kStatsPerMin) {
        std::map<long long, BigInt> pm;
        for (long long m = 1; m <= n; ++m) pm[m] = count_with_min_impl(sys, m, remaining());
        rec.per_min = std::move(pm);
    }
    rec.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                         std::chrono::steady_clock::now() - start)
                         .count();
    return rec;
}

}  // namespace sfl::oracle
