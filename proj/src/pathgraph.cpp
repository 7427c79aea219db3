#include "sfl/pathgraph.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_map>

namespace sfl::pathgraph {
namespace {

void require_pq(long long p, long long q) {
    if (q < 1 || q > p || p < 2)
        throw std::invalid_argument("requires p >= q >= 1 and p >= 2");
}

void require_range(long long n, long long m) {
    if (m < 1 || m > n) throw std::invalid_argument("requires 1 <= m <= n");
}

BigInt fib(long long i) {
    // F(1) = F(2) = 1
    if (i <= 0) throw std::invalid_argument("fib index must be positive");
    BigInt a = 1, b = 1;
    for (long long j = 3; j <= i; ++j) {
        BigInt c = a + b;
        a = b;
        b = c;
    }
    return b;
}

BigInt geometric_sum(long long q, long long upto) {
    // 1 + q + ... + q^upto
    BigInt s = 0, t = 1;
    for (long long i = 0; i <= upto; ++i) {
        s += t;
        t *= q;
    }
    return s;
}

}  // namespace

PathGraph build_gm(long long p, long long q, long long n, long long m) {
    require_range(n, m);
    PathGraph g{p, q, n, m, {}};
    for (long long c = m; c <= n; ++c) {
        long long other = p * m + q * c;
        if (other > n) break;
        g.edges.emplace_back(c, other);
    }
    return g;
}

PathDecomposition decompose(long long p, long long q, long long n, long long m) {
    require_range(n, m);
    PathDecomposition d{p, q, n, m, {n}, 0, {}};
    while (true) {
        long long y = floor_div(d.ys.back() - p * m, q);
        if (y < m) break;
        d.ys.push_back(y);
    }
    d.k = static_cast<long long>(d.ys.size()) - 1;
    if (d.k == 0) {
        d.counts[1] = n - m + 1;
        return d;
    }
    const auto& y = d.ys;
    for (long long i = 1; i <= d.k - 1; ++i)
        d.counts[i] = y[static_cast<std::size_t>(i - 1)] + y[static_cast<std::size_t>(i + 1)] -
                      2 * y[static_cast<std::size_t>(i)];
    d.counts[d.k] = y[static_cast<std::size_t>(d.k - 1)] - 2 * y[static_cast<std::size_t>(d.k)] + m - 1;
    d.counts[d.k + 1] = y[static_cast<std::size_t>(d.k)] - m + 1;
    return d;
}

long long max_is_gm(long long p, long long q, long long n, long long m) {
    long long total = 0;
    for (auto [size, count] : decompose(p, q, n, m).counts)
        total += ((size + 1) / 2) * count;
    return total;
}

IsCount count_is_gm(long long p, long long q, long long n, long long m) {
    PathDecomposition d = decompose(p, q, n, m);
    BigInt total = 1;
    for (auto [size, count] : d.counts)
        if (count > 0) total *= ipow(fib(size + 2), static_cast<unsigned long long>(count));
    // m sits in a component of size k+1 (the k = 0 case degenerates to an
    // isolated vertex) and is an endpoint of it. A path on s vertices has
    // F(s) independent sets containing a fixed endpoint.
    long long s = d.k + 1;
    BigInt containing = total / fib(s + 2) * fib(s);
    return {total, containing};
}

BigInt matching_is_bound(long long v_count, long long e, bool contains_v) {
    if (e < 1) throw std::invalid_argument("matching_is_bound requires e >= 1");
    if (2 * e > v_count) throw std::invalid_argument("matching larger than vertex set");
    BigInt out = ipow(3, static_cast<unsigned long long>(contains_v ? e - 1 : e));
    out <<= static_cast<unsigned long long>(v_count - 2 * e);
    return out;
}

StructureBound structure_bound(long long p, long long q, long long n, long long t) {
    require_pq(p, q);
    if (t < 0) throw std::invalid_argument("structure_bound requires t >= 0");
    long long npq = n / (p + q);
    long long m = npq - t;
    if (m < 1) throw std::invalid_argument("structure_bound requires floor(n/(p+q)) - t >= 1");

    StructureBound out;
    out.t = t;
    out.m = m;
    // t < ((p+q-1)/(p+q+p/q)) * floor(n/(p+q)), compared exactly.
    Rat threshold = Rat(q * (p + q - 1), q * (p + q) + p) * npq;
    if (Rat(t) < threshold) {
        out.case_id = 1;
        long long cap = ceil_div((p + q - 1) * n, p + q) - (p * t) / q;
        out.bound = RationalBound{Rat(cap), 0};
        out.threshold_met = true;
    } else {
        out.case_id = 2;
        out.bound = RationalBound{Rat(BigInt(q * q + 1) * n, BigInt(q * q + q + 1)), 0};
        BigInt qq = q;
        BigInt t1_num = 3 * (qq * qq + qq + 1) * (qq * qq * qq + p * (qq * qq + qq + 1));
        BigInt t1_den = qq * qq + 1;
        BigInt q5 = ipow(qq, 5);
        BigInt t2_num = 5 * (qq * qq + qq + 1) * (q5 + p * geometric_sum(q, 4));
        BigInt t2_den = ipow(qq, 4) + (p - 1) * ipow(qq, 3) + qq * qq + 1;
        Rat thr = std::max(Rat(t1_num, t1_den), Rat(t2_num, t2_den));
        out.n_threshold = thr;
        out.threshold_met = Rat(n) >= thr;
    }
    return out;
}

RationalBound c_k(long long p, long long q, long long k) {
    if (q < 2) throw std::invalid_argument("C_k is defined for q >= 2 (q = 1 uses the 2n/3 bound)");
    if (k < 2) throw std::invalid_argument("C_k requires k >= 2");
    long long l = k / 2;
    BigInt num = 0, qpow = 1;
    for (long long i = 0; i <= 2 * l + 1; ++i) {
        num += (i % 2 == 0) ? -qpow : qpow;  // -(-q)^i
        qpow *= q;
    }
    BigInt sq_even = 0;
    qpow = 1;
    for (long long i = 0; i <= l; ++i) {
        sq_even += qpow;
        qpow *= q * q;
    }
    num += p * sq_even;
    BigInt den = ipow(BigInt(q), static_cast<unsigned long long>(2 * l + 1)) +
                 p * geometric_sum(q, 2 * l);
    return RationalBound{Rat(num, den), 0};
}

Rat claim_a_value(long long p, long long q, long long k) {
    if (q < 2 || p < q) throw std::invalid_argument("claim A requires p >= q >= 2");
    Rat gap = Rat(q * q + 1, q * q + q + 1) - c_k(p, q, k).fraction;
    BigInt scale = ipow(BigInt(q), static_cast<unsigned long long>(k)) +
                   p * geometric_sum(q, k - 1);
    return gap * Rat(scale);
}

bool check_claim_a(long long p, long long q, long long k) {
    return claim_a_value(p, q, k) >= k;
}

Nsf2Bound nsf2_bound(long long p, long long q, long long n, long long m) {
    require_pq(p, q);
    require_range(n, m);
    Nsf2Bound out;
    long long npq = n / (p + q);
    long long mu_formula = n - npq;
    if (m >= npq + 1) {
        out.case_id = 1;
        out.exact = pow2(static_cast<unsigned long long>(n - m));
        out.log2_exponent = Rat(n - m);
        return out;
    }
    if (m == npq) {
        out.case_id = 2;
        out.log2_exponent = Rat(mu_formula - 1);
        return out;
    }
    out.t = npq - m;
    out.path_k = decompose(p, q, n, m).k;
    if (q >= 2) {
        if (out.path_k == 1) {
            out.case_id = 3;
            out.log2_exponent =
                Rat(mu_formula) - Rat(3, 5) + Rat(out.t * (3 * q - 2 * p), 5 * q);
        } else {
            out.case_id = 4;
            out.multiplier = Rat(4, 3);
            out.log2_exponent = Rat((5 * q * q - 2 * q + 2) * n, 5 * q * q);
        }
    } else {
        out.case_id = 5;
        long long ell = out.path_k;
        out.t = n / (ell * p + 1) - m;
        out.log2_exponent = Rat((7 * ell * p + 3 * p) * n, 10 * ell * p + 10) +
                            Rat(out.t * (7 - 3 * p), 10);
    }
    return out;
}

bool nsf2_holds(const Nsf2Bound& bound, const BigInt& count) {
    if (bound.exact) return count == *bound.exact;
    return leq_mult_pow2(count, bound.multiplier, bound.log2_exponent);
}

Nsf3Constant nsf3_constant(long long p, long long q) {
    Nsf3Constant out;
    if (q >= 2) {
        out.applicable = p * (2 * q - 2) > q * (3 * q - 2);
        if (out.applicable) {
            double r = std::exp2(static_cast<double>(3 * q - 2 * p) / (5.0 * q));
            out.c = std::exp2(-2.0 * p / (5.0 * q)) / (1.0 - r);
        }
    } else if (q == 1) {
        out.applicable = p >= 3;
        if (out.applicable) {
            double r = std::exp2((7.0 - 3.0 * p) / 10.0);
            out.c = r / (1.0 - r);
        }
    }
    return out;
}

std::map<long long, long long> component_census(const PathGraph& g) {
    // Union-find over [m, n].
    std::vector<long long> parent(static_cast<std::size_t>(g.vertex_count()));
    for (std::size_t i = 0; i < parent.size(); ++i) parent[i] = static_cast<long long>(i);
    auto find = [&](long long x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] =
                parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    };
    for (auto [u, v] : g.edges) parent[static_cast<std::size_t>(find(u - g.m))] = find(v - g.m);
    std::unordered_map<long long, long long> size;
    for (long long i = 0; i < g.vertex_count(); ++i) ++size[find(i)];
    std::map<long long, long long> census;
    for (auto [root, s] : size) ++census[s];
    return census;
}

namespace {

// Exhaustive per-component scan; independent of any path-structure claim.
struct DirectScan {
    std::vector<std::vector<long long>> components;        // vertex lists
    std::vector<std::vector<std::pair<int, int>>> comp_edges;  // index pairs

    explicit DirectScan(const PathGraph& g) {
        std::map<long long, std::vector<long long>> adj;
        for (auto [u, v] : g.edges) {
            adj[u].push_back(v);
            adj[v].push_back(u);
        }
        std::map<long long, int> comp_of;
        for (long long v = g.m; v <= g.n; ++v) {
            if (comp_of.count(v)) continue;
            int id = static_cast<int>(components.size());
            components.emplace_back();
            std::vector<long long> stack{v};
            comp_of[v] = id;
            while (!stack.empty()) {
                long long u = stack.back();
                stack.pop_back();
                components[static_cast<std::size_t>(id)].push_back(u);
                if (auto it = adj.find(u); it != adj.end())
                    for (long long w : it->second)
                        if (!comp_of.count(w)) {
                            comp_of[w] = id;
                            stack.push_back(w);
                        }
            }
            std::sort(components.back().begin(), components.back().end());
        }
        comp_edges.resize(components.size());
        for (auto [u, v] : g.edges) {
            int id = comp_of[u];
            const auto& verts = components[static_cast<std::size_t>(id)];
            auto idx = [&](long long x) {
                return static_cast<int>(std::lower_bound(verts.begin(), verts.end(), x) -
                                        verts.begin());
            };
            comp_edges[static_cast<std::size_t>(id)].emplace_back(idx(u), idx(v));
        }
    }

    // (count of IS, count of IS containing `pin`, max IS, max IS containing `pin`)
    struct CompResult {
        BigInt count = 0, count_pinned = 0;
        long long max = 0, max_pinned = -1;
    };

    CompResult scan(std::size_t id, long long pin) const {
        const auto& verts = components[id];
        if (verts.size() > 30)
            throw BudgetExceeded("direct scan limited to components of <= 30 vertices");
        int sz = static_cast<int>(verts.size());
        int pin_idx = -1;
        for (int i = 0; i < sz; ++i)
            if (verts[static_cast<std::size_t>(i)] == pin) pin_idx = i;
        CompResult r;
        for (std::uint32_t s = 0; s < (1u << sz); ++s) {
            bool ok = true;
            for (auto [a, b] : comp_edges[id])
                if ((s >> a & 1) && (s >> b & 1)) { ok = false; break; }
            if (!ok) continue;
            long long bits = std::popcount(s);
            ++r.count;
            r.max = std::max(r.max, bits);
            if (pin_idx >= 0 && (s >> pin_idx & 1)) {
                ++r.count_pinned;
                r.max_pinned = std::max(r.max_pinned, bits);
            }
        }
        return r;
    }
};

}  // namespace

long long direct_max_is(const PathGraph& g) {
    DirectScan d(g);
    long long total = 0;
    for (std::size_t i = 0; i < d.components.size(); ++i) total += d.scan(i, -1).max;
    return total;
}

long long direct_max_is_containing(const PathGraph& g, long long v) {
    DirectScan d(g);
    long long total = 0;
    for (std::size_t i = 0; i < d.components.size(); ++i) {
        auto r = d.scan(i, v);
        bool has_v = std::binary_search(d.components[i].begin(), d.components[i].end(), v);
        total += has_v ? r.max_pinned : r.max;
    }
    return total;
}

BigInt direct_is_count(const PathGraph& g) {
    DirectScan d(g);
    BigInt total = 1;
    for (std::size_t i = 0; i < d.components.size(); ++i) total *= d.scan(i, -1).count;
    return total;
}

BigInt direct_is_count_containing(const PathGraph& g, long long v) {
    DirectScan d(g);
    BigInt total = 1;
    for (std::size_t i = 0; i < d.components.size(); ++i) {
        auto r = d.scan(i, v);
        bool has_v = std::binary_search(d.components[i].begin(), d.components[i].end(), v);
        total *= has_v ? r.count_pinned : r.count;
    }
    return total;
}

}  // namespace sfl::pathgraph
