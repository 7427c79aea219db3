#include "sfl/linkgraph.hpp"

#include <algorithm>
#include <bit>
#include <map>

namespace sfl::linkgraph {
namespace {

std::uint64_t bit_of(long long element) { return 1ULL << (element - 1); }

}  // namespace

bool LinkGraph::has_vertex(long long v) const {
    return std::binary_search(vertices.begin(), vertices.end(), v);
}

bool LinkGraph::adjacent(long long u, long long v) const {
    if (u == v) return false;
    return edges.count({std::min(u, v), std::max(u, v)}) != 0;
}

LinkGraph build_link(const PqEquation& eq, const std::set<long long>& s,
                     const std::set<long long>& b) {
    for (long long v : s)
        if (b.count(v)) throw std::invalid_argument("build_link: S and B must be disjoint");
    if (s.size() + b.size() > 20'000)
        throw BudgetExceeded("build_link: ground set exceeds budget");
    LinkGraph g;
    g.vertices.assign(b.begin(), b.end());
    g.seed.assign(s.begin(), s.end());

    std::vector<long long> all;
    all.insert(all.end(), s.begin(), s.end());
    all.insert(all.end(), b.begin(), b.end());
    std::sort(all.begin(), all.end());

    // Every triple with support inside S u B arises as {x, y, px+qy}.
    for (long long x : all)
        for (long long y : all) {
            long long z = eq.p * x + eq.q * y;
            if (z > all.back()) break;
            if (!std::binary_search(all.begin(), all.end(), z)) continue;
            long long t[3] = {x, y, z};
            int in_b = 0, in_s = 0;
            for (long long v : t) (b.count(v) ? in_b : in_s)++;
            if (in_b == 2 && in_s == 1) {
                long long u = 0, w = 0;
                bool first = true;
                for (long long v : t)
                    if (b.count(v)) (first ? u : w) = v, first = false;
                if (u != w)
                    g.edges.insert({std::min(u, w), std::max(u, w)});
                else
                    g.loops.insert(u);  // {x, x, z} with z in S
            } else if (in_b == 1 && in_s == 2) {
                for (long long v : t)
                    if (b.count(v)) g.loops.insert(v);  // {x, z, z'} with z, z' in S
            }
        }
    return g;
}

bool is_triangle_free(const LinkGraph& g) {
    std::map<long long, std::vector<long long>> adj;
    for (auto [u, v] : g.edges) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    for (auto& [v, nb] : adj) std::sort(nb.begin(), nb.end());
    for (auto [u, v] : g.edges) {
        const auto& a = adj[u];
        const auto& b = adj[v];
        std::size_t i = 0, j = 0;
        while (i < a.size() && j < b.size()) {
            if (a[i] == b[j]) return false;
            (a[i] < b[j]) ? ++i : ++j;
        }
    }
    return true;
}

namespace {

// Loop-free part of g split into connected components, each with local
// adjacency masks (component sizes are capped at 64 bits).
struct Components {
    std::vector<std::vector<long long>> verts;           // sorted per component
    std::vector<std::vector<std::uint64_t>> adj;         // local adjacency masks

    explicit Components(const LinkGraph& g) {
        std::vector<long long> keep;
        for (long long v : g.vertices)
            if (!g.loops.count(v)) keep.push_back(v);
        std::map<long long, std::vector<long long>> nb;
        for (auto [u, v] : g.edges) {
            if (g.loops.count(u) || g.loops.count(v)) continue;
            nb[u].push_back(v);
            nb[v].push_back(u);
        }
        std::map<long long, int> comp_of;
        for (long long v : keep) {
            if (comp_of.count(v)) continue;
            int id = static_cast<int>(verts.size());
            verts.emplace_back();
            std::vector<long long> stack{v};
            comp_of[v] = id;
            while (!stack.empty()) {
                long long u = stack.back();
                stack.pop_back();
                verts[static_cast<std::size_t>(id)].push_back(u);
                if (auto it = nb.find(u); it != nb.end())
                    for (long long w : it->second)
                        if (!comp_of.count(w)) {
                            comp_of[w] = id;
                            stack.push_back(w);
                        }
            }
            std::sort(verts.back().begin(), verts.back().end());
        }
        adj.resize(verts.size());
        for (std::size_t id = 0; id < verts.size(); ++id) {
            const auto& vs = verts[id];
            if (vs.size() > 64) throw BudgetExceeded("MIS component exceeds 64 vertices");
            adj[id].assign(vs.size(), 0);
            for (std::size_t i = 0; i < vs.size(); ++i)
                if (auto it = nb.find(vs[i]); it != nb.end())
                    for (long long w : it->second) {
                        auto j = static_cast<std::size_t>(
                            std::lower_bound(vs.begin(), vs.end(), w) - vs.begin());
                        adj[id][i] |= 1ULL << j;
                    }
        }
    }
};

// Bron-Kerbosch with pivoting on the complement graph: maximal independent
// sets of the component are maximal cliques of its complement. Deterministic
// (pivot = lowest index maximizing |P & N(u)|, candidates ascending).
struct MisEnum {
    int sz;
    std::vector<std::uint64_t> cadj;  // complement adjacency
    std::vector<std::uint64_t> out;

    explicit MisEnum(const std::vector<std::uint64_t>& adj) : sz(static_cast<int>(adj.size())) {
        std::uint64_t full = (sz == 64) ? ~0ULL : ((1ULL << sz) - 1);
        cadj.resize(adj.size());
        for (int i = 0; i < sz; ++i)
            cadj[static_cast<std::size_t>(i)] =
                full & ~adj[static_cast<std::size_t>(i)] & ~(1ULL << i);
    }

    void run(std::uint64_t r, std::uint64_t p, std::uint64_t x) {
        if (!p && !x) {
            out.push_back(r);
            return;
        }
        int pivot = -1, best = -1;
        std::uint64_t px = p | x;
        while (px) {
            int u = std::countr_zero(px);
            px &= px - 1;
            int deg = std::popcount(p & cadj[static_cast<std::size_t>(u)]);
            if (deg > best) best = deg, pivot = u;
        }
        std::uint64_t cands = p & ~cadj[static_cast<std::size_t>(pivot)];
        while (cands) {
            int v = std::countr_zero(cands);
            cands &= cands - 1;
            std::uint64_t vb = 1ULL << v;
            run(r | vb, p & cadj[static_cast<std::size_t>(v)], x & cadj[static_cast<std::size_t>(v)]);
            p &= ~vb;
            x |= vb;
        }
    }
};

std::vector<std::uint64_t> component_mis(const std::vector<std::uint64_t>& adj) {
    MisEnum e(adj);
    std::uint64_t full = (e.sz == 64) ? ~0ULL : ((1ULL << e.sz) - 1);
    e.run(0, full, 0);
    return std::move(e.out);
}

}  // namespace

std::vector<std::vector<long long>> enumerate_mis(const LinkGraph& g, long long max_vertices,
                                                  long long max_results) {
    if (static_cast<long long>(g.vertices.size()) > max_vertices)
        throw BudgetExceeded("enumerate_mis: vertex count exceeds budget");
    Components comps(g);
    std::vector<std::vector<long long>> result{{}};
    for (std::size_t id = 0; id < comps.verts.size(); ++id) {
        auto local = component_mis(comps.adj[id]);
        std::vector<std::vector<long long>> next;
        if (static_cast<long long>(result.size()) * static_cast<long long>(local.size()) >
            max_results)
            throw BudgetExceeded("enumerate_mis: result count exceeds budget");
        next.reserve(result.size() * local.size());
        for (const auto& base : result)
            for (std::uint64_t mask : local) {
                std::vector<long long> s = base;
                std::uint64_t mm = mask;
                while (mm) {
                    int i = std::countr_zero(mm);
                    mm &= mm - 1;
                    s.push_back(comps.verts[id][static_cast<std::size_t>(i)]);
                }
                next.push_back(std::move(s));
            }
        result = std::move(next);
    }
    for (auto& s : result) std::sort(s.begin(), s.end());
    std::sort(result.begin(), result.end());
    return result;
}

BigInt count_mis(const LinkGraph& g) {
    Components comps(g);
    BigInt total = 1;
    for (std::size_t id = 0; id < comps.verts.size(); ++id)
        total *= static_cast<unsigned long long>(component_mis(comps.adj[id]).size());
    return total;
}

MisBounds check_mis_bounds(const LinkGraph& g) {
    MisBounds out;
    out.count = count_mis(g);
    out.triangle_free = is_triangle_free(g);
    // count <= 3^(v/3)  <=>  count^3 <= 3^v, v counting looped vertices too.
    auto v = static_cast<unsigned long long>(g.vertices.size());
    out.mm_ok = out.count * out.count * out.count <= ipow(3, v);
    if (out.triangle_free) out.ht_ok = out.count * out.count <= pow2(v);
    return out;
}

BigInt extension_count(const PqEquation& eq, const std::set<long long>& s,
                       const std::set<long long>& b, long long n,
                       const oracle::Budget& budget) {
    for (long long v : s)
        if (b.count(v)) throw std::invalid_argument("extension_count: S and B must be disjoint");
    if (!s.empty() && *s.rbegin() > n) throw std::invalid_argument("extension_count: S not in [n]");
    if (!b.empty() && *b.rbegin() > n) throw std::invalid_argument("extension_count: B not in [n]");
    // Only S's freeness is required for the search; B may contain triples
    // (the S = empty, B = [n] case counts all maximal L-free sets).
    if (!oracle::is_solution_free(eq, s))
        throw std::invalid_argument("extension_count: S must be L-free");
    if (n > budget.max_n_maximal)
        throw BudgetExceeded("extension_count: n exceeds budget");

    auto sys = oracle::ConflictSystem::build(eq, n);
    std::uint64_t forced = 0;
    for (long long v : s) forced |= bit_of(v);
    std::vector<long long> cand(b.begin(), b.end());

    unsigned long long total = 0;
    std::uint64_t chosen = forced;
    auto leaf_maximal = [&]() {
        for (long long e = 1; e <= n; ++e)
            if (!(chosen & bit_of(e)) && sys.addable(chosen, static_cast<int>(e))) return false;
        return true;
    };
    // Decide candidates in descending order; S stays fixed.
    auto rec = [&](auto&& self, long long idx) -> void {
        if (idx < 0) {
            if (leaf_maximal()) ++total;
            return;
        }
        long long e = cand[static_cast<std::size_t>(idx)];
        self(self, idx - 1);
        if (sys.addable(chosen, static_cast<int>(e))) {
            chosen |= bit_of(e);
            self(self, idx - 1);
            chosen &= ~bit_of(e);
        }
    };
    rec(rec, static_cast<long long>(cand.size()) - 1);
    return BigInt(total);
}

Msf2Construction msf2_construction(long long p, long long n) {
    if (p < 2) throw std::invalid_argument("msf2_construction requires p >= 2");
    Msf2Construction out;
    out.p = p;
    out.n = n;
    out.s = ((p - 1) * n) / (3 * p * p - 1);
    if (out.s < 1) throw Infeasible("msf2: floor((p-1)n/(3p^2-1)) < 1, n too small");
    out.a = (n - out.s) / p;
    out.b_lo = out.a + 1;
    out.b_hi = out.a + 3 * p * out.s;
    if (2 * out.s > out.a)
        throw Infeasible("msf2: seed {s,2s} not below the interval (2s > a)");
    if (out.b_hi > n) throw Infeasible("msf2: a + 3ps > n");

    std::set<long long> seed{out.s, 2 * out.s};
    std::set<long long> b;
    for (long long v = out.b_lo; v <= out.b_hi; ++v) b.insert(v);
    out.graph = build_link(PqEquation(p, 1), seed, b);

    out.triangle_count = p * out.s;
    std::set<std::pair<long long, long long>> expected;
    for (long long i = 1; i <= out.triangle_count; ++i) {
        long long v0 = out.a + i, v1 = v0 + out.triangle_count, v2 = v1 + out.triangle_count;
        expected.insert({v0, v1});
        expected.insert({v1, v2});
        expected.insert({v0, v2});
    }
    out.triangles_ok = (out.graph.edges == expected);

    for (long long c : {(p + 1) * out.s, (p + 2) * out.s, (2 * p + 1) * out.s, (2 * p + 2) * out.s})
        if (c >= out.b_lo && c <= out.b_hi) out.loop_candidates.push_back(c);
    std::sort(out.loop_candidates.begin(), out.loop_candidates.end());
    out.loop_candidates.erase(
        std::unique(out.loop_candidates.begin(), out.loop_candidates.end()),
        out.loop_candidates.end());
    out.loops.assign(out.graph.loops.begin(), out.graph.loops.end());
    out.loops_ok = std::includes(out.loop_candidates.begin(), out.loop_candidates.end(),
                                 out.loops.begin(), out.loops.end());

    for (long long i = 1; i <= out.triangle_count; ++i) {
        long long v0 = out.a + i;
        if (out.graph.loops.count(v0) || out.graph.loops.count(v0 + out.triangle_count) ||
            out.graph.loops.count(v0 + 2 * out.triangle_count))
            ++out.affected_triangles;
    }
    out.mis_count = count_mis(out.graph);
    out.mis_ok = out.mis_count >=
                 ipow(3, static_cast<unsigned long long>(out.triangle_count - out.affected_triangles));
    return out;
}

MatchingConstruction msf6_construction(long long p, long long q, long long n) {
    if (q < 2 || p < q) throw std::invalid_argument("msf6_construction requires p >= q >= 2");
    if (n <= 2 * p) throw Infeasible("msf6: requires n > 2p");
    MatchingConstruction out;
    out.p = p;
    out.q = q;
    out.n = n;
    out.b = (n - p) / q;
    if (p >= q * q) {
        out.case_id = 1;
        out.a = (n - q) / (q * q) + 1;
        out.ell = Rat(n * (q - 1) - p * q + q - 2 * q * q, q * q);
    } else if (p > q) {
        out.case_id = 2;
        out.a = (n - q) / p + 1;
        out.ell = Rat(n * (p - q) - p * p + q * q - 2 * p * q, p * q);
    } else {
        out.case_id = 3;
        out.a = n / (2 * q) + 1;
        out.ell = Rat(n - 6 * q, 2 * q);
    }
    out.cond1 = q * out.a + p > out.b;
    out.cond2 = q * out.b + p <= n;
    out.cond3 = p * out.a + q > n;
    out.cond3_required = (p != q);
    out.cond4 = p + q < out.a;

    for (long long i = out.a; i <= out.b; ++i) {
        out.interval.push_back(i);
        out.image.push_back(q * i + p);
    }

    std::set<long long> b_set;
    for (long long v = n / (p + q) + 1; v <= n; ++v) b_set.insert(v);
    LinkGraph g = build_link(PqEquation(p, q), {1}, b_set);

    // Drop any looped vertex of I u J together with its matching partner.
    std::set<long long> pick(out.interval.begin(), out.interval.end());
    for (long long i : out.interval) {
        long long j = q * i + p;
        if (g.loops.count(i) || g.loops.count(j)) {
            pick.erase(i);
            out.dropped.push_back(i);
            out.dropped.push_back(j);
        }
    }
    out.matching_edges = static_cast<long long>(pick.size());

    // Induced check: on I' u J' the graph must be exactly the matching.
    std::set<long long> span;
    std::set<std::pair<long long, long long>> expected;
    for (long long i : pick) {
        long long j = q * i + p;
        span.insert(i);
        span.insert(j);
        expected.insert({std::min(i, j), std::max(i, j)});
    }
    std::set<std::pair<long long, long long>> induced;
    for (auto [u, v] : g.edges)
        if (span.count(u) && span.count(v)) induced.insert({u, v});
    bool span_loop_free = std::none_of(span.begin(), span.end(),
                                       [&](long long v) { return g.loops.count(v) != 0; });
    out.induced_ok = (induced == expected) && span_loop_free &&
                     static_cast<long long>(span.size()) == 2 * out.matching_edges;
    out.achieved_ok = Rat(out.matching_edges) >= out.ell;

    out.matching_subgraph.vertices.assign(span.begin(), span.end());
    out.matching_subgraph.edges = induced;
    out.matching_subgraph.seed = {1};
    return out;
}

}  // namespace sfl::linkgraph
