// Link graphs L_S[B]: vertex set B, an edge {x,y} when some z in S completes
// an L-triple, and a loop at x when {x,x,z} or {x,z,z'} does. Maximal
// independent set enumeration and counting (looped vertices are deleted
// first; they can neither join an independent set nor block maximality),
// the Moon-Moser / Hujter-Tuza bounds, extension counts N(S,B), and the
// triangle-union and induced-matching lower-bound constructions.
#pragma once

#include "sfl/equation.hpp"
#include "sfl/error.hpp"
#include "sfl/numeric.hpp"
#include "sfl/oracle.hpp"

#include <optional>
#include <set>
#include <vector>

namespace sfl::linkgraph {

struct LinkGraph {
    std::vector<long long> vertices;                      // sorted
    std::set<std::pair<long long, long long>> edges;      // u < v, both in vertices
    std::set<long long> loops;
    std::vector<long long> seed;                          // the set S, sorted

    bool has_vertex(long long v) const;
    bool adjacent(long long u, long long v) const;
};

LinkGraph build_link(const PqEquation& eq, const std::set<long long>& s,
                     const std::set<long long>& b);

// Loops are ignored; true iff no three distinct vertices are pairwise adjacent.
bool is_triangle_free(const LinkGraph& g);

// Maximal independent sets of g with looped vertices removed. Enumeration is
// capped both on vertex count and on the number of sets produced; the count
// is exact for any size via per-component counting.
std::vector<std::vector<long long>> enumerate_mis(const LinkGraph& g,
                                                  long long max_vertices = 40,
                                                  long long max_results = 2'000'000);
BigInt count_mis(const LinkGraph& g);

struct MisBounds {
    BigInt count;
    bool triangle_free = false;
    bool mm_ok = false;                 // count <= 3^(v/3), all vertices counted
    std::optional<bool> ht_ok;          // count <= 2^(v/2), only when triangle-free
};
MisBounds check_mis_bounds(const LinkGraph& g);

// N(S, B): number of I subseteq B with S union I maximal L-free in [n].
BigInt extension_count(const PqEquation& eq, const std::set<long long>& s,
                       const std::set<long long>& b, long long n,
                       const oracle::Budget& budget = {});

// The triangle-union construction for px + y = z: link graph of {s, 2s} on
// [a+1, a+3ps] with s = floor((p-1)n/(3p^2-1)), a = floor((n-s)/p).
struct Msf2Construction {
    long long p = 0, n = 0, s = 0, a = 0;
    long long b_lo = 0, b_hi = 0;       // B = [b_lo, b_hi]
    long long triangle_count = 0;       // ps
    std::vector<long long> loop_candidates;  // {(p+1)s,(p+2)s,(2p+1)s,(2p+2)s} in B
    std::vector<long long> loops;            // loops actually present
    long long affected_triangles = 0;        // triangles containing a looped vertex
    BigInt mis_count;
    LinkGraph graph;
    bool triangles_ok = false;          // graph is exactly the ps disjoint triangles
    bool loops_ok = false;              // loops subseteq loop_candidates
    bool mis_ok = false;                // mis_count >= 3^(ps - affected)
};
Msf2Construction msf2_construction(long long p, long long n);

// The induced-matching construction for px + qy = z (p >= q >= 2): an
// interval I = [a, b] and its image J = {qi + p} inside L_{1}[B].
struct MatchingConstruction {
    long long p = 0, q = 0, n = 0;
    int case_id = 0;                    // 1: p >= q^2, 2: q < p < q^2, 3: p = q
    long long a = 0, b = 0;
    std::vector<long long> interval;    // I
    std::vector<long long> image;       // J
    Rat ell;                            // claimed exponent
    bool cond1 = false, cond2 = false, cond3 = false, cond4 = false;
    bool cond3_required = true;         // waived when p = q
    std::vector<long long> dropped;     // loop vertex and partner, when cond4 fails
    long long matching_edges = 0;
    bool induced_ok = false;            // G[I' u J'] is exactly the matching
    bool achieved_ok = false;           // matching_edges >= ceil(ell)
    LinkGraph matching_subgraph;        // induced subgraph on I' u J'
};
MatchingConstruction msf6_construction(long long p, long long q, long long n);

}  // namespace sfl::linkgraph
