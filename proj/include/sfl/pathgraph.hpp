// The auxiliary graph G_m on vertex set [m, n] with edges {c, pm+qc}, its
// y-sequence decomposition into path components, independent-set counts via
// Fibonacci products, and the closed-form bounds hanging off it: the
// two-case structure bound on L-free sets, the constants C_k with their
// defining inequality, the five-case f(n,L,m) bound, and the counting
// constant of the Theta(2^mu) statement.
#pragma once

#include "sfl/error.hpp"
#include "sfl/numeric.hpp"

#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace sfl::pathgraph {

struct PathGraph {
    long long p = 0, q = 0, n = 0, m = 0;  // vertices are [m, n]
    std::vector<std::pair<long long, long long>> edges;  // {c, pm+qc}

    long long vertex_count() const { return n - m + 1; }
};

PathGraph build_gm(long long p, long long q, long long n, long long m);

struct PathDecomposition {
    long long p = 0, q = 0, n = 0, m = 0;
    std::vector<long long> ys;               // y_0 .. y_k
    long long k = 0;                         // path parameter
    std::map<long long, long long> counts;   // component size -> N(G_m, size)
};

// Component counts from the y-sequence recursion alone (no graph is built).
// The degenerate k = 0 case (edgeless G_m) is reported as N(1) = n - m + 1.
PathDecomposition decompose(long long p, long long q, long long n, long long m);

// Maximum independent set size of G_m: sum of ceil(i/2) * N(G_m, i). This
// also equals the maximum over independent sets containing m, since m is an
// endpoint of a largest path component and an alternating set starting at a
// chosen endpoint attains ceil(size/2).
long long max_is_gm(long long p, long long q, long long n, long long m);

struct IsCount {
    BigInt total;          // product of F(size+2) over components
    BigInt containing_m;   // m's component factor replaced by F(size)
};
IsCount count_is_gm(long long p, long long q, long long n, long long m);

// Independent sets of an n-vertex graph that contain a fixed vertex of a
// matching with e edges: at most 3^(e-1) * 2^(n-2e). With contains_v false,
// the unconstrained partition bound 3^e * 2^(n-2e).
BigInt matching_is_bound(long long v_count, long long e, bool contains_v);

struct StructureBound {
    int case_id = 0;                    // 1 or 2
    RationalBound bound;
    std::optional<Rat> n_threshold;     // case 2: bound proven only for n >= this
    bool threshold_met = true;
    long long t = 0;
    long long m = 0;
};

// The two-case bound on |S| for L-free S with min(S) = floor(n/(p+q)) - t.
// Case selection is exact rational; the boundary t = threshold goes to case 2.
StructureBound structure_bound(long long p, long long q, long long n, long long t);

// C_k for q >= 2, exact.
RationalBound c_k(long long p, long long q, long long k);

// Left side of the claim-a inequality: ((q^2+1)/(q^2+q+1) - C_k) * (q^k + p*sum q^i).
Rat claim_a_value(long long p, long long q, long long k);
bool check_claim_a(long long p, long long q, long long k);  // value >= k

struct Nsf2Bound {
    int case_id = 0;                 // 1..5 for (i)..(v)
    std::optional<BigInt> exact;     // case (i): f(n,L,m) equals this
    Rat multiplier = 1;              // case (iv): 4/3
    Rat log2_exponent = 0;           // bound = multiplier * 2^log2_exponent
    long long t = 0;
    long long path_k = 0;
};

// The five-case upper bound on f(n, L, m).
Nsf2Bound nsf2_bound(long long p, long long q, long long n, long long m);

// Exact check of count against an Nsf2Bound (equality for case (i)).
bool nsf2_holds(const Nsf2Bound& bound, const BigInt& count);

struct Nsf3Constant {
    bool applicable = false;
    double c = 0.0;  // f(n,L) <= (3/2 + o(1) + C) * 2^mu when applicable
};
Nsf3Constant nsf3_constant(long long p, long long q);

// Reference computations on the explicit graph, used to validate the
// formula-based operations above. Component-wise exhaustive scans.
std::map<long long, long long> component_census(const PathGraph& g);
long long direct_max_is(const PathGraph& g);
long long direct_max_is_containing(const PathGraph& g, long long v);
BigInt direct_is_count(const PathGraph& g);
BigInt direct_is_count_containing(const PathGraph& g, long long v);

}  // namespace sfl::pathgraph
