#pragma once

#include <vector>

#include "turan/ballooning.hpp"
#include "turan/graph.hpp"

namespace turan {

/// e(T_p(n)): balanced complete multipartite edge count.  Value-level, so
/// n may exceed the 128-vertex construction capacity.
long long turan_edges(int p, long long n);

/// f(n, q) = e(I_{q-1} v T_2(n-q+1)) = e(T_2(n-q+1)) + (q-1)(n-q+1).
long long f_value(long long n, int q);

/// A member of F(n, q, k, L): T_2(n-q+1) joined below a (q-1)-vertex graph
/// Q, with K_{k,k} planted inside one Turan class.  side selects the class
/// (0: larger/first, 1: second).
struct ConstructionRecipe {
    long long n = 0;
    int q = 1;
    int k = 0;
    Graph q_graph; // order q-1
    int side = 0;

    long long edge_total() const; // f(n,q) + e(Q) + k^2
};

/// Materializes the recipe (requires n <= 128).  Vertex layout: Q first,
/// then class 1, then class 2 of the Turan part; K_{k,k} occupies the first
/// 2k vertices of the chosen class.
Graph build_family(const ConstructionRecipe& recipe);

/// Exact ex(order, family) with the complete canonical extremal set.
/// Families whose members are all larger than `order` short-circuit to the
/// complete graph without enumeration; an empty family does the same.
struct ExResult {
    long long max_edges = 0;
    std::vector<Graph> extremal;
};
ExResult ex_small(int order, const std::vector<Graph>& family, int jobs = 1);

/// Theorem-level bounds for ex(n, H(t)) from the 2-decomposition profile:
///   lower = f(n, q) + ex(q-1, B),  upper = lower + (k-1)^2,
/// with equality certified only through the constructions in the recipes.
struct BoundsReport {
    int q = 0;
    int k = 0;
    long long lower = 0;
    long long upper = 0;
    bool tight = false; // k == 1: the bounds pin the exact value
    std::vector<ConstructionRecipe> recipes; // F(n, q, k-1, B)
    ExtremalProfile extremal_profile;
    DecompositionFamily family;
};
BoundsReport theorem_bounds(const BallooningSpec& spec, long long n, int jobs = 1);

/// Closed forms for the worked corollaries.
enum class CorollaryKind { Star, Path, EvenCycle, GoodTree };

struct CorollaryQuery {
    CorollaryKind kind = CorollaryKind::Star;
    int a = 0;        // star: number of edges
    int m = 0;        // path: number of edges; even cycle: cycle order
    Graph tree;       // good tree
    int t = 5;
    long long n = 0;
};

struct CorollaryResult {
    long long value = 0;
    bool attains_upper = false; // closed form matches the theorem's upper end
    std::vector<ConstructionRecipe> recipes;
};
CorollaryResult corollary_value(const CorollaryQuery& query, int jobs = 1);

/// Chvatal-Hanson bound: max edges with matching number <= alpha and max
/// degree <= delta.
long long phi(long long alpha, long long delta);

} // namespace turan
