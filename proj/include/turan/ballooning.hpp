#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "turan/canonical.hpp"
#include "turan/graph.hpp"
#include "turan/invariants.hpp"
#include "turan/subgraph.hpp"

namespace turan {

/// Base graph H, odd t, and one odd cycle length >= t per edge (edge-id
/// order of Graph::edges()).
struct BallooningSpec {
    Graph base;
    int t = 5;
    std::vector<int> lengths;

    static BallooningSpec uniform(Graph base, int t);
    void validate() const; // throws std::invalid_argument on bad shape
};

/// One expanded cycle: base edge (u, v) plus the cycle's vertex sequence
/// u, w_1, ..., w_{len-2}, v in the ballooned graph.
struct BalloonCycle {
    int u = 0;
    int v = 0;
    std::vector<int> vertices;
};

struct BalloonLayout {
    Graph graph;
    int base_order = 0;
    std::vector<BalloonCycle> cycles;
};

/// H(t): every base edge uv kept and completed into an odd cycle of its
/// assigned length through fresh vertices.  Base ids are preserved.
BalloonLayout balloon_layout(const BallooningSpec& spec);
Graph balloon(const BallooningSpec& spec);

/// Vertex division: chosen incident edges split off as pendant singletons,
/// the nonempty main block keeps the original id.
struct DivisionPlan {
    struct VertexDivision {
        int vertex = 0;
        std::vector<std::pair<int, int>> pendant_edges;
    };
    std::vector<VertexDivision> divisions;
};
Graph divide(const Graph& g, const DivisionPlan& plan);

/// All graphs reachable by simultaneous divisions, canonical forms sorted
/// by key.  Contains the graph itself and e(G) disjoint edges.
std::vector<Graph> division_family(const Graph& g, int jobs = 1);

/// Witness that the ballooning embeds into (M u I_m) v I_m with
/// m = nu(H(t)).  Host vertex ids: M first, then Y1, then Y2.
struct MembershipWitness {
    Graph host;
    int m_order = 0;
    int y_size = 0;
    Embedding embedding; // balloon vertex -> host vertex
};

/// Structured decision procedure for 2-decomposition membership of a
/// candidate with e(M) = e(base).  Returns the witness embedding on
/// success.
std::optional<MembershipWitness> decomposition_membership(const Graph& m,
                                                          const BallooningSpec& spec);

/// Slow definitional oracle: generic subgraph search on the full join
/// host.  Exponential on dense joins; kept as a correctness cross-check.
std::optional<MembershipWitness> decomposition_membership_generic(const Graph& m,
                                                                  const BallooningSpec& spec);

struct FamilyMember {
    Graph graph; // canonical form
    CanonicalKey key;
    MembershipWitness witness;
};

struct DecompositionFamily {
    BallooningSpec spec;
    std::vector<FamilyMember> members; // sorted by key
};

/// The 2-decomposition family of H(t): division-family candidates passing
/// the membership test.  Requires a bipartite base, t >= 5 (ScopeError
/// otherwise) and nu(base) <= 12.
DecompositionFamily decomposition_family(const BallooningSpec& spec, int jobs = 1);

/// q, S, k, B computed from the family.
struct ExtremalProfile {
    int q = 0;
    int k = 0;
    struct CoveringRef {
        int member = 0;
        VertexSet covering;
    };
    std::vector<CoveringRef> coverings;   // S: all independent coverings of size q
    std::vector<Graph> b_family;          // B: canonical forms, sorted by key
    bool b_fallback = false;              // true when B is the fallback {K_q}
};
ExtremalProfile profile(const DecompositionFamily& family);

} // namespace turan
