#pragma once

#include <vector>

#include "turan/graph.hpp"

namespace turan {

/// Maximum matching size, exact (branch and bound over vertices).
int matching_number(const Graph& g);

/// Minimum vertex cover size, exact.
int vertex_cover_number(const Graph& g);

/// Every vertex cover of size strictly below `bound` (all of them, not just
/// minimal ones).  Feeds the sub-q covering family computation.
std::vector<VertexSet> vertex_covers_below(const Graph& g, int bound);

/// Canonical color classes per the convention for disconnected graphs:
/// |A| minimal, then min{d(x): x in A} minimal, ties broken by the
/// lexicographically smallest A.  Throws std::invalid_argument when the
/// graph is not bipartite.
struct Bipartition {
    VertexSet a;
    VertexSet b;
};
Bipartition bipartition(const Graph& g);

/// gamma(G) plus the complete list of minimum independent coverings.
/// For a connected graph the list is {A} or {A, B}.
struct IndependentCoverings {
    int gamma = 0;
    std::vector<VertexSet> coverings;
};
IndependentCoverings independent_covering(const Graph& g);

} // namespace turan
