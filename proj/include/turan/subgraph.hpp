#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "turan/graph.hpp"

namespace turan {

/// Injective map pattern vertex -> host vertex preserving pattern edges.
struct Embedding {
    std::vector<int> map;
};

bool is_valid_embedding(const Graph& host, const Graph& pattern, const Embedding& emb);

struct SubgraphStats {
    std::uint64_t nodes = 0;            // candidate assignments tried
    std::uint64_t degree_prunes = 0;    // hosts dropped by degree filtering
    std::uint64_t adjacency_prunes = 0; // empty candidate sets hit
    bool parity_rejected = false;       // odd-cycle pattern vs bipartite host
    int max_depth = 0;
};

/// Not-necessarily-induced subgraph search.  Backtracking over pattern
/// vertices in descending-degree connectivity order; candidates filtered by
/// degree and by bitset intersection of mapped neighborhoods.  A bipartite
/// host rejects non-bipartite patterns outright.  Deterministic.
std::optional<Embedding> find_subgraph(const Graph& host, const Graph& pattern,
                                       SubgraphStats* stats = nullptr);

} // namespace turan
