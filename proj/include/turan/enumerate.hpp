#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "turan/canonical.hpp"
#include "turan/graph.hpp"
#include "turan/subgraph.hpp"

namespace turan {

/// Compact graph code for enumeration levels: order plus the upper
/// triangle bits, enough for 16 vertices.
struct PackedGraph {
    std::uint8_t order = 0;
    std::array<std::uint64_t, 2> bits{0, 0};

    auto operator<=>(const PackedGraph&) const = default;
};

PackedGraph pack_graph(const Graph& g);
Graph unpack_graph(const PackedGraph& p);

struct EnumerationOptions {
    int max_degree = -1;   // -1: unconstrained
    bool bipartite_only = false;
    int min_edges = 0;
    int max_edges = -1;    // -1: unconstrained
};

/// One canonical representative per isomorphism class at the given order,
/// generated by canonical augmentation and sorted by packed canonical form.
/// Unconstrained orders up to 9; up to 12 under a max-degree cap of 2.
std::vector<PackedGraph> enumerate_graphs(int order, const EnumerationOptions& options = {},
                                          int jobs = 1);

std::size_t enumerate_count(int order, const EnumerationOptions& options = {}, int jobs = 1);

/// Iteration facade over the enumeration with optional graph6 spill.
class EnumerationStream {
public:
    EnumerationStream(int order, const EnumerationOptions& options = {}, int jobs = 1)
        : graphs_(enumerate_graphs(order, options, jobs)) {}

    std::optional<Graph> next() {
        if (position_ >= graphs_.size()) return std::nullopt;
        return unpack_graph(graphs_[position_++]);
    }
    std::size_t size() const { return graphs_.size(); }
    void reset() { position_ = 0; }

    /// One graph6 code per line, in stream order.
    std::string to_graph6_lines() const;

private:
    std::vector<PackedGraph> graphs_;
    std::size_t position_ = 0;
};

/// Exact Turan number at small order: enumeration with hereditary
/// freeness pruning and an edge-count branch-and-bound.  Returns the
/// maximum plus the full canonical extremal set.
struct TuranOracleResult {
    int order = 0;
    long long max_edges = 0;
    std::vector<Graph> extremal; // canonical forms, sorted
};
TuranOracleResult turan_oracle(int order, const std::vector<Graph>& family, int jobs = 1);

/// turan_oracle behind a JSON file cache keyed by (order, canonical family
/// keys).  An empty cache_dir disables caching; unreadable cache entries
/// are recomputed and rewritten.
TuranOracleResult turan_oracle_cached(int order, const std::vector<Graph>& family,
                                      const std::string& cache_dir, int jobs = 1);

/// find_subgraph wrapped as a machine-checkable verdict: either the
/// embedding or a freeness certificate with search statistics.
struct FreenessCertificate {
    bool free = false;
    std::optional<Embedding> embedding;
    SubgraphStats stats;
    std::vector<std::string> rules; // pruning rules that were active
};
FreenessCertificate certify_free(const Graph& host, const Graph& pattern);

} // namespace turan
