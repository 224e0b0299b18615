#pragma once

#include <string>
#include <vector>

#include "turan/graph.hpp"

namespace turan {

/// Stable identifier of an isomorphism class: the graph6 string of the
/// canonically relabeled graph.  Equal keys iff isomorphic graphs.
struct CanonicalKey {
    std::string bytes;
    auto operator<=>(const CanonicalKey&) const = default;
};

/// Canonical labeling as a position list: order[i] is the original vertex
/// placed at canonical position i.  The chosen labeling minimizes the
/// relabeled adjacency matrix lexicographically over the refinement tree.
std::vector<int> canonical_labeling(const Graph& g);

/// The graph relabeled into canonical positions.
Graph canonical_form(const Graph& g);

CanonicalKey canonical_key(const Graph& g);

bool is_isomorphic(const Graph& a, const Graph& b);

/// Automorphisms discovered during the canonical search, as vertex maps.
/// Sound for orbit pruning (every entry is a genuine automorphism); not
/// guaranteed to generate the full group.
std::vector<std::vector<int>> automorphism_generators(const Graph& g);

} // namespace turan
