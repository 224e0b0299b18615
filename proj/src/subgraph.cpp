#include "turan/subgraph.hpp"

#include <algorithm>

namespace turan {

bool is_valid_embedding(const Graph& host, const Graph& pattern, const Embedding& emb) {
    if (int(emb.map.size()) != pattern.order()) return false;
    std::vector<bool> used(host.order(), false);
    for (int image : emb.map) {
        if (image < 0 || image >= host.order() || used[image]) return false;
        used[image] = true;
    }
    for (auto [u, v] : pattern.edges())
        if (!host.has_edge(emb.map[u], emb.map[v])) return false;
    return true;
}

namespace {

struct Search {
    const Graph& host;
    const Graph& pattern;
    SubgraphStats& stats;
    std::vector<int> order;              // pattern vertices, assignment order
    std::vector<VertexSet> degree_mask;  // per order slot: degree-feasible hosts
    std::vector<int> map;                // pattern vertex -> host vertex
    std::vector<int> twin_rep;           // host vertex -> twin class representative
    VertexSet used;

    Search(const Graph& h, const Graph& p, SubgraphStats& s) : host(h), pattern(p), stats(s) {
        map.assign(p.order(), -1);
        plan_order();
        plan_twins();
    }

    // Host vertices with identical open or closed neighborhoods are
    // interchangeable in any embedding; trying one unused member per class
    // is complete.  This collapses the fresh-vertex blocks of join hosts.
    void plan_twins() {
        twin_rep.assign(host.order(), 0);
        for (int v = 0; v < host.order(); ++v) {
            twin_rep[v] = v;
            VertexSet open_v = host.neighbors(v);
            VertexSet closed_v = open_v;
            closed_v.set(v);
            for (int u = 0; u < v; ++u) {
                VertexSet open_u = host.neighbors(u);
                VertexSet closed_u = open_u;
                closed_u.set(u);
                if (open_u == open_v || closed_u == closed_v) {
                    twin_rep[v] = twin_rep[u];
                    break;
                }
            }
        }
    }

    // Highest-degree start, then always the unplaced vertex with the most
    // already-placed neighbors (degree breaks ties).  Keeps candidate sets
    // tight on the dense join hosts.
    void plan_order() {
        const int n = pattern.order();
        std::vector<bool> placed(n, false);
        for (int step = 0; step < n; ++step) {
            int best = -1, best_links = -1, best_deg = -1;
            for (int v = 0; v < n; ++v) {
                if (placed[v]) continue;
                int links = 0;
                for (int u = 0; u < n; ++u)
                    if (placed[u] && pattern.has_edge(u, v)) ++links;
                int deg = pattern.degree(v);
                if (links > best_links || (links == best_links && deg > best_deg)) {
                    best = v;
                    best_links = links;
                    best_deg = deg;
                }
            }
            placed[best] = true;
            order.push_back(best);
        }
        degree_mask.resize(n);
        for (int i = 0; i < n; ++i) {
            VertexSet mask;
            int need = pattern.degree(order[i]);
            for (int v = 0; v < host.order(); ++v) {
                if (host.degree(v) >= need)
                    mask.set(v);
                else
                    ++stats.degree_prunes;
            }
            degree_mask[i] = mask;
        }
    }

    bool assign(int depth) {
        stats.max_depth = std::max(stats.max_depth, depth);
        if (depth == pattern.order()) return true;
        int pv = order[depth];
        VertexSet cands = degree_mask[depth].and_not(used);
        for (int u = 0; u < pattern.order(); ++u)
            if (map[u] >= 0 && pattern.has_edge(u, pv)) cands &= host.neighbors(map[u]);
        if (cands.none()) {
            ++stats.adjacency_prunes;
            return false;
        }
        VertexSet tried_classes;
        for (int hv = cands.first(); hv >= 0; hv = cands.next(hv)) {
            if (tried_classes.test(twin_rep[hv])) continue;
            tried_classes.set(twin_rep[hv]);
            ++stats.nodes;
            map[pv] = hv;
            used.set(hv);
            if (assign(depth + 1)) return true;
            used.reset(hv);
            map[pv] = -1;
        }
        return false;
    }
};

} // namespace

std::optional<Embedding> find_subgraph(const Graph& host, const Graph& pattern,
                                       SubgraphStats* stats_out) {
    SubgraphStats local;
    SubgraphStats& stats = stats_out ? *stats_out : local;
    stats = SubgraphStats{};

    if (pattern.order() > host.order()) return std::nullopt;
    if (pattern.edge_count() > host.edge_count()) return std::nullopt;
    if (pattern.max_degree() > host.max_degree()) return std::nullopt;
    if (pattern.order() == 0) return Embedding{};
    if (host.is_bipartite() && !pattern.is_bipartite()) {
        stats.parity_rejected = true;
        return std::nullopt;
    }

    Search search(host, pattern, stats);
    if (search.assign(0)) {
        Embedding emb{search.map};
        return emb;
    }
    return std::nullopt;
}

} // namespace turan
