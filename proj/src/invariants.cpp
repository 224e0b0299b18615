#include "turan/invariants.hpp"

#include <algorithm>
#include <stdexcept>

namespace turan {

namespace {

// Max matching on the vertices still in `alive`.  Branches on a minimum
// degree vertex: one of its edges is taken or it stays unmatched.
void matching_rec(const Graph& g, VertexSet alive, int current, int& best_seen) {
    // Pick the lowest-degree vertex with degree >= 1 in the live subgraph.
    int pick = -1, pick_deg = Graph::kMaxVertices + 1;
    int live_edges = 0;
    for (int v = alive.first(); v >= 0; v = alive.next(v)) {
        int d = (g.neighbors(v) & alive).count();
        live_edges += d;
        if (d >= 1 && d < pick_deg) {
            pick = v;
            pick_deg = d;
        }
    }
    live_edges /= 2;
    if (pick < 0) {
        best_seen = std::max(best_seen, current);
        return;
    }
    if (current + std::min(live_edges, alive.count() / 2) <= best_seen) return;

    VertexSet nb = g.neighbors(pick) & alive;
    for (int u = nb.first(); u >= 0; u = nb.next(u)) {
        VertexSet rest = alive;
        rest.reset(pick);
        rest.reset(u);
        matching_rec(g, rest, current + 1, best_seen);
    }
    // A degree-1 vertex is always matched by some maximum matching.
    if (pick_deg >= 2) {
        VertexSet rest = alive;
        rest.reset(pick);
        matching_rec(g, rest, current, best_seen);
    }
}

// Min vertex cover via edge branching.
int cover_rec(const Graph& g, VertexSet alive, int current, int& best_seen) {
    if (current >= best_seen) return best_seen;
    // Find any live edge; branch on covering one of its endpoints.
    for (int u = alive.first(); u >= 0; u = alive.next(u)) {
        VertexSet nb = g.neighbors(u) & alive;
        int v = nb.first();
        if (v < 0) continue;
        VertexSet without_u = alive;
        without_u.reset(u);
        cover_rec(g, without_u, current + 1, best_seen);
        VertexSet without_v = alive;
        without_v.reset(v);
        cover_rec(g, without_v, current + 1, best_seen);
        return best_seen;
    }
    best_seen = std::min(best_seen, current);
    return best_seen;
}

bool covers_all_edges(const Graph& g, const VertexSet& cover) {
    for (auto [u, v] : g.edges())
        if (!cover.test(u) && !cover.test(v)) return false;
    return true;
}

void covers_below_rec(const Graph& g, int next_vertex, VertexSet chosen, int size, int bound,
                      std::vector<VertexSet>& out) {
    if (size >= bound) return;
    if (covers_all_edges(g, chosen)) out.push_back(chosen);
    if (size + 1 >= bound) return;
    for (int v = next_vertex; v < g.order(); ++v) {
        VertexSet with = chosen;
        with.set(v);
        covers_below_rec(g, v + 1, with, size + 1, bound, out);
    }
}

struct ComponentClasses {
    VertexSet x, y; // two color classes; x holds the BFS root
    bool trivial = false; // single vertex, no edges
};

std::vector<ComponentClasses> per_component_classes(const Graph& g) {
    VertexSet side0, side1;
    if (!g.two_coloring(side0, side1))
        throw std::invalid_argument("graph is not bipartite");
    std::vector<ComponentClasses> comps;
    VertexSet seen;
    for (int root = 0; root < g.order(); ++root) {
        if (seen.test(root)) continue;
        VertexSet comp = VertexSet::single(root);
        VertexSet frontier = comp;
        while (frontier.any()) {
            VertexSet nxt;
            for (int v = frontier.first(); v >= 0; v = frontier.next(v))
                nxt |= g.neighbors(v);
            frontier = nxt.and_not(comp);
            comp |= frontier;
        }
        seen |= comp;
        ComponentClasses cc;
        cc.x = comp & side0;
        cc.y = comp & side1;
        cc.trivial = comp.count() == 1;
        if (cc.trivial) {
            cc.x = {};
            cc.y = comp;
        }
        comps.push_back(cc);
    }
    return comps;
}

int min_degree_in(const Graph& g, const VertexSet& set) {
    int d = Graph::kMaxVertices + 1;
    for (int v = set.first(); v >= 0; v = set.next(v)) d = std::min(d, g.degree(v));
    return d;
}

} // namespace

int matching_number(const Graph& g) {
    int best = 0;
    matching_rec(g, g.vertex_set(), 0, best);
    return best;
}

int vertex_cover_number(const Graph& g) {
    int best = g.order();
    cover_rec(g, g.vertex_set(), 0, best);
    return best;
}

std::vector<VertexSet> vertex_covers_below(const Graph& g, int bound) {
    std::vector<VertexSet> out;
    if (bound <= 0) return out;
    covers_below_rec(g, 0, VertexSet{}, 0, bound, out);
    return out;
}

Bipartition bipartition(const Graph& g) {
    auto comps = per_component_classes(g);
    // Per component, the side sent to A is either forced (strictly smaller
    // class) or free (equal classes).  Exhaust the free choices to realize
    // the two-stage minimization; components are few at this scale.
    std::vector<int> free_idx;
    Bipartition base;
    for (std::size_t i = 0; i < comps.size(); ++i) {
        const auto& c = comps[i];
        if (c.trivial) {
            base.b |= c.y;
        } else if (c.x.count() < c.y.count()) {
            base.a |= c.x;
            base.b |= c.y;
        } else if (c.y.count() < c.x.count()) {
            base.a |= c.y;
            base.b |= c.x;
        } else {
            free_idx.push_back(int(i));
        }
    }
    if (free_idx.empty()) return base;

    Bipartition best;
    bool have = false;
    int best_min_deg = 0;
    for (std::uint64_t mask = 0; mask < (1ull << free_idx.size()); ++mask) {
        Bipartition cand = base;
        for (std::size_t j = 0; j < free_idx.size(); ++j) {
            const auto& c = comps[free_idx[j]];
            if ((mask >> j) & 1) {
                cand.a |= c.y;
                cand.b |= c.x;
            } else {
                cand.a |= c.x;
                cand.b |= c.y;
            }
        }
        int md = min_degree_in(g, cand.a);
        if (!have || md < best_min_deg ||
            (md == best_min_deg && cand.a.to_vector() < best.a.to_vector())) {
            best = cand;
            best_min_deg = md;
            have = true;
        }
    }
    return best;
}

IndependentCoverings independent_covering(const Graph& g) {
    auto comps = per_component_classes(g);
    IndependentCoverings out;
    // Minimum independent coverings factor over components: each nontrivial
    // component contributes its smaller class, or either class on ties.
    std::vector<std::vector<VertexSet>> choices;
    for (const auto& c : comps) {
        if (c.trivial) continue;
        if (c.x.count() < c.y.count()) {
            out.gamma += c.x.count();
            choices.push_back({c.x});
        } else if (c.y.count() < c.x.count()) {
            out.gamma += c.y.count();
            choices.push_back({c.y});
        } else {
            out.gamma += c.x.count();
            std::vector<VertexSet> both{c.x, c.y};
            std::sort(both.begin(), both.end(),
                      [](const VertexSet& l, const VertexSet& r) { return l.to_vector() < r.to_vector(); });
            choices.push_back(both);
        }
    }
    std::vector<VertexSet> acc{VertexSet{}};
    for (const auto& opts : choices) {
        std::vector<VertexSet> next;
        for (const auto& partial : acc)
            for (const auto& opt : opts)
                next.push_back(partial | opt);
        acc = std::move(next);
    }
    out.coverings = std::move(acc);
    std::sort(out.coverings.begin(), out.coverings.end(),
              [](const VertexSet& l, const VertexSet& r) { return l.to_vector() < r.to_vector(); });
    return out;
}

} // namespace turan
