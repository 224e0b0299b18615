#include "turan/canonical.hpp"

#include <algorithm>
#include <numeric>

#include "turan/graph6.hpp"

namespace turan {

namespace {

// Ordered partition of the vertex ids.  Cells are kept in a label-invariant
// order: splits sort subcells by their neighbor-count signature, so two
// isomorphic graphs walk isomorphic search trees.
using Partition = std::vector<std::vector<int>>;

Partition initial_partition(const Graph& g) {
    std::vector<int> all(g.order());
    std::iota(all.begin(), all.end(), 0);
    return {all};
}

// Coarsest equitable refinement, worklist style: one splitter at a time,
// every cell regrouped by its neighbor count into the splitter.  The
// worklist holds splitter snapshots (masks), so cell indices never need
// patching; every newly created piece is enqueued.  Subcells are ordered
// by count, keeping the procedure label-invariant.
void refine(const Graph& g, Partition& p) {
    std::vector<VertexSet> queue;
    queue.reserve(p.size() + 8);
    for (const auto& cell : p) {
        VertexSet m;
        for (int v : cell) m.set(v);
        queue.push_back(m);
    }
    std::vector<std::pair<int, int>> keyed; // (count, vertex) scratch

    for (std::size_t next = 0; next < queue.size(); ++next) {
        const VertexSet splitter = queue[next];
        for (std::size_t ci = 0; ci < p.size(); ++ci) {
            if (p[ci].size() == 1) continue;
            keyed.clear();
            for (int v : p[ci]) keyed.emplace_back((g.neighbors(v) & splitter).count(), v);
            std::stable_sort(keyed.begin(), keyed.end());
            if (keyed.front().first == keyed.back().first) continue;

            std::vector<std::vector<int>> groups;
            groups.emplace_back();
            for (std::size_t i = 0; i < keyed.size(); ++i) {
                if (i > 0 && keyed[i].first != keyed[i - 1].first) groups.emplace_back();
                groups.back().push_back(keyed[i].second);
            }
            for (const auto& group : groups) {
                VertexSet m;
                for (int v : group) m.set(v);
                queue.push_back(m);
            }
            const std::size_t pieces = groups.size();
            p[ci] = std::move(groups.front());
            p.insert(p.begin() + long(ci) + 1,
                     std::make_move_iterator(groups.begin() + 1),
                     std::make_move_iterator(groups.end()));
            ci += pieces - 1; // the new pieces are homogeneous for this splitter
        }
    }
}

// Union-find for automorphism orbits.
struct Orbits {
    std::vector<int> parent;
    explicit Orbits(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    }
    void merge(int a, int b) { parent[find(a)] = find(b); }
};

struct Searcher {
    const Graph& g;
    int n;
    std::vector<std::uint8_t> best;     // packed upper triangle, row major
    std::vector<int> best_order;        // position -> vertex
    bool have_best = false;
    std::vector<std::vector<int>> generators; // discovered automorphisms

    explicit Searcher(const Graph& graph) : g(graph), n(graph.order()) {}

    std::vector<std::uint8_t> pack(const std::vector<int>& order) const {
        std::vector<std::uint8_t> bits((std::size_t(n) * (n - 1) / 2 + 7) / 8, 0);
        std::size_t k = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j, ++k)
                if (g.has_edge(order[i], order[j]))
                    bits[k / 8] |= std::uint8_t(1u << (7 - k % 8));
        return bits;
    }

    void leaf(const Partition& p) {
        std::vector<int> order;
        order.reserve(n);
        for (const auto& cell : p) order.push_back(cell.front());
        auto form = pack(order);
        if (!have_best || form < best) {
            best = std::move(form);
            best_order = order;
            have_best = true;
        } else if (form == best) {
            // Equal leaves differ by an automorphism.
            std::vector<int> sigma(n);
            for (int i = 0; i < n; ++i) sigma[best_order[i]] = order[i];
            generators.push_back(std::move(sigma));
        }
    }

    void search(Partition p, std::vector<int>& path) {
        refine(g, p);
        int target = -1;
        for (std::size_t i = 0; i < p.size(); ++i)
            if (p[i].size() > 1) {
                target = int(i);
                break;
            }
        if (target < 0) {
            leaf(p);
            return;
        }
        std::vector<int> candidates = p[std::size_t(target)];
        std::sort(candidates.begin(), candidates.end());
        std::vector<int> tried;
        for (int v : candidates) {
            // Skip v when a discovered automorphism that fixes the current
            // path pointwise maps an already-tried candidate onto it.
            Orbits orbits(n);
            for (const auto& sigma : generators) {
                bool fixes = true;
                for (int x : path)
                    if (sigma[x] != x) {
                        fixes = false;
                        break;
                    }
                if (!fixes) continue;
                for (int x = 0; x < n; ++x) orbits.merge(x, sigma[x]);
            }
            bool skip = false;
            for (int u : tried)
                if (orbits.find(u) == orbits.find(v)) {
                    skip = true;
                    break;
                }
            if (skip) continue;
            tried.push_back(v);

            Partition child;
            child.reserve(p.size() + 1);
            for (std::size_t i = 0; i < p.size(); ++i) {
                if (int(i) != target) {
                    child.push_back(p[i]);
                    continue;
                }
                child.push_back({v});
                std::vector<int> rest;
                for (int u : p[i])
                    if (u != v) rest.push_back(u);
                child.push_back(std::move(rest));
            }
            path.push_back(v);
            search(std::move(child), path);
            path.pop_back();
        }
    }
};

std::vector<std::vector<int>> component_lists(const Graph& g) {
    std::vector<std::vector<int>> comps;
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
        comps.push_back(comp.to_vector());
    }
    return comps;
}

std::vector<int> connected_labeling(const Graph& g) {
    Searcher s(g);
    std::vector<int> path;
    s.search(initial_partition(g), path);
    return s.best_order;
}

// Component handle used to assemble disconnected labelings: the canonical
// form bytes order the components, ties broken by original vertex id.
struct ComponentPiece {
    std::vector<int> vertices;     // original ids, ascending
    std::vector<int> local_order;  // canonical position -> local id
    std::string form_bytes;
};

std::vector<ComponentPiece> canonical_pieces(const Graph& g) {
    std::vector<ComponentPiece> pieces;
    for (auto& vertices : component_lists(g)) {
        ComponentPiece piece;
        VertexSet mask;
        for (int v : vertices) mask.set(v);
        Graph sub = g.induced(mask);
        piece.vertices = std::move(vertices);
        piece.local_order = sub.order() <= 1 ? std::vector<int>(sub.order(), 0)
                                             : connected_labeling(sub);
        Graph form(sub.order());
        std::vector<int> pos(sub.order());
        for (int i = 0; i < sub.order(); ++i) pos[piece.local_order[i]] = i;
        for (auto [u, v] : sub.edges()) form.add_edge(pos[u], pos[v]);
        piece.form_bytes = graph6_encode(form);
        pieces.push_back(std::move(piece));
    }
    std::stable_sort(pieces.begin(), pieces.end(), [](const auto& l, const auto& r) {
        if (l.vertices.size() != r.vertices.size())
            return l.vertices.size() < r.vertices.size();
        if (l.form_bytes != r.form_bytes) return l.form_bytes < r.form_bytes;
        return l.vertices.front() < r.vertices.front();
    });
    return pieces;
}

} // namespace

std::vector<int> canonical_labeling(const Graph& g) {
    if (g.order() <= 1) return std::vector<int>(g.order(), 0);
    // Disconnected graphs canonicalize per component; the pieces line up in
    // (order, form) sequence.  This keeps the search trees small on unions
    // of repeated components.
    auto pieces = canonical_pieces(g);
    std::vector<int> order;
    order.reserve(std::size_t(g.order()));
    for (const auto& piece : pieces)
        for (int local : piece.local_order)
            order.push_back(piece.vertices[std::size_t(local)]);
    return order;
}

Graph canonical_form(const Graph& g) {
    auto order = canonical_labeling(g);
    std::vector<int> pos(g.order());
    for (int i = 0; i < g.order(); ++i) pos[order[i]] = i;
    Graph out(g.order());
    for (auto [u, v] : g.edges()) out.add_edge(pos[u], pos[v]);
    return out;
}

CanonicalKey canonical_key(const Graph& g) {
    return CanonicalKey{graph6_encode(canonical_form(g))};
}

bool is_isomorphic(const Graph& a, const Graph& b) {
    if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
    return canonical_form(a) == canonical_form(b);
}

std::vector<std::vector<int>> automorphism_generators(const Graph& g) {
    if (g.order() <= 1) return {};
    std::vector<std::vector<int>> generators;
    auto pieces = canonical_pieces(g);
    std::vector<int> identity(std::size_t(g.order()));
    std::iota(identity.begin(), identity.end(), 0);

    for (const auto& piece : pieces) {
        if (piece.vertices.size() <= 1) continue;
        VertexSet mask;
        for (int v : piece.vertices) mask.set(v);
        Searcher s(g.induced(mask));
        std::vector<int> path;
        s.search(initial_partition(g.induced(mask)), path);
        for (const auto& local_sigma : s.generators) {
            std::vector<int> sigma = identity;
            for (std::size_t i = 0; i < piece.vertices.size(); ++i)
                sigma[std::size_t(piece.vertices[i])] =
                    piece.vertices[std::size_t(local_sigma[i])];
            generators.push_back(std::move(sigma));
        }
    }
    // Identical components swap wholesale; adjacent pairs in the sorted
    // piece order generate every permutation of the repeats.
    for (std::size_t i = 0; i + 1 < pieces.size(); ++i) {
        const auto& a = pieces[i];
        const auto& b = pieces[i + 1];
        if (a.form_bytes != b.form_bytes || a.vertices.size() != b.vertices.size()) continue;
        std::vector<int> sigma = identity;
        for (std::size_t p = 0; p < a.local_order.size(); ++p) {
            int va = a.vertices[std::size_t(a.local_order[p])];
            int vb = b.vertices[std::size_t(b.local_order[p])];
            sigma[std::size_t(va)] = vb;
            sigma[std::size_t(vb)] = va;
        }
        generators.push_back(std::move(sigma));
    }
    return generators;
}

} // namespace turan
