#include "turan/graph.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

namespace turan {

Graph Graph::induced(const VertexSet& keep) const {
    std::array<int, kMaxVertices> relabel{};
    int k = 0;
    for (int v = 0; v < n_; ++v)
        if (keep.test(v)) relabel[v] = k++;
    Graph out(k);
    for (int u = 0; u < n_; ++u) {
        if (!keep.test(u)) continue;
        VertexSet nb = adj_[u] & keep;
        for (int v = nb.next(u); v >= 0; v = nb.next(v))
            out.add_edge(relabel[u], relabel[v]);
    }
    return out;
}

int Graph::components() const {
    VertexSet seen;
    int count = 0;
    for (int root = 0; root < n_; ++root) {
        if (seen.test(root)) continue;
        ++count;
        VertexSet frontier = VertexSet::single(root);
        while (frontier.any()) {
            seen |= frontier;
            VertexSet nxt;
            for (int v = frontier.first(); v >= 0; v = frontier.next(v))
                nxt |= adj_[v];
            frontier = nxt.and_not(seen);
        }
    }
    return count;
}

bool Graph::two_coloring(VertexSet& side0, VertexSet& side1) const {
    side0 = {};
    side1 = {};
    VertexSet seen;
    for (int root = 0; root < n_; ++root) {
        if (seen.test(root)) continue;
        VertexSet frontier = VertexSet::single(root);
        bool color = false; // roots start in side0
        while (frontier.any()) {
            (color ? side1 : side0) |= frontier;
            seen |= frontier;
            VertexSet nxt;
            for (int v = frontier.first(); v >= 0; v = frontier.next(v))
                nxt |= adj_[v];
            frontier = nxt.and_not(seen);
            color = !color;
        }
    }
    // Isolated vertices carry no constraint; park them in side1.
    for (int v = 0; v < n_; ++v)
        if (degree(v) == 0 && side0.test(v)) {
            side0.reset(v);
            side1.set(v);
        }
    // Validate: no edge inside a side.
    for (int u = 0; u < n_; ++u) {
        bool u0 = side0.test(u);
        VertexSet same = adj_[u] & (u0 ? side0 : side1);
        if (same.any()) return false;
    }
    return true;
}

bool Graph::is_bipartite() const {
    VertexSet a, b;
    return two_coloring(a, b);
}

Graph make_path(int n) {
    if (n < 1) throw std::invalid_argument("path order must be positive");
    Graph g(n);
    for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

Graph make_cycle(int n) {
    if (n < 3) throw std::invalid_argument("cycle order must be at least 3");
    Graph g(n);
    for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    g.add_edge(n - 1, 0);
    return g;
}

Graph make_star(int a) {
    if (a < 1) throw std::invalid_argument("star must have at least one edge");
    Graph g(a + 1);
    for (int v = 1; v <= a; ++v) g.add_edge(0, v);
    return g;
}

Graph make_complete(int n) {
    if (n < 1) throw std::invalid_argument("complete graph order must be positive");
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

Graph make_independent(int n) {
    if (n < 0) throw std::invalid_argument("independent set order must be nonnegative");
    return Graph(n);
}

Graph make_complete_bipartite(int a, int b) {
    if (a < 1 || b < 1) throw std::invalid_argument("bipartite part sizes must be positive");
    int parts[] = {a, b};
    return make_complete_multipartite(parts);
}

Graph make_complete_multipartite(std::span<const int> parts) {
    if (parts.empty()) throw std::invalid_argument("need at least one part");
    int n = 0;
    for (int p : parts) {
        if (p < 1) throw std::invalid_argument("part sizes must be positive");
        n += p;
    }
    Graph g(n);
    int offset = 0;
    std::vector<std::pair<int, int>> ranges;
    for (int p : parts) {
        ranges.emplace_back(offset, offset + p);
        offset += p;
    }
    for (std::size_t i = 0; i < ranges.size(); ++i)
        for (std::size_t j = i + 1; j < ranges.size(); ++j)
            for (int u = ranges[i].first; u < ranges[i].second; ++u)
                for (int v = ranges[j].first; v < ranges[j].second; ++v)
                    g.add_edge(u, v);
    return g;
}

Graph make_turan(int p, int n) {
    if (p < 1) throw std::invalid_argument("turan graph needs at least one part");
    if (n < 0) throw std::invalid_argument("turan graph order must be nonnegative");
    if (n == 0) return Graph(0);
    std::vector<int> parts;
    int q = n / p, r = n % p;
    for (int i = 0; i < std::min(p, n); ++i)
        parts.push_back(q + (i < r ? 1 : 0));
    // With n < p some parts would be empty; drop them.
    return make_complete_multipartite(parts);
}

Graph make_named(NamedKind kind, std::span<const int> params) {
    auto want = [&](std::size_t k) {
        if (params.size() != k)
            throw std::invalid_argument("wrong parameter count for named graph");
    };
    switch (kind) {
        case NamedKind::Path: want(1); return make_path(params[0]);
        case NamedKind::Cycle: want(1); return make_cycle(params[0]);
        case NamedKind::Star: want(1); return make_star(params[0]);
        case NamedKind::Complete: want(1); return make_complete(params[0]);
        case NamedKind::CompleteBipartite: want(2); return make_complete_bipartite(params[0], params[1]);
        case NamedKind::CompleteMultipartite: return make_complete_multipartite(params);
        case NamedKind::Independent: want(1); return make_independent(params[0]);
        case NamedKind::Turan: want(2); return make_turan(params[0], params[1]);
    }
    throw std::invalid_argument("unknown named graph kind");
}

Graph parse_named(const std::string& text) {
    std::string name = text;
    std::vector<int> params;
    auto colon = text.find(':');
    if (colon != std::string::npos) {
        name = text.substr(0, colon);
        std::string rest = text.substr(colon + 1);
        std::size_t pos = 0;
        while (pos <= rest.size()) {
            auto comma = rest.find(',', pos);
            std::string tok = rest.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
            int value = 0;
            auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
            if (ec != std::errc() || p != tok.data() + tok.size())
                throw std::invalid_argument("bad parameter in named graph: " + text);
            params.push_back(value);
            if (comma == std::string::npos) break;
            pos = comma + 1;
        }
    }
    if (name == "triangle") return make_cycle(3);
    if (name == "edge") return make_path(2);
    if (name == "path") return make_named(NamedKind::Path, params);
    if (name == "cycle") return make_named(NamedKind::Cycle, params);
    if (name == "star") return make_named(NamedKind::Star, params);
    if (name == "complete" || name == "clique") return make_named(NamedKind::Complete, params);
    if (name == "kbip") return make_named(NamedKind::CompleteBipartite, params);
    if (name == "kpart") return make_named(NamedKind::CompleteMultipartite, params);
    if (name == "independent") return make_named(NamedKind::Independent, params);
    if (name == "turan") return make_named(NamedKind::Turan, params);
    throw std::invalid_argument("unknown named graph: " + name);
}

Graph join(const Graph& g, const Graph& h) {
    if (g.order() + h.order() > Graph::kMaxVertices)
        throw CapacityError("join exceeds 128 vertices");
    Graph out = disjoint_union(g, h);
    for (int u = 0; u < g.order(); ++u)
        for (int v = 0; v < h.order(); ++v)
            out.add_edge(u, g.order() + v);
    return out;
}

Graph disjoint_union(const Graph& g, const Graph& h) {
    if (g.order() + h.order() > Graph::kMaxVertices)
        throw CapacityError("union exceeds 128 vertices");
    Graph out(g.order() + h.order());
    for (auto [u, v] : g.edges()) out.add_edge(u, v);
    for (auto [u, v] : h.edges()) out.add_edge(g.order() + u, g.order() + v);
    return out;
}

} // namespace turan
