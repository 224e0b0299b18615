#pragma once

#include <array>
#include <bit>
#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "turan/errors.hpp"

namespace turan {

/// Fixed-width vertex set over ids 0..127.  Two machine words; everything the
/// search kernels do is AND/OR/popcount on these.
struct VertexSet {
    std::uint64_t w0 = 0;
    std::uint64_t w1 = 0;

    static constexpr int kBits = 128;

    static VertexSet below(int n) {
        VertexSet s;
        if (n >= 64) {
            s.w0 = ~0ull;
            s.w1 = (n == 128) ? ~0ull : ((1ull << (n - 64)) - 1);
        } else {
            s.w0 = (n == 64) ? ~0ull : ((1ull << n) - 1);
        }
        return s;
    }
    static VertexSet single(int i) {
        VertexSet s;
        s.set(i);
        return s;
    }

    bool test(int i) const {
        return ((i < 64 ? w0 >> i : w1 >> (i - 64)) & 1ull) != 0;
    }
    void set(int i) {
        (i < 64 ? w0 : w1) |= 1ull << (i & 63);
    }
    void reset(int i) {
        (i < 64 ? w0 : w1) &= ~(1ull << (i & 63));
    }
    int count() const {
        return std::popcount(w0) + std::popcount(w1);
    }
    bool any() const { return (w0 | w1) != 0; }
    bool none() const { return (w0 | w1) == 0; }

    /// Lowest set bit, or -1 when empty.
    int first() const {
        if (w0) return std::countr_zero(w0);
        if (w1) return 64 + std::countr_zero(w1);
        return -1;
    }
    /// Lowest set bit above i, or -1.  next(-1) is first().
    int next(int i) const {
        ++i;
        if (i < 64) {
            std::uint64_t rest = w0 >> i;
            if (rest) return i + std::countr_zero(rest);
            i = 64;
        }
        if (i < 128) {
            std::uint64_t rest = w1 >> (i - 64);
            if (rest) return i + std::countr_zero(rest);
        }
        return -1;
    }

    VertexSet operator&(const VertexSet& o) const { return {w0 & o.w0, w1 & o.w1}; }
    VertexSet operator|(const VertexSet& o) const { return {w0 | o.w0, w1 | o.w1}; }
    VertexSet operator^(const VertexSet& o) const { return {w0 ^ o.w0, w1 ^ o.w1}; }
    VertexSet& operator&=(const VertexSet& o) { w0 &= o.w0; w1 &= o.w1; return *this; }
    VertexSet& operator|=(const VertexSet& o) { w0 |= o.w0; w1 |= o.w1; return *this; }
    VertexSet and_not(const VertexSet& o) const { return {w0 & ~o.w0, w1 & ~o.w1}; }

    bool operator==(const VertexSet&) const = default;
    auto operator<=>(const VertexSet& o) const {
        if (auto c = w1 <=> o.w1; c != 0) return c;
        return w0 <=> o.w0;
    }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        for (int v = first(); v >= 0; v = next(v)) out.push_back(v);
        return out;
    }
};

/// Simple undirected graph on at most 128 vertices, adjacency kept as one
/// bit row per vertex.  Values are immutable in practice: the pipeline
/// builds a graph once and only reads it afterwards.
class Graph {
public:
    static constexpr int kMaxVertices = 128;

    Graph() = default;
    explicit Graph(int n) : n_(n) {
        if (n < 0 || n > kMaxVertices)
            throw CapacityError("graph order out of range 0..128");
    }

    int order() const { return n_; }
    int edge_count() const { return m_; }

    bool has_edge(int u, int v) const { return adj_[u].test(v); }

    void add_edge(int u, int v) {
        check_pair(u, v);
        if (adj_[u].test(v)) return;
        adj_[u].set(v);
        adj_[v].set(u);
        ++m_;
    }

    void remove_edge(int u, int v) {
        check_pair(u, v);
        if (!adj_[u].test(v)) return;
        adj_[u].reset(v);
        adj_[v].reset(u);
        --m_;
    }

    const VertexSet& neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return adj_[v].count(); }

    int max_degree() const {
        int d = 0;
        for (int v = 0; v < n_; ++v) d = std::max(d, degree(v));
        return d;
    }
    int min_degree() const {
        if (n_ == 0) return 0;
        int d = kMaxVertices;
        for (int v = 0; v < n_; ++v) d = std::min(d, degree(v));
        return d;
    }

    VertexSet vertex_set() const { return VertexSet::below(n_); }

    /// Edges as (u, v) pairs with u < v, lexicographically sorted.  This is
    /// the edge-id order used by per-edge length assignments.
    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> out;
        out.reserve(m_);
        for (int u = 0; u < n_; ++u)
            for (int v = adj_[u].next(u); v >= 0; v = adj_[u].next(v))
                out.emplace_back(u, v);
        return out;
    }

    /// Subgraph induced by `keep`, vertices relabeled densely in id order.
    Graph induced(const VertexSet& keep) const;

    int components() const;

    /// Fills a proper 2-coloring and returns true, or returns false when an
    /// odd cycle exists.  Isolated vertices land in the second class.
    bool two_coloring(VertexSet& side0, VertexSet& side1) const;
    bool is_bipartite() const;

    bool operator==(const Graph& o) const {
        if (n_ != o.n_ || m_ != o.m_) return false;
        for (int v = 0; v < n_; ++v)
            if (!(adj_[v] == o.adj_[v])) return false;
        return true;
    }

private:
    void check_pair(int u, int v) const {
        if (u < 0 || v < 0 || u >= n_ || v >= n_)
            throw std::invalid_argument("vertex id out of range");
        if (u == v)
            throw std::invalid_argument("self-loops are not allowed");
    }

    int n_ = 0;
    int m_ = 0;
    std::array<VertexSet, kMaxVertices> adj_{};
};

// Named constructors.  Vertex labelings are deterministic and documented:
//   path:      0-1-...-(n-1)
//   cycle:     0-1-...-(n-1)-0
//   star S_a:  center 0, leaves 1..a
//   complete_bipartite(a,b): 0..a-1 | a..a+b-1
//   complete_multipartite:   parts consecutive in the given order
//   turan(p,n): parts as equal as possible, larger parts first, consecutive
Graph make_path(int n);
Graph make_cycle(int n);
Graph make_star(int a);
Graph make_complete(int n);
Graph make_independent(int n);
Graph make_complete_bipartite(int a, int b);
Graph make_complete_multipartite(std::span<const int> parts);
Graph make_turan(int p, int n);

enum class NamedKind {
    Path,
    Cycle,
    Star,
    Complete,
    CompleteBipartite,
    CompleteMultipartite,
    Independent,
    Turan,
};

Graph make_named(NamedKind kind, std::span<const int> params);

/// Parses the CLI mini-syntax: "star:3", "path:5", "cycle:4", "kbip:2,3",
/// "kpart:2,2,2", "complete:4", "independent:3", "turan:2,5", plus the
/// aliases "triangle" and "edge".
Graph parse_named(const std::string& text);

/// G followed by H with all cross edges added; ids of G precede ids of H.
Graph join(const Graph& g, const Graph& h);

/// G followed by H, no cross edges.
Graph disjoint_union(const Graph& g, const Graph& h);

} // namespace turan
