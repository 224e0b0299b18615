#include "turan/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "turan/graph6.hpp"
#include "turan/parallel.hpp"

namespace turan {

namespace {

constexpr int kPackLimit = 16;

} // namespace

PackedGraph pack_graph(const Graph& g) {
    if (g.order() > kPackLimit)
        throw CapacityError("packed graphs hold at most 16 vertices");
    PackedGraph p;
    p.order = std::uint8_t(g.order());
    std::size_t k = 0;
    for (int u = 0; u < g.order(); ++u)
        for (int v = u + 1; v < g.order(); ++v, ++k)
            if (g.has_edge(u, v)) p.bits[k / 64] |= 1ull << (k % 64);
    return p;
}

Graph unpack_graph(const PackedGraph& p) {
    Graph g(p.order);
    std::size_t k = 0;
    for (int u = 0; u < p.order; ++u)
        for (int v = u + 1; v < p.order; ++v, ++k)
            if ((p.bits[k / 64] >> (k % 64)) & 1) g.add_edge(u, v);
    return g;
}

namespace {

PackedGraph canonical_packed(const Graph& g) {
    return pack_graph(canonical_form(g));
}

// Canonical augmentation step: child = parent + one vertex.  A child is
// kept iff deleting the new vertex lands back on the parent's isomorphism
// class the same way deleting the canonical last vertex would; siblings are
// deduplicated by canonical form.
struct LevelGrower {
    const EnumerationOptions& options;
    // Optional hook used by the Turan oracle.
    std::function<bool(const Graph&)> reject_child;

    std::vector<PackedGraph> grow(const std::vector<PackedGraph>& parents, int jobs) const {
        std::vector<std::vector<PackedGraph>> buckets(parents.size());
        parallel_for(parents.size(), jobs,
                     [&](std::size_t i) { buckets[i] = children_of(parents[i]); });
        std::vector<PackedGraph> level;
        for (auto& b : buckets)
            level.insert(level.end(), b.begin(), b.end());
        std::sort(level.begin(), level.end());
        level.erase(std::unique(level.begin(), level.end()), level.end());
        return level;
    }

    std::vector<PackedGraph> children_of(const PackedGraph& parent_packed) const {
        const Graph parent = unpack_graph(parent_packed);
        const int k = parent.order();
        std::vector<PackedGraph> accepted;
        for (std::uint64_t nb = 0; nb < (1ull << k); ++nb) {
            int new_deg = std::popcount(nb);
            if (options.max_degree >= 0 && new_deg > options.max_degree) continue;
            if (options.max_edges >= 0 && parent.edge_count() + new_deg > options.max_edges) continue;
            bool degree_ok = true;
            if (options.max_degree >= 0)
                for (int v = 0; v < k; ++v)
                    if ((nb >> v) & 1 && parent.degree(v) + 1 > options.max_degree) {
                        degree_ok = false;
                        break;
                    }
            if (!degree_ok) continue;

            Graph child(k + 1);
            for (auto [u, v] : parent.edges()) child.add_edge(u, v);
            for (int v = 0; v < k; ++v)
                if ((nb >> v) & 1) child.add_edge(v, k);

            if (options.bipartite_only && !child.is_bipartite()) continue;
            if (reject_child && reject_child(child)) continue;

            auto order = canonical_labeling(child);
            int last = order.back();
            if (last != k) {
                // The new vertex is a valid canonical deletion only when
                // removing it reaches the same class as removing the
                // canonical last vertex.
                VertexSet keep = child.vertex_set();
                keep.reset(last);
                if (canonical_packed(child.induced(keep)) != parent_packed) continue;
            }
            std::vector<int> pos(k + 1);
            for (int i = 0; i <= k; ++i) pos[order[i]] = i;
            Graph canon(k + 1);
            for (auto [u, v] : child.edges()) canon.add_edge(pos[u], pos[v]);
            accepted.push_back(pack_graph(canon));
        }
        std::sort(accepted.begin(), accepted.end());
        accepted.erase(std::unique(accepted.begin(), accepted.end()), accepted.end());
        return accepted;
    }
};

void check_limits(int order, const EnumerationOptions& options) {
    if (order < 0) throw std::invalid_argument("order must be nonnegative");
    int cap = (options.max_degree >= 0 && options.max_degree <= 2) ? 12 : 9;
    if (order > cap)
        throw CapacityError("enumeration order too large for this constraint set");
}

} // namespace

std::vector<PackedGraph> enumerate_graphs(int order, const EnumerationOptions& options, int jobs) {
    check_limits(order, options);
    std::vector<PackedGraph> level{pack_graph(Graph(0))};
    LevelGrower grower{options, nullptr};
    for (int k = 0; k < order; ++k)
        level = grower.grow(level, jobs);
    if (options.min_edges > 0) {
        std::erase_if(level, [&](const PackedGraph& p) {
            return unpack_graph(p).edge_count() < options.min_edges;
        });
    }
    return level;
}

std::size_t enumerate_count(int order, const EnumerationOptions& options, int jobs) {
    return enumerate_graphs(order, options, jobs).size();
}

std::string EnumerationStream::to_graph6_lines() const {
    std::string out;
    for (const PackedGraph& p : graphs_) {
        out += graph6_encode(unpack_graph(p));
        out += '\n';
    }
    return out;
}

TuranOracleResult turan_oracle(int order, const std::vector<Graph>& family, int jobs) {
    if (order < 0) throw std::invalid_argument("order must be nonnegative");
    std::vector<Graph> live_patterns;
    for (const Graph& f : family) {
        if (f.order() > order) continue; // cannot embed, no constraint
        if (f.edge_count() == 0)
            throw std::invalid_argument("forbidding an edgeless graph forbids everything");
        live_patterns.push_back(f);
    }
    TuranOracleResult result;
    result.order = order;
    if (live_patterns.empty()) {
        // Every pattern is larger than the order: nothing can embed, the
        // complete graph wins.
        result.max_edges = (long long)order * (order - 1) / 2;
        result.extremal = {order == 0 ? Graph(0) : canonical_form(make_complete(order))};
        return result;
    }
    check_limits(order, EnumerationOptions{});

    std::atomic<long long> best{0};
    auto contains_forbidden = [&](const Graph& g) {
        for (const Graph& f : live_patterns)
            if (f.order() <= g.order() && find_subgraph(g, f)) return true;
        return false;
    };
    auto reject = [&](const Graph& child) {
        // Hereditary freeness prune plus branch and bound: a child that can
        // no longer tie the best even if completed densely is dropped.
        long long completable = (long long)order * (order - 1) / 2 -
                                (long long)child.order() * (child.order() - 1) / 2;
        if (child.edge_count() + completable < best.load(std::memory_order_relaxed)) return true;
        if (contains_forbidden(child)) return true;
        if (child.order() == order) {
            long long e = child.edge_count();
            long long cur = best.load(std::memory_order_relaxed);
            while (e > cur && !best.compare_exchange_weak(cur, e)) {
            }
        }
        return false;
    };

    EnumerationOptions options; // unconstrained; pruning happens in reject
    LevelGrower grower{options, reject};
    std::vector<PackedGraph> level{pack_graph(Graph(0))};
    for (int k = 0; k < order; ++k)
        level = grower.grow(level, jobs);

    result.max_edges = best.load();
    for (const PackedGraph& p : level) {
        Graph g = unpack_graph(p);
        if (g.edge_count() == result.max_edges) result.extremal.push_back(g);
    }
    return result;
}

TuranOracleResult turan_oracle_cached(int order, const std::vector<Graph>& family,
                                      const std::string& cache_dir, int jobs) {
    if (cache_dir.empty()) return turan_oracle(order, family, jobs);

    std::vector<std::string> keys;
    for (const Graph& g : family) keys.push_back(canonical_key(g).bytes);
    std::sort(keys.begin(), keys.end());
    std::string joined = std::to_string(order);
    for (const auto& k : keys) joined += "|" + k;
    std::uint64_t hash = 1469598103934665603ull; // FNV-1a
    for (unsigned char c : joined) {
        hash ^= c;
        hash *= 1099511628211ull;
    }
    std::ostringstream name;
    name << "ex-" << order << "-" << std::hex << hash << ".json";
    std::filesystem::path path = std::filesystem::path(cache_dir) / name.str();

    if (std::ifstream in(path); in) {
        nlohmann::json j = nlohmann::json::parse(in, nullptr, false);
        if (!j.is_discarded() && j.value("key", "") == joined) {
            TuranOracleResult out;
            out.order = order;
            out.max_edges = j.value("max_edges", 0ll);
            for (const auto& code : j["extremal"])
                out.extremal.push_back(graph6_decode(code.get<std::string>()));
            return out;
        }
    }

    TuranOracleResult result = turan_oracle(order, family, jobs);
    std::filesystem::create_directories(cache_dir);
    nlohmann::json j;
    j["key"] = joined;
    j["order"] = result.order;
    j["max_edges"] = result.max_edges;
    std::vector<std::string> codes;
    for (const Graph& g : result.extremal) codes.push_back(graph6_encode(g));
    j["extremal"] = codes;
    std::ofstream out(path);
    out << j.dump(2) << '\n';
    return result;
}

FreenessCertificate certify_free(const Graph& host, const Graph& pattern) {
    FreenessCertificate cert;
    auto found = find_subgraph(host, pattern, &cert.stats);
    cert.free = !found.has_value();
    cert.embedding = found;
    cert.rules = {"degree-filter", "mapped-neighborhood-intersection"};
    if (cert.stats.parity_rejected) cert.rules.push_back("bipartite-host-parity");
    return cert;
}

} // namespace turan
