#include <doctest.h>

#include <functional>
#include <numeric>
#include <random>
#include <set>

#include "turan/canonical.hpp"
#include "turan/graph6.hpp"

#include "oracles.hpp"

using namespace turan;

namespace {

Graph random_relabel(const Graph& g, std::mt19937& rng) {
    std::vector<int> perm(g.order());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    Graph out(g.order());
    for (auto [u, v] : g.edges()) out.add_edge(perm[u], perm[v]);
    return out;
}

} // namespace

TEST_CASE("keys identify small named graphs") {
    CHECK(canonical_key(make_star(3)) == canonical_key(make_complete_bipartite(1, 3)));
    CHECK(canonical_key(make_path(4)) != canonical_key(make_star(3)));
    CHECK(canonical_key(make_cycle(4)) == canonical_key(make_complete_bipartite(2, 2)));
    CHECK(is_isomorphic(make_turan(2, 4), make_cycle(4)));
    CHECK_FALSE(is_isomorphic(make_path(5), disjoint_union(make_path(3), make_path(2))));
}

TEST_CASE("canonical form is invariant under random relabeling") {
    std::mt19937 rng(20240817);
    std::uniform_int_distribution<int> order_dist(1, 10);
    std::uniform_real_distribution<double> density(0.0, 1.0);
    for (int trial = 0; trial < 1000; ++trial) {
        int n = order_dist(rng);
        double p = density(rng);
        Graph g(n);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (density(rng) < p) g.add_edge(u, v);
        Graph h = random_relabel(g, rng);
        CHECK(canonical_form(g) == canonical_form(h));
    }
}

TEST_CASE("canonical classes match permutation brute force up to 5 vertices") {
    for (int n = 1; n <= 5; ++n) {
        auto pairs = oracles::all_pairs(n);
        for (std::uint64_t a = 0; a < (1ull << pairs.size()); ++a) {
            Graph ga = oracles::graph_from_mask(n, a);
            auto fa = oracles::brute_min_form(ga);
            Graph gb = oracles::graph_from_mask(n, (a * 2654435761u) % (1ull << pairs.size()));
            auto fb = oracles::brute_min_form(gb);
            bool brute_iso = fa == fb;
            CHECK(is_isomorphic(ga, gb) == brute_iso);
        }
    }
}

TEST_CASE("canonical form is idempotent") {
    std::vector<Graph> pool = {make_path(5), make_cycle(6), make_star(4),
                               make_complete_bipartite(3, 3), make_turan(3, 7)};
    for (const Graph& g : pool) {
        Graph c = canonical_form(g);
        CHECK(canonical_form(c) == c);
        CHECK(canonical_key(c) == canonical_key(g));
    }
}

TEST_CASE("highly symmetric graphs canonicalize quickly") {
    // These exercise the automorphism pruning: without it the search tree
    // on complete bipartite graphs is factorial.
    Graph k88 = make_complete_bipartite(8, 8);
    CHECK(canonical_form(k88).edge_count() == 64);
    Graph t20 = make_turan(2, 20);
    CHECK(is_isomorphic(t20, make_complete_bipartite(10, 10)));
    Graph k10 = make_complete(10);
    CHECK(canonical_form(k10) == k10);
    Graph i12 = make_independent(12);
    CHECK(canonical_form(i12) == i12);
    Graph matching(16);
    for (int i = 0; i < 8; ++i) matching.add_edge(2 * i, 2 * i + 1);
    CHECK(canonical_form(matching).edge_count() == 8);
}

TEST_CASE("keys are stable strings") {
    CHECK(canonical_key(make_path(2)).bytes == "A_");
    CHECK(canonical_key(Graph(1)).bytes == "@");
    CHECK(canonical_key(Graph(0)).bytes == "?");
}

TEST_CASE("disconnected canonical forms") {
    // Component order in the input must not matter.
    Graph a = disjoint_union(make_path(3), make_path(2));
    Graph b = disjoint_union(make_path(2), make_path(3));
    CHECK(canonical_form(a) == canonical_form(b));

    Graph mix1 = disjoint_union(disjoint_union(make_cycle(4), make_star(3)), Graph(1));
    Graph mix2 = disjoint_union(disjoint_union(Graph(1), make_star(3)), make_cycle(4));
    CHECK(canonical_form(mix1) == canonical_form(mix2));

    // Idempotence on disconnected inputs.
    for (const Graph& g : {a, mix1, disjoint_union(make_path(2), make_path(2))}) {
        Graph c = canonical_form(g);
        CHECK(canonical_form(c) == c);
    }
}

TEST_CASE("automorphism generators cover component swaps") {
    // In kP2 every endpoint is equivalent: the generator closure must put
    // all vertices in one orbit.
    Graph m(8);
    for (int i = 0; i < 4; ++i) m.add_edge(2 * i, 2 * i + 1);
    auto gens = automorphism_generators(m);
    REQUIRE(!gens.empty());
    std::vector<int> parent(8);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    };
    for (const auto& sigma : gens) {
        CHECK(sigma.size() == 8);
        // Each generator is a genuine automorphism.
        for (auto [u, v] : m.edges()) CHECK(m.has_edge(sigma[u], sigma[v]));
        for (int v = 0; v < 8; ++v) parent[find(v)] = find(sigma[v]);
    }
    std::set<int> orbits;
    for (int v = 0; v < 8; ++v) orbits.insert(find(v));
    CHECK(orbits.size() == 1);
}
