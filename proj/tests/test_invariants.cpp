#include <doctest.h>

#include "turan/invariants.hpp"

#include "oracles.hpp"

using namespace turan;

namespace {

Graph k33_minus_perfect_matching() {
    Graph g = make_complete_bipartite(3, 3);
    g.remove_edge(0, 3);
    g.remove_edge(1, 4);
    g.remove_edge(2, 5);
    return g;
}

} // namespace

TEST_CASE("matching number spot values") {
    Graph three_p2 = disjoint_union(disjoint_union(make_path(2), make_path(2)), make_path(2));
    CHECK(matching_number(three_p2) == 3);
    CHECK(matching_number(make_cycle(5)) == 2);
    Graph g = k33_minus_perfect_matching();
    CHECK(oracles::brute_matching(g) == 3);
    CHECK(matching_number(g) == 3);
    CHECK(matching_number(Graph(0)) == 0);
    CHECK(matching_number(make_independent(5)) == 0);
}

TEST_CASE("matching number agrees with brute force on all graphs up to 6 vertices") {
    for (int n = 1; n <= 6; ++n) {
        auto pairs = oracles::all_pairs(n);
        std::uint64_t limit = 1ull << pairs.size();
        std::uint64_t step = n < 6 ? 1 : 41;
        for (std::uint64_t mask = 0; mask < limit; mask += step) {
            Graph g = oracles::graph_from_mask(n, mask);
            CHECK(matching_number(g) == oracles::brute_matching(g));
        }
    }
}

TEST_CASE("vertex cover spot values and Konig check") {
    CHECK(vertex_cover_number(make_star(3)) == 1);
    CHECK(vertex_cover_number(make_cycle(4)) == 2);
    CHECK(vertex_cover_number(make_cycle(5)) == 3);

    // Konig: beta = alpha' on bipartite graphs, both by library search and
    // by double brute force.
    for (int n = 2; n <= 6; ++n) {
        auto pairs = oracles::all_pairs(n);
        std::uint64_t limit = 1ull << pairs.size();
        std::uint64_t step = n < 6 ? 3 : 43;
        for (std::uint64_t mask = 0; mask < limit; mask += step) {
            Graph g = oracles::graph_from_mask(n, mask);
            if (!g.is_bipartite()) continue;
            int mm = matching_number(g);
            int vc = vertex_cover_number(g);
            CHECK(mm == vc);
            CHECK(oracles::brute_matching(g) == oracles::brute_cover(g));
            CHECK(mm == oracles::brute_matching(g));
        }
    }
}

TEST_CASE("covers below a bound enumerates every cover") {
    Graph p4 = make_path(4);
    auto below3 = vertex_covers_below(p4, 3);
    // Covers of size <= 2 of the path 0-1-2-3: {1,2}, {1,3}, {0,2}.
    CHECK(below3.size() == 3);
    auto below2 = vertex_covers_below(p4, 2);
    CHECK(below2.empty());
    auto edgeless = vertex_covers_below(make_independent(3), 1);
    REQUIRE(edgeless.size() == 1);
    CHECK(edgeless[0].none());
}

TEST_CASE("bipartition convention") {
    Bipartition s3 = bipartition(make_star(3));
    CHECK(s3.a.count() == 1);
    CHECK(s3.a.test(0)); // the center

    Bipartition p4 = bipartition(make_path(4));
    CHECK(p4.a.count() == 2);

    Graph two_p2 = disjoint_union(make_path(2), make_path(2));
    Bipartition b2 = bipartition(two_p2);
    CHECK(b2.a.count() == 2);
    int min_deg = 9;
    for (int v = b2.a.first(); v >= 0; v = b2.a.next(v))
        min_deg = std::min(min_deg, two_p2.degree(v));
    CHECK(min_deg == 1);

    // P4 u S3: the path's class choice is free and must surface the
    // degree-1 vertex in A.
    Graph mix = disjoint_union(make_path(4), make_star(3));
    Bipartition bm = bipartition(mix);
    CHECK(bm.a.count() == 3);
    int md = 9;
    for (int v = bm.a.first(); v >= 0; v = bm.a.next(v))
        md = std::min(md, mix.degree(v));
    CHECK(md == 1);

    CHECK_THROWS_AS(bipartition(make_cycle(5)), std::invalid_argument);
}

TEST_CASE("independent coverings spot values") {
    auto p4 = independent_covering(make_path(4));
    CHECK(p4.gamma == 2);
    CHECK(p4.coverings.size() == 2); // both middle-class sets

    Graph three_p2 = disjoint_union(disjoint_union(make_path(2), make_path(2)), make_path(2));
    auto t = independent_covering(three_p2);
    CHECK(t.gamma == 3);
    CHECK(t.coverings.size() == 8);

    auto c6 = independent_covering(make_cycle(6));
    CHECK(c6.gamma == 3);
    CHECK(c6.coverings.size() == 2);

    CHECK_THROWS_AS(independent_covering(make_cycle(3)), std::invalid_argument);
}

TEST_CASE("independent coverings agree with subset brute force") {
    for (int n = 1; n <= 6; ++n) {
        auto pairs = oracles::all_pairs(n);
        std::uint64_t limit = 1ull << pairs.size();
        std::uint64_t step = n < 6 ? 1 : 29;
        for (std::uint64_t mask = 0; mask < limit; mask += step) {
            Graph g = oracles::graph_from_mask(n, mask);
            if (!g.is_bipartite()) continue;
            auto brute = oracles::brute_independent_coverings(g);
            auto lib = independent_covering(g);
            CHECK(lib.gamma == brute.gamma);
            std::vector<std::vector<int>> got;
            for (const auto& s : lib.coverings) got.push_back(s.to_vector());
            std::sort(got.begin(), got.end());
            CHECK(got == brute.coverings);
        }
    }
}

TEST_CASE("gamma equals |A| of the canonical bipartition") {
    std::vector<Graph> pool = {make_path(4), make_path(5), make_star(3),
                               make_cycle(6), make_complete_bipartite(2, 3),
                               disjoint_union(make_path(3), make_path(2))};
    for (const Graph& g : pool)
        CHECK(independent_covering(g).gamma == bipartition(g).a.count());
}
