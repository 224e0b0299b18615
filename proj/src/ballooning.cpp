#include "turan/ballooning.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>

#include "turan/graph6.hpp"
#include "turan/parallel.hpp"

namespace turan {

BallooningSpec BallooningSpec::uniform(Graph base, int t) {
    BallooningSpec spec;
    spec.lengths.assign(std::size_t(base.edge_count()), t);
    spec.base = std::move(base);
    spec.t = t;
    spec.validate();
    return spec;
}

void BallooningSpec::validate() const {
    if (t < 3 || t % 2 == 0)
        throw std::invalid_argument("t must be an odd integer >= 3");
    if (base.edge_count() == 0)
        throw std::invalid_argument("base graph needs at least one edge");
    if (lengths.size() != std::size_t(base.edge_count()))
        throw std::invalid_argument("one cycle length per base edge required");
    for (int len : lengths)
        if (len < t || len % 2 == 0)
            throw std::invalid_argument("cycle lengths must be odd and at least t");
}

BalloonLayout balloon_layout(const BallooningSpec& spec) {
    spec.validate();
    const auto edges = spec.base.edges();
    long long extra = 0;
    for (int len : spec.lengths) extra += len - 2;
    if (spec.base.order() + extra > Graph::kMaxVertices)
        throw CapacityError("ballooning exceeds 128 vertices");

    BalloonLayout layout;
    layout.base_order = spec.base.order();
    Graph g(int(spec.base.order() + extra));
    int next = spec.base.order();
    for (std::size_t i = 0; i < edges.size(); ++i) {
        auto [u, v] = edges[i];
        int len = spec.lengths[i];
        BalloonCycle cycle;
        cycle.u = u;
        cycle.v = v;
        cycle.vertices.push_back(u);
        g.add_edge(u, v);
        int prev = u;
        for (int j = 0; j < len - 2; ++j) {
            g.add_edge(prev, next);
            cycle.vertices.push_back(next);
            prev = next++;
        }
        g.add_edge(prev, v);
        cycle.vertices.push_back(v);
        layout.cycles.push_back(std::move(cycle));
    }
    layout.graph = std::move(g);
    return layout;
}

Graph balloon(const BallooningSpec& spec) {
    return balloon_layout(spec).graph;
}

Graph divide(const Graph& g, const DivisionPlan& plan) {
    // Pendant lookup: (vertex, incident edge) -> fresh id, assigned in plan
    // order.  Main blocks keep the original ids.
    std::map<std::pair<int, std::pair<int, int>>, int> pendant_id;
    int next = g.order();
    std::vector<bool> divided(std::size_t(g.order()), false);
    for (const auto& d : plan.divisions) {
        if (d.vertex < 0 || d.vertex >= g.order())
            throw std::invalid_argument("division vertex out of range");
        if (divided[std::size_t(d.vertex)])
            throw std::invalid_argument("vertex divided twice");
        divided[std::size_t(d.vertex)] = true;
        if (d.pendant_edges.empty())
            throw std::invalid_argument("division must split off at least one edge");
        if (int(d.pendant_edges.size()) >= g.degree(d.vertex))
            throw std::invalid_argument("empty main block: too many pendant edges");
        for (auto e : d.pendant_edges) {
            auto [a, b] = e;
            if (a > b) std::swap(a, b);
            if (a != d.vertex && b != d.vertex)
                throw std::invalid_argument("pendant edge not incident to the divided vertex");
            if (!g.has_edge(a, b))
                throw std::invalid_argument("pendant edge not present in the graph");
            auto key = std::make_pair(d.vertex, std::make_pair(a, b));
            if (pendant_id.count(key))
                throw std::invalid_argument("pendant edge listed twice");
            pendant_id[key] = next++;
        }
    }
    if (next > Graph::kMaxVertices) throw CapacityError("division exceeds 128 vertices");

    Graph out(next);
    for (auto [u, v] : g.edges()) {
        auto end_at = [&](int w) {
            auto it = pendant_id.find({w, {u, v}});
            return it == pendant_id.end() ? w : it->second;
        };
        out.add_edge(end_at(u), end_at(v));
    }
    return out;
}

namespace {

std::vector<Graph> sorted_unique_by_key(std::vector<std::pair<CanonicalKey, Graph>> keyed) {
    std::sort(keyed.begin(), keyed.end(),
              [](const auto& l, const auto& r) { return l.first < r.first; });
    keyed.erase(std::unique(keyed.begin(), keyed.end(),
                            [](const auto& l, const auto& r) { return l.first == r.first; }),
                keyed.end());
    std::vector<Graph> out;
    out.reserve(keyed.size());
    for (auto& [key, g] : keyed) out.push_back(std::move(g));
    return out;
}

} // namespace

std::vector<Graph> division_family(const Graph& g, int jobs) {
    if (g.order() > 12)
        throw CapacityError("division family limited to 12 base vertices");
    const auto edges = g.edges();
    std::vector<int> splittable;
    std::vector<std::vector<std::pair<int, int>>> incident;
    long long plan_count = 1;
    for (int v = 0; v < g.order(); ++v) {
        if (g.degree(v) < 2) continue;
        splittable.push_back(v);
        std::vector<std::pair<int, int>> inc;
        for (auto [a, b] : edges)
            if (a == v || b == v) inc.push_back({a, b});
        incident.push_back(std::move(inc));
        plan_count *= (1ll << g.degree(v)) - 1;
        if (plan_count > 2'000'000)
            throw CapacityError("division family too large to enumerate");
    }

    // Odometer over per-vertex pendant subsets; each digit runs over the
    // proper subsets of the incident edges (0 = no division there).
    std::vector<DivisionPlan> plans;
    std::vector<std::uint32_t> digit(splittable.size(), 0);
    for (;;) {
        DivisionPlan plan;
        for (std::size_t i = 0; i < splittable.size(); ++i) {
            if (digit[i] == 0) continue;
            DivisionPlan::VertexDivision d;
            d.vertex = splittable[i];
            for (std::size_t j = 0; j < incident[i].size(); ++j)
                if ((digit[i] >> j) & 1) d.pendant_edges.push_back(incident[i][j]);
            plan.divisions.push_back(std::move(d));
        }
        plans.push_back(std::move(plan));

        std::size_t pos = 0;
        while (pos < digit.size()) {
            ++digit[pos];
            if (digit[pos] <= (1u << incident[pos].size()) - 2u) break;
            digit[pos] = 0;
            ++pos;
        }
        if (pos == digit.size()) break;
    }

    std::vector<std::pair<CanonicalKey, Graph>> keyed(plans.size());
    parallel_for(plans.size(), jobs, [&](std::size_t i) {
        Graph canon = canonical_form(divide(g, plans[i]));
        keyed[i] = {CanonicalKey{graph6_encode(canon)}, std::move(canon)};
    });
    return sorted_unique_by_key(std::move(keyed));
}

// ---------------------------------------------------------------------------
// 2-decomposition membership
//
// Host shape (M u Y1) v Y2 with independent Y1, Y2.  An embedding of H(t)
// decomposes into:
//   * a side assignment of base vertices to V(M) (injective) or to Y2,
//     with the Y2 part independent in H;
//   * a bijection from base edges to M edges: an edge with both ends in M
//     must map to the edge joining its images; an edge with one end in Y2
//     maps to an M edge whose endpoints are the M-side image or vertices
//     free of any other use;
//   * cycle interiors padded through fresh Y1/Y2 vertices, always possible
//     for cycle lengths >= 5.
// Base vertices never need Y1: a placement there converts into a fresh
// M vertex of the fully-fresh M edge one of its cycles uses.
// ---------------------------------------------------------------------------

namespace {

constexpr int kSideY2 = -1;
constexpr int kUnassigned = -2;

struct EdgeAssignment {
    int medge = -1;       // index into M edge list
    bool at_image = false; // M edge touches the M-side image of this base edge
    bool direct = false;   // both ends in M: the image edge itself
};

struct MembershipSearch {
    const Graph& base;
    const Graph& m;
    std::vector<std::pair<int, int>> base_edges;
    std::vector<std::pair<int, int>> m_edges;
    std::vector<int> vertex_order;   // base vertices, assignment order
    std::vector<int> assign;         // base vertex -> M vertex or kSideY2
    std::vector<std::vector<int>> m_automorphisms;
    VertexSet m_used;                // M vertices taken as images
    std::vector<EdgeAssignment> chosen;
    bool found = false;

    MembershipSearch(const Graph& b, const Graph& mm) : base(b), m(mm) {
        base_edges = base.edges();
        m_edges = m.edges();
        assign.assign(std::size_t(base.order()), kUnassigned);
        m_automorphisms = automorphism_generators(m);
        plan_vertex_order();
    }

    // Interchangeable M placements are tried once per node: x is skipped
    // when a known automorphism of M fixing every currently assigned image
    // maps an already-tried option onto it.  Collapses the component
    // symmetry of candidates like kP2.
    std::vector<int> current_orbits() const {
        std::vector<int> parent(std::size_t(m.order()));
        std::iota(parent.begin(), parent.end(), 0);
        std::function<int(int)> find = [&](int v) {
            while (parent[std::size_t(v)] != v) {
                parent[std::size_t(v)] = parent[std::size_t(parent[std::size_t(v)])];
                v = parent[std::size_t(v)];
            }
            return v;
        };
        for (const auto& sigma : m_automorphisms) {
            bool fixes_assigned = true;
            for (int x = m_used.first(); x >= 0; x = m_used.next(x))
                if (sigma[std::size_t(x)] != x) {
                    fixes_assigned = false;
                    break;
                }
            if (!fixes_assigned) continue;
            for (int x = 0; x < m.order(); ++x)
                parent[std::size_t(find(x))] = find(sigma[std::size_t(x)]);
        }
        std::vector<int> rep(std::size_t(m.order()));
        for (int x = 0; x < m.order(); ++x) rep[std::size_t(x)] = find(x);
        return rep;
    }

    void plan_vertex_order() {
        const int n = base.order();
        std::vector<bool> placed(std::size_t(n), false);
        for (int step = 0; step < n; ++step) {
            int best = -1, best_links = -1, best_deg = -1;
            for (int v = 0; v < n; ++v) {
                if (placed[std::size_t(v)]) continue;
                if (base.degree(v) == 0) continue; // isolated: no constraints
                int links = 0;
                for (int u = 0; u < n; ++u)
                    if (placed[std::size_t(u)] && base.has_edge(u, v)) ++links;
                int deg = base.degree(v);
                if (links > best_links || (links == best_links && deg > best_deg)) {
                    best = v;
                    best_links = links;
                    best_deg = deg;
                }
            }
            if (best < 0) break;
            placed[std::size_t(best)] = true;
            vertex_order.push_back(best);
        }
    }

    bool compatible(int v, int choice) const {
        VertexSet nb = base.neighbors(v);
        for (int u = nb.first(); u >= 0; u = nb.next(u)) {
            int a = assign[std::size_t(u)];
            if (a == kUnassigned) continue;
            if (choice == kSideY2 && a == kSideY2) return false; // Y2 independent
            if (choice >= 0 && a >= 0 && !m.has_edge(choice, a)) return false;
        }
        return true;
    }

    bool place(std::size_t depth) {
        if (depth == vertex_order.size()) return match_edges();
        int v = vertex_order[depth];
        if (compatible(v, kSideY2)) {
            assign[std::size_t(v)] = kSideY2;
            if (feasible_so_far() && place(depth + 1)) return true;
            assign[std::size_t(v)] = kUnassigned;
        }
        std::vector<int> orbit_rep = current_orbits();
        VertexSet tried_orbits;
        for (int x = 0; x < m.order(); ++x) {
            if (m_used.test(x)) continue;
            if (tried_orbits.test(orbit_rep[std::size_t(x)])) continue;
            if (!compatible(v, x)) continue;
            tried_orbits.set(orbit_rep[std::size_t(x)]);
            assign[std::size_t(v)] = x;
            m_used.set(x);
            if (feasible_so_far() && place(depth + 1)) return true;
            m_used.reset(x);
            assign[std::size_t(v)] = kUnassigned;
        }
        return false;
    }

    // Edges whose endpoints are both decided must already admit a partial
    // matching; otherwise the whole assignment subtree is dead.
    bool feasible_so_far() {
        std::vector<std::size_t> decided;
        for (std::size_t idx = 0; idx < base_edges.size(); ++idx) {
            auto [u, v] = base_edges[idx];
            if (assign[std::size_t(u)] != kUnassigned && assign[std::size_t(v)] != kUnassigned)
                decided.push_back(idx);
        }
        chosen.assign(base_edges.size(), EdgeAssignment{});
        std::vector<bool> medge_used(m_edges.size(), false);
        VertexSet consumed;
        return match_edge(decided, 0, medge_used, consumed);
    }

    // Assign every base edge a distinct M edge under the consumption rules.
    bool match_edges() {
        std::vector<std::size_t> all(base_edges.size());
        for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
        chosen.assign(base_edges.size(), EdgeAssignment{});
        std::vector<bool> medge_used(m_edges.size(), false);
        VertexSet consumed; // fresh M vertices eaten as cycle interiors
        if (!match_edge(all, 0, medge_used, consumed)) return false;
        found = true;
        return true;
    }

    bool match_edge(const std::vector<std::size_t>& edges, std::size_t pos,
                    std::vector<bool>& medge_used, VertexSet& consumed) {
        if (pos == edges.size()) return true;
        std::size_t idx = edges[pos];
        auto [u, v] = base_edges[idx];
        int au = assign[std::size_t(u)];
        int av = assign[std::size_t(v)];
        if (au >= 0 && av >= 0) {
            // Forced: the image edge itself.
            int found_edge = -1;
            for (std::size_t j = 0; j < m_edges.size(); ++j) {
                auto [a, b] = m_edges[j];
                if ((a == au && b == av) || (a == av && b == au)) {
                    found_edge = int(j);
                    break;
                }
            }
            if (found_edge < 0 || medge_used[std::size_t(found_edge)]) return false;
            medge_used[std::size_t(found_edge)] = true;
            chosen[idx] = {found_edge, false, true};
            if (match_edge(edges, pos + 1, medge_used, consumed)) return true;
            medge_used[std::size_t(found_edge)] = false;
            return false;
        }
        int image = std::max(au, av); // the M-side image, or kSideY2 if none
        for (std::size_t j = 0; j < m_edges.size(); ++j) {
            if (medge_used[j]) continue;
            auto [a, b] = m_edges[j];
            bool a_ok = a == image || (!m_used.test(a) && !consumed.test(a));
            bool b_ok = b == image || (!m_used.test(b) && !consumed.test(b));
            if (!a_ok || !b_ok) continue;
            bool at_image = (a == image || b == image);
            medge_used[j] = true;
            VertexSet eaten;
            if (a != image) eaten.set(a);
            if (b != image) eaten.set(b);
            consumed |= eaten;
            chosen[idx] = {int(j), at_image, false};
            if (match_edge(edges, pos + 1, medge_used, consumed)) return true;
            consumed = consumed.and_not(eaten);
            medge_used[j] = false;
        }
        return false;
    }
};

// Symbolic host slot used while laying out the witness cycles.
struct Slot {
    enum Kind { M, Y1, Y2 } kind;
    int index;
};

struct WitnessBuilder {
    const BalloonLayout& layout;
    const MembershipSearch& search;
    const std::vector<int>& lengths;
    int y1_next = 0;
    int y2_next = 0;
    std::vector<Slot> image; // balloon vertex -> slot

    WitnessBuilder(const BalloonLayout& l, const MembershipSearch& s, const std::vector<int>& len)
        : layout(l), search(s), lengths(len) {
        image.assign(std::size_t(l.graph.order()), Slot{Slot::Y1, -1});
    }

    Slot fresh_y1() { return {Slot::Y1, y1_next++}; }
    Slot fresh_y2() { return {Slot::Y2, y2_next++}; }

    void build() {
        // Base vertices first.
        for (int v = 0; v < layout.base_order; ++v) {
            int a = search.assign[std::size_t(v)];
            if (a == kUnassigned)
                image[std::size_t(v)] = fresh_y1(); // isolated base vertex
            else if (a == kSideY2)
                image[std::size_t(v)] = fresh_y2();
            else
                image[std::size_t(v)] = {Slot::M, a};
        }
        for (std::size_t e = 0; e < layout.cycles.size(); ++e) lay_cycle(e);
    }

    // Interior slots of one expanded cycle.  The cycle is
    // u, w_1, ..., w_{len-2}, v plus the direct edge uv; interiors are
    // w_1..w_{len-2}.  All edges except the designated M edge must cross
    // between side 1 (M or Y1) and Y2.
    void lay_cycle(std::size_t e) {
        const BalloonCycle& cyc = layout.cycles[e];
        const EdgeAssignment& ea = search.chosen[e];
        auto [ma, mb] = search.m_edges[std::size_t(ea.medge)];
        const int len = lengths[e];
        const int interior = len - 2;
        std::vector<Slot> w(interior);

        Slot su = image[std::size_t(cyc.u)];
        Slot sv = image[std::size_t(cyc.v)];
        if (ea.direct) {
            // Direct M edge between the two images; interior alternates
            // Y2, Y1, Y2, ..., Y2.
            for (int i = 0; i < interior; ++i)
                w[std::size_t(i)] = (i % 2 == 0) ? fresh_y2() : fresh_y1();
        } else if (ea.at_image) {
            // The M edge hangs off the M-side image; orient the interior so
            // it starts there.
            bool u_is_m = su.kind == Slot::M;
            int x = u_is_m ? su.index : sv.index;
            int other = (ma == x) ? mb : ma;
            // position 0 (next to the M image): the fresh M endpoint, then
            // Y2, Y1, ... finishing next to the Y2 image.
            w[0] = {Slot::M, other};
            for (int i = 1; i < interior; ++i)
                w[std::size_t(i)] = (i % 2 == 1) ? fresh_y2() : fresh_y1();
            if (!u_is_m) std::reverse(w.begin(), w.end());
        } else {
            // Fully fresh M edge in the middle: y2, a, b, then padding
            // Y2, Y1 pairs toward the Y2-side image.
            bool u_is_m = su.kind == Slot::M;
            w[0] = fresh_y2();
            w[1] = {Slot::M, ma};
            w[2] = {Slot::M, mb};
            for (int i = 3; i < interior; ++i)
                w[std::size_t(i)] = (i % 2 == 1) ? fresh_y2() : fresh_y1();
            if (!u_is_m) std::reverse(w.begin(), w.end());
        }
        for (int i = 0; i < interior; ++i)
            image[std::size_t(cyc.vertices[std::size_t(i + 1)])] = w[std::size_t(i)];
    }
};

MembershipWitness materialize_witness(const BalloonLayout& layout, const Graph& m,
                                      const WitnessBuilder& built) {
    int y = std::max({built.y1_next, built.y2_next, 1});
    // Prefer the definitional side size nu(H(t)) when it fits.
    int m0 = layout.graph.order();
    if (m.order() + 2 * m0 <= Graph::kMaxVertices)
        y = std::max(y, m0);
    if (m.order() + 2 * y > Graph::kMaxVertices)
        throw CapacityError("membership witness host exceeds 128 vertices");

    Graph host(m.order() + 2 * y);
    for (auto [a, b] : m.edges()) host.add_edge(a, b);
    for (int s1 = 0; s1 < m.order() + y; ++s1)
        for (int s2 = 0; s2 < y; ++s2)
            host.add_edge(s1, m.order() + y + s2);

    MembershipWitness witness;
    witness.m_order = m.order();
    witness.y_size = y;
    witness.embedding.map.resize(std::size_t(layout.graph.order()));
    for (int v = 0; v < layout.graph.order(); ++v) {
        Slot s = built.image[std::size_t(v)];
        int id = 0;
        switch (s.kind) {
            case Slot::M: id = s.index; break;
            case Slot::Y1: id = m.order() + s.index; break;
            case Slot::Y2: id = m.order() + y + s.index; break;
        }
        witness.embedding.map[std::size_t(v)] = id;
    }
    if (!is_valid_embedding(host, layout.graph, witness.embedding))
        throw std::logic_error("internal error: witness embedding failed validation");
    witness.host = std::move(host);
    return witness;
}

} // namespace

std::optional<MembershipWitness> decomposition_membership(const Graph& m,
                                                          const BallooningSpec& spec) {
    spec.validate();
    for (int len : spec.lengths)
        if (len < 5)
            throw ScopeError("structured membership requires cycle lengths >= 5 "
                             "(out of theorem scope)");
    if (m.edge_count() != spec.base.edge_count()) return std::nullopt;
    for (int v = 0; v < m.order(); ++v)
        if (m.degree(v) == 0) return std::nullopt;

    MembershipSearch search(spec.base, m);
    if (!search.place(0)) return std::nullopt;

    BalloonLayout layout = balloon_layout(spec);
    WitnessBuilder builder(layout, search, spec.lengths);
    builder.build();
    return materialize_witness(layout, m, builder);
}

std::optional<MembershipWitness> decomposition_membership_generic(const Graph& m,
                                                                  const BallooningSpec& spec) {
    spec.validate();
    if (m.edge_count() != spec.base.edge_count()) return std::nullopt;
    for (int v = 0; v < m.order(); ++v)
        if (m.degree(v) == 0) return std::nullopt;

    BalloonLayout layout = balloon_layout(spec);
    int m0 = layout.graph.order();
    if (m.order() + 2 * m0 > Graph::kMaxVertices)
        throw CapacityError("definitional membership host exceeds 128 vertices");
    Graph host(m.order() + 2 * m0);
    for (auto [a, b] : m.edges()) host.add_edge(a, b);
    for (int s1 = 0; s1 < m.order() + m0; ++s1)
        for (int s2 = 0; s2 < m0; ++s2)
            host.add_edge(s1, m.order() + m0 + s2);

    auto emb = find_subgraph(host, layout.graph);
    if (!emb) return std::nullopt;
    MembershipWitness witness;
    witness.m_order = m.order();
    witness.y_size = m0;
    witness.embedding = *emb;
    witness.host = std::move(host);
    return witness;
}

DecompositionFamily decomposition_family(const BallooningSpec& spec, int jobs) {
    spec.validate();
    if (spec.t < 5)
        throw ScopeError("decomposition families are computed for t >= 5 only "
                         "(out of theorem scope)");
    if (!spec.base.is_bipartite())
        throw std::invalid_argument("decomposition family requires a bipartite base");
    if (spec.base.order() > 12)
        throw CapacityError("decomposition family limited to 12 base vertices");

    // Candidates: division family members with isolated vertices stripped
    // (minimality never keeps an isolated vertex).
    std::vector<Graph> raw = division_family(spec.base, jobs);
    std::vector<std::pair<CanonicalKey, Graph>> keyed;
    for (const Graph& g : raw) {
        VertexSet keep;
        for (int v = 0; v < g.order(); ++v)
            if (g.degree(v) > 0) keep.set(v);
        Graph stripped = canonical_form(g.induced(keep));
        keyed.emplace_back(CanonicalKey{graph6_encode(stripped)}, std::move(stripped));
    }
    std::vector<Graph> candidates = sorted_unique_by_key(std::move(keyed));

    std::vector<std::optional<MembershipWitness>> verdicts(candidates.size());
    parallel_for(candidates.size(), jobs, [&](std::size_t i) {
        verdicts[i] = decomposition_membership(candidates[i], spec);
    });

    DecompositionFamily family;
    family.spec = spec;
    for (std::size_t i = 0; i < candidates.size(); ++i) {
        if (!verdicts[i]) continue;
        // Safety net: removing any edge must kill membership (members are
        // minimal because they carry exactly e(base) edges).
        Graph pruned = candidates[i];
        auto first_edge = pruned.edges().front();
        pruned.remove_edge(first_edge.first, first_edge.second);
        if (decomposition_membership(pruned, spec))
            throw std::logic_error("internal error: non-minimal member detected");
        FamilyMember member;
        member.graph = candidates[i];
        member.key = CanonicalKey{graph6_encode(candidates[i])};
        member.witness = std::move(*verdicts[i]);
        family.members.push_back(std::move(member));
    }
    return family;
}

ExtremalProfile profile(const DecompositionFamily& family) {
    if (family.members.empty())
        throw std::invalid_argument("cannot profile an empty decomposition family");

    ExtremalProfile out;
    // q: minimum gamma over (bipartite) members.
    std::vector<IndependentCoverings> covering_info(family.members.size());
    int q = -1;
    for (std::size_t i = 0; i < family.members.size(); ++i) {
        const Graph& g = family.members[i].graph;
        if (!g.is_bipartite()) continue;
        covering_info[i] = independent_covering(g);
        if (q < 0 || covering_info[i].gamma < q) q = covering_info[i].gamma;
    }
    if (q < 0) throw std::logic_error("no bipartite member in decomposition family");
    out.q = q;

    // S: minimum coverings of the members attaining q; k: least degree seen
    // inside any of them.
    out.k = Graph::kMaxVertices;
    for (std::size_t i = 0; i < family.members.size(); ++i) {
        const Graph& g = family.members[i].graph;
        if (!g.is_bipartite() || covering_info[i].gamma != q) continue;
        for (const VertexSet& s : covering_info[i].coverings) {
            out.coverings.push_back({int(i), s});
            for (int v = s.first(); v >= 0; v = s.next(v))
                out.k = std::min(out.k, g.degree(v));
        }
    }

    // B: induced subgraphs of sub-q covers, or the fallback K_q.
    std::vector<std::pair<CanonicalKey, Graph>> keyed;
    for (const auto& member : family.members) {
        for (const VertexSet& cover : vertex_covers_below(member.graph, q)) {
            Graph sub = canonical_form(member.graph.induced(cover));
            keyed.emplace_back(CanonicalKey{graph6_encode(sub)}, std::move(sub));
        }
    }
    if (keyed.empty()) {
        out.b_fallback = true;
        Graph kq = q == 0 ? Graph(0) : (q == 1 ? Graph(1) : make_complete(q));
        out.b_family = {canonical_form(kq)};
    } else {
        out.b_family = sorted_unique_by_key(std::move(keyed));
    }
    return out;
}

} // namespace turan
