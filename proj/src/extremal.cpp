#include "turan/extremal.hpp"

#include <algorithm>
#include <stdexcept>

#include "turan/enumerate.hpp"
#include "turan/graph6.hpp"
#include "turan/invariants.hpp"

namespace turan {

long long turan_edges(int p, long long n) {
    if (p < 1) throw std::invalid_argument("turan graph needs at least one part");
    if (n < 0) throw std::invalid_argument("order must be nonnegative");
    long long q = n / p, r = n % p;
    // r parts of size q+1, p-r parts of size q.
    long long inside = r * (q + 1) * q / 2 + (p - r) * q * (q - 1) / 2;
    return n * (n - 1) / 2 - inside;
}

long long f_value(long long n, int q) {
    if (q < 1) throw std::invalid_argument("f(n,q) needs q >= 1");
    if (n < q) throw std::invalid_argument("f(n,q) needs n >= q");
    return turan_edges(2, n - q + 1) + (long long)(q - 1) * (n - q + 1);
}

long long ConstructionRecipe::edge_total() const {
    return f_value(n, q) + q_graph.edge_count() + (long long)k * k;
}

Graph build_family(const ConstructionRecipe& recipe) {
    if (recipe.q < 1 || recipe.k < 0 || recipe.side < 0 || recipe.side > 1)
        throw std::invalid_argument("malformed construction recipe");
    if (recipe.q_graph.order() != recipe.q - 1)
        throw std::invalid_argument("Q must have exactly q-1 vertices");
    if (recipe.n > Graph::kMaxVertices)
        throw CapacityError("construction exceeds 128 vertices");
    long long rest = recipe.n - recipe.q + 1;
    if (rest < 2) throw std::invalid_argument("no room for the Turan part");
    int size1 = int((rest + 1) / 2), size2 = int(rest / 2);
    int chosen = recipe.side == 0 ? size1 : size2;
    if (chosen < 2 * recipe.k)
        throw std::invalid_argument("chosen Turan class cannot fit K_{k,k}");

    Graph g = join(recipe.q_graph, make_complete_bipartite(size1, size2));
    int class_base = recipe.q - 1 + (recipe.side == 0 ? 0 : size1);
    for (int i = 0; i < recipe.k; ++i)
        for (int j = 0; j < recipe.k; ++j)
            g.add_edge(class_base + i, class_base + recipe.k + j);
    return g;
}

ExResult ex_small(int order, const std::vector<Graph>& family, int jobs) {
    if (order < 0) throw std::invalid_argument("order must be nonnegative");
    bool any_live = false;
    for (const Graph& f : family)
        if (f.order() <= order) any_live = true;
    if (!any_live) {
        // Nothing can embed: the complete graph is trivially free.
        ExResult out;
        out.max_edges = (long long)order * (order - 1) / 2;
        out.extremal = {order == 0 ? Graph(0)
                                   : canonical_form(make_complete(order))};
        return out;
    }
    if (order > 9) throw CapacityError("exact Turan solver limited to order 9");
    auto oracle = turan_oracle(order, family, jobs);
    return ExResult{oracle.max_edges, oracle.extremal};
}

namespace {

Graph complete_or_empty(int n) {
    return n <= 0 ? Graph(0) : make_complete(n);
}

std::vector<ConstructionRecipe> family_recipes(long long n, int q, int k,
                                               const std::vector<Graph>& ex_set) {
    std::vector<ConstructionRecipe> recipes;
    long long rest = n - q + 1;
    int size1 = int((rest + 1) / 2), size2 = int(rest / 2);
    for (const Graph& q_graph : ex_set) {
        ConstructionRecipe r;
        r.n = n;
        r.q = q;
        r.k = k;
        r.q_graph = q_graph;
        r.side = 0;
        if (size1 >= 2 * k) recipes.push_back(r);
        // Odd Turan part: the classes differ, both placements are distinct
        // constructions.
        if (k > 0 && size1 != size2 && size2 >= 2 * k) {
            r.side = 1;
            recipes.push_back(r);
        }
    }
    if (recipes.empty())
        throw std::invalid_argument("n too small to host the construction family");
    return recipes;
}

} // namespace

BoundsReport theorem_bounds(const BallooningSpec& spec, long long n, int jobs) {
    if (spec.t < 5)
        throw ScopeError("theorem bounds require t >= 5 (out of theorem scope)");
    BoundsReport report;
    report.family = decomposition_family(spec, jobs);
    report.extremal_profile = profile(report.family);
    const auto& prof = report.extremal_profile;
    report.q = prof.q;
    report.k = prof.k;

    if (n < prof.q + 1 + 2 * (long long)(prof.k - 1))
        throw std::invalid_argument("n below the structural minimum for these bounds");

    ExResult ex_b = ex_small(prof.q - 1, prof.b_family, jobs);
    report.lower = f_value(n, prof.q) + ex_b.max_edges;
    report.upper = report.lower + (long long)(prof.k - 1) * (prof.k - 1);
    report.tight = prof.k == 1;
    report.recipes = family_recipes(n, prof.q, prof.k - 1, ex_b.extremal);
    return report;
}

CorollaryResult corollary_value(const CorollaryQuery& query, int jobs) {
    if (query.t < 5 || query.t % 2 == 0)
        throw ScopeError("corollary formulas require odd t >= 5 (out of theorem scope)");
    CorollaryResult result;
    switch (query.kind) {
        case CorollaryKind::Star: {
            if (query.a < 2) throw std::invalid_argument("star corollary needs a >= 2");
            result.value = turan_edges(2, query.n) + (long long)(query.a - 1) * (query.a - 1);
            result.attains_upper = true;
            result.recipes = family_recipes(query.n, 1, query.a - 1, {Graph(0)});
            break;
        }
        case CorollaryKind::Path: {
            if (query.m < 1) throw std::invalid_argument("path corollary needs m >= 1 edges");
            int d = query.m % 2 == 0 ? query.m / 2 : (query.m + 1) / 2;
            long long base = f_value(query.n, d) + (long long)(d - 1) * (d - 2) / 2;
            if (query.m % 2 == 0) {
                result.value = base + 1;
                result.attains_upper = true;
                result.recipes = family_recipes(query.n, d, 1, {complete_or_empty(d - 1)});
            } else {
                result.value = base;
                result.attains_upper = true; // k = 1: both ends coincide
                result.recipes = family_recipes(query.n, d, 0, {complete_or_empty(d - 1)});
            }
            break;
        }
        case CorollaryKind::EvenCycle: {
            if (query.m < 4 || query.m % 2 != 0)
                throw std::invalid_argument("even-cycle corollary needs even m >= 4");
            int d = query.m / 2;
            result.value = f_value(query.n, d) + (long long)(d - 1) * (d - 2) / 2 + 1;
            result.attains_upper = true;
            result.recipes = family_recipes(query.n, d, 1, {complete_or_empty(d - 1)});
            break;
        }
        case CorollaryKind::GoodTree: {
            const Graph& tree = query.tree;
            if (tree.order() < 2 || tree.edge_count() != tree.order() - 1 ||
                tree.components() != 1)
                throw std::invalid_argument("good-tree corollary needs a tree");
            Bipartition classes = bipartition(tree);
            bool leaf_in_a = false;
            for (int v = classes.a.first(); v >= 0; v = classes.a.next(v))
                if (tree.degree(v) == 1) leaf_in_a = true;
            if (!leaf_in_a)
                throw std::invalid_argument(
                    "good-tree corollary requires a degree-one vertex in class A");
            auto spec = BallooningSpec::uniform(tree, query.t);
            auto family = decomposition_family(spec, jobs);
            auto prof = profile(family);
            if (prof.q != classes.a.count())
                throw std::logic_error("good-tree profile disagrees with |A|");
            ExResult ex_b = ex_small(prof.q - 1, prof.b_family, jobs);
            result.value = f_value(query.n, prof.q) + ex_b.max_edges;
            result.attains_upper = prof.k == 1;
            result.recipes = family_recipes(query.n, prof.q, 0, ex_b.extremal);
            break;
        }
    }
    return result;
}

long long phi(long long alpha, long long delta) {
    if (alpha < 0 || delta < 0) throw std::invalid_argument("phi needs nonnegative arguments");
    if (alpha == 0 || delta == 0) return 0;
    return alpha * delta + (delta / 2) * (alpha / ((delta + 1) / 2));
}

} // namespace turan
