#include "turan/serialize.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "turan/graph6.hpp"
#include "turan/invariants.hpp"

namespace turan {

std::string to_edge_list(const Graph& g) {
    std::ostringstream out;
    out << g.order() << ' ' << g.edge_count() << '\n';
    for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
    return out.str();
}

Graph from_edge_list(const std::string& text) {
    std::istringstream in(text);
    int n = 0, m = 0;
    if (!(in >> n >> m)) throw std::invalid_argument("edge list: bad header");
    Graph g(n);
    for (int i = 0; i < m; ++i) {
        int u = 0, v = 0;
        if (!(in >> u >> v)) throw std::invalid_argument("edge list: truncated");
        g.add_edge(u, v);
    }
    int extra;
    if (in >> extra) throw std::invalid_argument("edge list: trailing data");
    if (g.edge_count() != m) throw std::invalid_argument("edge list: duplicate edges");
    return g;
}

std::string to_dot(const Graph& g) {
    std::ostringstream out;
    out << "graph G {\n";
    for (int v = 0; v < g.order(); ++v) out << "  " << v << ";\n";
    for (auto [u, v] : g.edges()) out << "  " << u << " -- " << v << ";\n";
    out << "}\n";
    return out.str();
}

Graph parse_graph_argument(const std::string& text) {
    if (text.find(':') != std::string::npos || text == "triangle" || text == "edge")
        return parse_named(text);
    if (std::filesystem::exists(text)) {
        std::ifstream in(text);
        std::stringstream buffer;
        buffer << in.rdbuf();
        return from_edge_list(buffer.str());
    }
    return graph6_decode(text);
}

Json graph_summary(const Graph& g) {
    Json j;
    j["graph6"] = graph6_encode(g);
    j["order"] = g.order();
    j["edges"] = g.edge_count();
    return j;
}

Json to_json(const Embedding& emb) {
    return Json(emb.map);
}

Json to_json(const SubgraphStats& stats) {
    Json j;
    j["nodes"] = stats.nodes;
    j["degree_prunes"] = stats.degree_prunes;
    j["adjacency_prunes"] = stats.adjacency_prunes;
    j["parity_rejected"] = stats.parity_rejected;
    j["max_depth"] = stats.max_depth;
    return j;
}

Json to_json(const FreenessCertificate& cert) {
    Json j;
    j["free"] = cert.free;
    if (cert.embedding) j["embedding"] = to_json(*cert.embedding);
    j["rules"] = cert.rules;
    j["stats"] = to_json(cert.stats);
    return j;
}

Json to_json(const BallooningSpec& spec) {
    Json j;
    j["base"] = graph_summary(spec.base);
    j["t"] = spec.t;
    j["lengths"] = spec.lengths;
    return j;
}

Json to_json(const DecompositionFamily& family, const ExtremalProfile& prof) {
    Json j;
    j["spec"] = to_json(family.spec);
    BalloonLayout layout = balloon_layout(family.spec);
    j["ballooning"] = graph_summary(layout.graph);

    Json members = Json::array();
    for (const auto& member : family.members) {
        Json mj;
        mj["graph6"] = member.key.bytes;
        mj["order"] = member.graph.order();
        mj["edges"] = member.graph.edge_count();
        auto cov = independent_covering(member.graph);
        mj["gamma"] = cov.gamma;
        mj["beta"] = vertex_cover_number(member.graph);
        Json coverings = Json::array();
        for (const auto& s : cov.coverings) coverings.push_back(s.to_vector());
        mj["min_independent_coverings"] = coverings;
        Json wj;
        wj["host_order"] = member.witness.host.order();
        wj["m_order"] = member.witness.m_order;
        wj["y_size"] = member.witness.y_size;
        wj["map"] = to_json(member.witness.embedding);
        mj["witness"] = wj;
        members.push_back(mj);
    }
    j["members"] = members;

    Json pj;
    pj["q"] = prof.q;
    pj["k"] = prof.k;
    Json coverings = Json::array();
    for (const auto& ref : prof.coverings) {
        Json cj;
        cj["member"] = ref.member;
        cj["covering"] = ref.covering.to_vector();
        coverings.push_back(cj);
    }
    pj["S"] = coverings;
    Json b = Json::array();
    for (const Graph& g : prof.b_family) b.push_back(graph6_encode(g));
    pj["B"] = b;
    pj["B_fallback_complete"] = prof.b_fallback;
    j["profile"] = pj;
    return j;
}

Json to_json(const ConstructionRecipe& recipe) {
    Json j;
    j["n"] = recipe.n;
    j["q"] = recipe.q;
    j["k"] = recipe.k;
    j["Q"] = graph6_encode(recipe.q_graph);
    j["side"] = recipe.side;
    j["edges"] = recipe.edge_total();
    return j;
}

Json to_json(const BoundsReport& report) {
    Json j;
    j["q"] = report.q;
    j["k"] = report.k;
    j["lower"] = report.lower;
    j["upper"] = report.upper;
    j["tight"] = report.tight;
    j["regime"] = "asymptotic: valid for sufficiently large n";
    Json recipes = Json::array();
    for (const auto& r : report.recipes) recipes.push_back(to_json(r));
    j["recipes"] = recipes;
    j["family"] = to_json(report.family, report.extremal_profile);
    return j;
}

Json make_report(const std::string& command, Json inputs, Json result) {
    Json j;
    j["schema"] = kSchemaVersion;
    j["version"] = kToolVersion;
    j["command"] = command;
    j["inputs"] = std::move(inputs);
    j["result"] = std::move(result);
    return j;
}

namespace {

void render_value(std::ostringstream& out, const std::string& prefix, const Json& value) {
    if (value.is_object()) {
        for (const auto& [key, sub] : value.items())
            render_value(out, prefix.empty() ? key : prefix + "." + key, sub);
    } else if (value.is_array()) {
        bool scalars = true;
        for (const auto& sub : value)
            if (sub.is_object() || sub.is_array()) scalars = false;
        if (scalars) {
            out << prefix << ": " << value.dump() << '\n';
        } else {
            int idx = 0;
            for (const auto& sub : value)
                render_value(out, prefix + "[" + std::to_string(idx++) + "]", sub);
        }
    } else {
        out << prefix << ": " << value.dump() << '\n';
    }
}

} // namespace

std::string render_text(const Json& report) {
    std::ostringstream out;
    render_value(out, "", report);
    return out.str();
}

} // namespace turan
