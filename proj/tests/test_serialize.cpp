#include <doctest.h>

#include "turan/serialize.hpp"

using namespace turan;

TEST_CASE("edge list round trip") {
    Graph g = make_star(3);
    std::string text = to_edge_list(g);
    CHECK(text == "4 3\n0 1\n0 2\n0 3\n");
    CHECK(from_edge_list(text) == g);
    CHECK_THROWS_AS(from_edge_list("2"), std::invalid_argument);
    CHECK_THROWS_AS(from_edge_list("2 1\n"), std::invalid_argument);
    CHECK_THROWS_AS(from_edge_list("2 1\n0 1\n3 4\n"), std::invalid_argument);
}

TEST_CASE("dot export") {
    std::string dot = to_dot(make_turan(2, 4));
    CHECK(dot.find("graph G {") == 0);
    CHECK(dot.find("digraph") == std::string::npos);
    CHECK(dot.find("0 -- 2;") != std::string::npos);
    // All four nodes listed.
    for (int v = 0; v < 4; ++v)
        CHECK(dot.find("  " + std::to_string(v) + ";") != std::string::npos);
}

TEST_CASE("graph argument dispatch") {
    CHECK(parse_graph_argument("star:3") == make_star(3));
    CHECK(parse_graph_argument("triangle") == make_cycle(3));
    CHECK(parse_graph_argument("A_") == make_path(2));
    CHECK_THROWS(parse_graph_argument("definitely-not-a-graph"));
}

TEST_CASE("report envelope is stable") {
    Json inputs;
    inputs["graph"] = "Bw";
    Json result;
    result["value"] = 7;
    Json report = make_report("demo", inputs, result);
    std::string expected =
        "{\"schema\":\"turan-report/1\",\"version\":\"0.1.0\",\"command\":\"demo\","
        "\"inputs\":{\"graph\":\"Bw\"},\"result\":{\"value\":7}}";
    CHECK(report.dump() == expected);
}

TEST_CASE("family json carries members and profile") {
    auto spec = BallooningSpec::uniform(make_star(2), 5);
    auto family = decomposition_family(spec);
    auto prof = profile(family);
    Json j = to_json(family, prof);
    CHECK(j["members"].size() == 2);
    CHECK(j["profile"]["q"] == 1);
    CHECK(j["profile"]["k"] == 2);
    CHECK(j["profile"]["B"].size() == 1);
    CHECK(j["profile"]["B_fallback_complete"] == true);
    for (const auto& member : j["members"]) {
        CHECK(member.contains("gamma"));
        CHECK(member.contains("beta"));
        CHECK(member["witness"]["map"].is_array());
    }
}

TEST_CASE("text rendering flattens the report") {
    Json report = make_report("demo", Json{{"x", 1}}, Json{{"y", std::vector<int>{1, 2}}});
    std::string text = render_text(report);
    CHECK(text.find("command: \"demo\"") != std::string::npos);
    CHECK(text.find("inputs.x: 1") != std::string::npos);
    CHECK(text.find("result.y: [1,2]") != std::string::npos);
}
