#include <cstdio>
#include <string>

#include "doctest.h"
#include "koebe/constructions.hpp"
#include "koebe/errors.hpp"
#include "koebe/json_io.hpp"

using namespace koebe;

TEST_SUITE("json") {

TEST_CASE("graph documents") {
    const EmbeddedTriangulation t = icosahedron();
    const json j = graph_to_json(t.graph);
    CHECK(j.at("n") == 12);
    CHECK(j.at("edges").size() == 30);
    const PlanarGraph back = graph_from_json(j);
    CHECK(back == t.graph);
    CHECK(*back.rotation_system() == *t.graph.rotation_system());

    const PlanarGraph k3 = graph_from_json(json::parse(R"({"n":3,"edges":[[0,1],[1,2],[0,2]]})"));
    CHECK(k3.num_edges() == 3);
    CHECK_FALSE(k3.has_rotation());
    CHECK_THROWS_AS(graph_from_json(json::parse(R"({"edges":[]})")), InputError);
    CHECK_THROWS_AS(graph_from_json(json::parse(R"({"n":3,"edges":[[0,0]]})")), InputError);
    CHECK_THROWS_AS(graph_from_json(json::parse(R"({"n":3,"edges":[[0,1,2]]})")), InputError);
    CHECK_THROWS_AS(graph_from_json(json::parse(R"({"n":"3","edges":[]})")), InputError);
}

TEST_CASE("orderings and models") {
    const VertexOrdering o = ordering_from_json(json::parse("[2,0,1]"), 3);
    CHECK(o.rank(2) == 0);
    CHECK(ordering_to_json(o) == json::parse("[2,0,1]"));
    CHECK_THROWS_AS(ordering_from_json(json::parse("[0,1]"), 3), InputError);
    CHECK_THROWS_AS(ordering_from_json(json::parse("{}"), 3), InputError);

    const GridCoinInstance g = gen_grid_coin(14);
    const CoinModel back = model_from_json(json::parse(model_to_json(g.model).dump()));
    REQUIRE(back.size() == g.model.size());
    for (Vertex v = 0; v < back.size(); ++v) CHECK(back[v] == g.model[v]);
    CHECK_THROWS_AS(model_from_json(json::parse(R"({"discs":[{"id":1,"x":0,"y":0,"r":1}]})")), InputError);
    CHECK_THROWS_AS(model_from_json(json::parse(R"({"discs":[{"id":0,"x":0,"y":0,"r":-1}]})")), InputError);
}

TEST_CASE("witness documents") {
    WitnessFamily f{WitnessFamily::Kind::Q, "", "WE", {{1, 2, 3}, {1, 4}}};
    const WitnessFamily back = witness_from_json(witness_to_json(f));
    CHECK(back.kind == f.kind);
    CHECK(back.s == "WE");
    CHECK(back.paths == f.paths);
    CHECK_THROWS_AS(witness_from_json(json::parse(R"({"kind":"R","paths":[]})")), InputError);
}

TEST_CASE("formatting and hashing") {
    CHECK(format_double(0.1) == "0.10000000000000001");
    CHECK(format_double(1.0) == "1");
    CHECK(std::stod(format_double(1.0 / 3.0)) == 1.0 / 3.0);
    CHECK(fnv1a_hex("") == "cbf29ce484222325");
    CHECK(fnv1a_hex("a") == "af63dc4c8601ec8c");
}

TEST_CASE("files") {
    const std::string path = "koebe_json_test.json";
    write_text_file(path, R"({"n":2,"edges":[[0,1]]})");
    CHECK(graph_from_json(read_json_file(path)).num_edges() == 1);
    write_text_file(path, "{not json");
    CHECK_THROWS_AS(read_json_file(path), InputError);
    std::remove(path.c_str());
    CHECK_THROWS_AS(read_text_file("/nonexistent/file.json"), InputError);
}

}  // TEST_SUITE
