#include <doctest.h>

#include "autgram/corpus.hpp"
#include "autgram/error.hpp"
#include "autgram/graph.hpp"

using namespace autgram;

namespace {

ParseError::Kind kind_of(const std::string& text) {
    try {
        parse_graph(text);
    } catch (const ParseError& e) {
        return e.kind();
    }
    FAIL("expected a parse error for: " << text);
    return ParseError::Kind::Malformed;
}

}  // namespace

TEST_CASE("parse path and cycle") {
    Graph p3 = parse_graph("3 2\n1 2\n2 3");
    CHECK(p3.vertex_count() == 3);
    CHECK(p3.edges() == std::vector<Edge>{{1, 2}, {2, 3}});
    Graph c4 = parse_graph("4 4\n1 2\n2 3\n3 4\n1 4\n");
    CHECK(c4 == corpus::cycle(4));
    CHECK(parse_graph("3 2\n2 1\n3 2\n") == p3);
}

TEST_CASE("parse errors are distinguished") {
    CHECK(kind_of("2 1\n1 1") == ParseError::Kind::SelfLoop);
    CHECK(kind_of("3 2\n1 2\n2 1") == ParseError::Kind::DuplicateEdge);
    CHECK(kind_of("3 1\n1 4") == ParseError::Kind::OutOfRange);
    CHECK(kind_of("3 1\n1 x") == ParseError::Kind::Malformed);
    CHECK(kind_of("3 2\n1 2") == ParseError::Kind::Malformed);
    CHECK(kind_of("three") == ParseError::Kind::Malformed);
}

TEST_CASE("serialization round-trips") {
    for (const auto& e : corpus::standard()) {
        auto text = serialize_graph(e.graph);
        CHECK(serialize_graph(parse_graph(text)) == text);
    }
}

TEST_CASE("closed neighborhood") {
    Graph p3 = corpus::path(3);
    CHECK(closed_neighborhood(p3, {2}) == VertexSet{1, 2, 3});
    CHECK(closed_neighborhood(p3, {1}) == VertexSet{1, 2});
    CHECK(closed_neighborhood(p3, {}).empty());
    CHECK_THROWS_AS(closed_neighborhood(p3, {4}), std::out_of_range);
    for (const auto& e : corpus::standard())
        for (Vertex v = 1; v <= e.graph.vertex_count(); ++v) {
            VertexSet s{v};
            CHECK(s.is_subset_of(closed_neighborhood(e.graph, s)));
        }
}

TEST_CASE("induced subgraph") {
    Graph c4 = corpus::cycle(4);
    CHECK(induced_subgraph(c4, {1, 2, 3}) == std::vector<Edge>{{1, 2}, {2, 3}});
    CHECK(induced_subgraph(c4, {1, 3}).empty());
    CHECK(induced_subgraph(c4, {1, 2, 3, 4}) == c4.edges());
    // Monotone in the vertex set.
    auto small = induced_subgraph(c4, {1, 2});
    auto big = induced_subgraph(c4, {1, 2, 4});
    for (auto e : small) CHECK(std::find(big.begin(), big.end(), e) != big.end());
}

TEST_CASE("connectivity and degree") {
    CHECK(is_connected(corpus::cycle(4)));
    CHECK_FALSE(is_connected(corpus::discrete(3)));
    CHECK(is_connected(corpus::discrete(1)));
    CHECK(max_degree(corpus::cycle(4)) == 2);
    CHECK(max_degree(corpus::star(4)) == 4);
    CHECK(max_degree(corpus::discrete(1)) == 0);
    CHECK_THROWS_AS(require_connected(corpus::discrete(2)), PreconditionError);
}

TEST_CASE("corpus shapes") {
    CHECK(corpus::cube3().edges().size() == 12);
    CHECK(corpus::petersen().edges().size() == 15);
    for (Vertex v = 1; v <= 10; ++v) CHECK(corpus::petersen().degree(v) == 3);
    CHECK(corpus::star(4).degree(5) == 4);
}
