#include <doctest.h>

#include <random>

#include "autgram/corpus.hpp"
#include "autgram/decomp.hpp"
#include "autgram/error.hpp"
#include "support.hpp"

using namespace autgram;
using ref::perm;

namespace {

TreeDecomposition chain(std::vector<VertexSet> bags) {
    TreeDecomposition t;
    t.bags.push_back(bags[0]);
    for (std::size_t i = 1; i < bags.size(); ++i) {
        t.shape.add_child(static_cast<int>(i) - 1);
        t.bags.push_back(bags[i]);
    }
    return t;
}

// Connected random graph: a random spanning tree plus extra edges.
Graph random_connected(std::mt19937& rng, int m, double density) {
    std::vector<Edge> edges;
    std::vector<std::vector<char>> has(m + 1, std::vector<char>(m + 1, 0));
    auto add = [&](int u, int v) {
        if (u > v) std::swap(u, v);
        if (u == v || has[u][v]) return;
        has[u][v] = 1;
        edges.emplace_back(u, v);
    };
    for (int v = 2; v <= m; ++v) add(v, 1 + static_cast<int>(rng() % (v - 1)));
    std::bernoulli_distribution coin(density);
    for (int u = 1; u <= m; ++u)
        for (int v = u + 1; v <= m; ++v)
            if (coin(rng)) add(u, v);
    return Graph(m, edges);
}

bool has_axiom(const ValidationReport& r, Axiom a, const std::string& needle) {
    for (const auto& v : r.violations)
        if (v.axiom == a && v.message.find(needle) != std::string::npos) return true;
    return false;
}

}  // namespace

TEST_CASE("positions") {
    CHECK(format_position({}) == "");
    CHECK(format_position({1, 2, 1}) == "1.2.1");
    CHECK(is_tree_like({{}, {1}, {2}, {1, 1}}));
    CHECK_FALSE(is_tree_like({{}, {2}}));
    CHECK_FALSE(is_tree_like({{}, {1, 1}}));
    auto t = PositionTree::from_positions({{1, 1}, {}, {2}, {1}});
    CHECK(t.size() == 4);
    CHECK(t.position(t.leaves().front()) == Position{1, 1});
    CHECK_THROWS(PositionTree::from_positions({{1}}));
}

TEST_CASE("validation reports axioms") {
    Graph p3 = corpus::path(3);
    auto ok = validate_tree_decomposition(p3, chain({{1, 2}, {2, 3}}));
    CHECK(ok.ok());
    CHECK(ok.width == 1);

    auto t1 = validate_tree_decomposition(p3, chain({{1, 2}, {2}}));
    CHECK(has_axiom(t1, Axiom::T1, "vertex 3"));

    Graph c4 = corpus::cycle(4);
    auto t2 = validate_tree_decomposition(c4, chain({{1, 2}, {3, 4}}));
    CHECK(has_axiom(t2, Axiom::T2, "{2,3}"));

    auto t3 = validate_tree_decomposition(p3, chain({{1, 2}, {3}, {2, 3}}));
    CHECK(has_axiom(t3, Axiom::T3, "vertex 2"));

    auto range = validate_tree_decomposition(p3, chain({{1, 2, 3, 9}}));
    CHECK(has_axiom(range, Axiom::Range, "9"));
}

TEST_CASE("heuristic decompositions are valid with expected widths") {
    CHECK(compute_tree_decomposition(corpus::path(6)).width() == 1);
    CHECK(compute_tree_decomposition(corpus::cycle(5)).width() == 2);
    CHECK(compute_tree_decomposition(corpus::complete(4)).width() == 3);
    for (const auto& e : corpus::standard()) {
        auto t = compute_tree_decomposition(e.graph);
        CHECK_MESSAGE(validate_tree_decomposition(e.graph, t).ok(), e.name);
    }
    CHECK_THROWS_AS(compute_tree_decomposition(corpus::discrete(3)), PreconditionError);
    CHECK_THROWS_AS(compute_tree_decomposition(corpus::path(12), {DecompositionStrategy::ExactSmall, 10}),
                    PreconditionError);
}

TEST_CASE("exact width equals brute-force minimum") {
    for (const auto& e : corpus::standard()) {
        auto t = compute_tree_decomposition(e.graph, {DecompositionStrategy::ExactSmall});
        CHECK(validate_tree_decomposition(e.graph, t).ok());
        CHECK_MESSAGE(t.width() == ref::treewidth(e.graph), e.name);
    }
    std::mt19937 rng(11);
    for (int trial = 0; trial < 40; ++trial) {
        const int m = 3 + trial % 5;
        Graph g = random_connected(rng, m, 0.35);
        auto t = compute_tree_decomposition(g, {DecompositionStrategy::ExactSmall});
        CHECK(validate_tree_decomposition(g, t).ok());
        CHECK(t.width() == ref::treewidth(g));
        CHECK(elimination_width(g, exact_elimination_order(g)) == ref::treewidth(g));
        auto mf = min_fill_order(g);
        CHECK(elimination_width(g, mf) == ref::game_width(g, mf));
        CHECK(decomposition_from_elimination_order(g, mf).width() == ref::game_width(g, mf));
    }
}

TEST_CASE("permutation-yielding transform") {
    Graph p3 = corpus::path(3);
    auto y = make_permutation_yielding(p3, chain({{1, 2}, {2, 3}}));
    CHECK(validate_tree_decomposition(p3, y.decomposition).ok());
    CHECK(y.decomposition.width() == 1);
    CHECK(y.decomposition.shape.leaves().size() == 3);
    CHECK(is_permutation_yielding(p3, y.decomposition));

    Graph one = corpus::discrete(1);
    auto single = make_permutation_yielding(one, chain({{1}}));
    CHECK(single.decomposition.shape.size() == 1);
    CHECK(single.order.alpha.is_identity());

    // A yielding decomposition is a fixed point.
    auto again = make_permutation_yielding(p3, y.decomposition);
    CHECK(again.order.alpha == y.order.alpha);
    CHECK(again.decomposition.bags == y.decomposition.bags);

    CHECK_THROWS_AS(make_permutation_yielding(p3, chain({{1, 2}})), std::invalid_argument);

    for (const auto& e : corpus::standard()) {
        auto t = compute_tree_decomposition(e.graph);
        auto out = make_permutation_yielding(e.graph, t);
        CHECK(validate_tree_decomposition(e.graph, out.decomposition).ok());
        CHECK(out.decomposition.width() == t.width());
        std::vector<Vertex> seen;
        for (int leaf : out.decomposition.shape.leaves()) {
            REQUIRE(out.decomposition.bag(leaf).size() == 1);
            seen.push_back(out.decomposition.bag(leaf)[0]);
        }
        std::sort(seen.begin(), seen.end());
        CHECK(seen == Permutation::identity(e.graph.vertex_count()).image());
        CHECK(compose(out.order.alpha_t, out.order.alpha).is_identity());
    }
}

TEST_CASE("leaf order permutation") {
    Graph g = corpus::path(3);
    auto star_shape = [](std::vector<VertexSet> leaves) {
        TreeDecomposition t;
        t.bags.push_back({1, 2, 3});
        for (auto& b : leaves) {
            t.shape.add_child(0);
            t.bags.push_back(b);
        }
        return t;
    };
    CHECK(leaf_order_permutation(yield_order(g, star_shape({{1}, {2}, {3}}))).is_identity());
    CHECK(leaf_order_permutation(yield_order(g, star_shape({{2}, {1}, {3}}))) == perm({2, 1, 3}));
    auto y = yield_order(g, star_shape({{3}, {1}, {2}}));
    CHECK(y.alpha_t == perm({3, 1, 2}));
    CHECK(leaf_order_permutation(y) == perm({2, 3, 1}));
    CHECK_THROWS(yield_order(g, star_shape({{1}, {2}})));
}

TEST_CASE("path decompositions") {
    auto check_path = [](const Graph& g, int width) {
        auto pd = compute_path_decomposition(g);
        CHECK(validate_tree_decomposition(g, pd).ok());
        CHECK(pd.width() == width);
        for (int node = 0; node < pd.shape.size(); ++node) CHECK(pd.shape.children(node).size() <= 1);
        auto intro = path_introductions(pd);
        std::sort(intro.begin(), intro.end());
        CHECK(intro == Permutation::identity(g.vertex_count()).image());
    };
    check_path(corpus::path(4), 1);
    check_path(corpus::cycle(4), 2);
    check_path(corpus::complete(3), 2);
    check_path(corpus::cube3(), ref::pathwidth(corpus::cube3()));
    check_path(corpus::cycle(6), ref::pathwidth(corpus::cycle(6)));
    CHECK_THROWS_AS(compute_path_decomposition(corpus::discrete(2)), PreconditionError);
    CHECK_THROWS(path_introductions(compute_tree_decomposition(corpus::star(3))));
}

TEST_CASE("PACE td round trip") {
    Graph c4 = corpus::cycle(4);
    auto t = compute_tree_decomposition(c4);
    auto text = write_td(t, c4);
    CHECK(text.rfind("s td ", 0) == 0);
    auto back = parse_td(text, c4);
    CHECK(validate_tree_decomposition(c4, back).ok());
    CHECK(write_td(back, c4) == text);

    auto parsed = parse_td("s td 2 2 3\nb 1 1 2\nb 2 2 3\n1 2\n", corpus::path(3));
    CHECK(parsed.width() == 1);
    CHECK(parsed.bag(0) == VertexSet{1, 2});
    CHECK_THROWS(parse_td("s td 2 2 3\nb 1 1 2\n", corpus::path(3)));
    CHECK_THROWS(parse_td("s td 2 2 3\nb 1 1 2\nb 2 2 3\n", corpus::path(3)));
}
