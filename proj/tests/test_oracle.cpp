#include <doctest.h>

#include <set>

#include "autgram/corpus.hpp"
#include "autgram/error.hpp"
#include "autgram/oracle.hpp"
#include "support.hpp"

using namespace autgram;
using ref::perm;

TEST_CASE("automorphism groups match exhaustive search") {
    for (const auto& e : corpus::standard()) {
        auto got = oracle::brute_force_automorphisms(e.graph);
        CHECK_MESSAGE(got == ref::automorphisms(e.graph), e.name);
        CHECK(oracle::is_group(got));
        for (const auto& s : got) CHECK(oracle::is_automorphism(e.graph, s));
    }
    CHECK(oracle::brute_force_automorphisms(corpus::cycle(4)).size() == 8);
    CHECK(oracle::brute_force_automorphisms(corpus::complete(5)).size() == 120);
    CHECK_THROWS_AS(oracle::brute_force_automorphisms(corpus::path(11)), PreconditionError);
}

TEST_CASE("Petersen automorphisms") {
    auto aut = oracle::brute_force_automorphisms(corpus::petersen());
    CHECK(aut.size() == ref::automorphisms(corpus::petersen()).size());
    CHECK(aut.size() == 120);
}

TEST_CASE("edges and non-edges are preserved") {
    Graph q3 = corpus::cube3();
    for (const auto& s : oracle::brute_force_automorphisms(q3))
        for (int u = 1; u <= 8; ++u)
            for (int v = u + 1; v <= 8; ++v) CHECK(q3.adjacent(u, v) == q3.adjacent(s(u), s(v)));
    CHECK_FALSE(oracle::is_automorphism(corpus::cycle(4), perm({2, 1, 3, 4})));
}

TEST_CASE("restricted action") {
    auto star = oracle::restricted_action(corpus::star(4), 4);
    CHECK(star.invariant());
    CHECK(star.group.size() == 24);

    auto p3 = oracle::restricted_action(corpus::path(3), 2);
    CHECK_FALSE(p3.invariant());
    CHECK(*p3.violation == perm({3, 2, 1}));

    auto full = oracle::restricted_action(corpus::cycle(5), 5);
    CHECK(full.group == oracle::brute_force_automorphisms(corpus::cycle(5)));
}

TEST_CASE("group recognition") {
    CHECK(oracle::is_group({Permutation::identity(3)}));
    CHECK(oracle::is_group({Permutation::identity(3), perm({2, 1, 3})}));
    CHECK_FALSE(oracle::is_group({Permutation::identity(3), perm({2, 3, 1})}));
    CHECK_FALSE(oracle::is_group({perm({2, 1, 3})}));
}

TEST_CASE("index and transversals") {
    auto s4 = oracle::symmetric_group(4);
    auto c4 = oracle::brute_force_automorphisms(corpus::cycle(4));
    CHECK(oracle::group_index(s4, c4) == 3);
    CHECK(oracle::group_index(c4, c4) == 1);
    auto s3 = oracle::symmetric_group(3);
    std::vector<Permutation> swap{Permutation::identity(3), perm({2, 1, 3})};
    CHECK(oracle::group_index(s3, swap) == 3);
    CHECK_THROWS(oracle::group_index(c4, s4));

    auto t = oracle::left_transversal(s4, c4);
    REQUIRE(t.size() == 3);
    CHECK(t.front().is_identity());
    std::set<Permutation> covered;
    std::size_t total = 0;
    for (const auto& beta : t)
        for (const auto& p : oracle::left_coset(beta, c4)) {
            covered.insert(p);
            ++total;
        }
    CHECK(total == 24);
    CHECK(covered == std::set<Permutation>(s4.begin(), s4.end()));

    CHECK(oracle::left_transversal(c4, c4) == std::vector<Permutation>{Permutation::identity(4)});
    CHECK(oracle::left_transversal(s3, {Permutation::identity(3)}).size() == 6);
}
