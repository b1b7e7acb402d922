#include <doctest.h>

#include <random>
#include <set>

#include "autgram/error.hpp"
#include "autgram/perm.hpp"
#include "support.hpp"

using namespace autgram;
using ref::perm;
using ref::word;

namespace {

Permutation random_perm(std::mt19937& rng, int n) {
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 1);
    std::shuffle(img.begin(), img.end(), rng);
    return Permutation(img);
}

}  // namespace

TEST_CASE("compose") {
    CHECK(compose(perm({2, 1, 3}), perm({1, 3, 2})) == perm({2, 3, 1}));
    CHECK(compose(Permutation::identity(3), perm({3, 1, 2})) == perm({3, 1, 2}));
    CHECK(compose(perm({2, 3, 1}), perm({3, 1, 2})).is_identity());
    CHECK_THROWS(compose(perm({1, 2}), perm({1, 2, 3})));
}

TEST_CASE("inverse") {
    CHECK(inverse(perm({2, 3, 1})) == perm({3, 1, 2}));
    CHECK(inverse(Permutation::identity(4)).is_identity());
    CHECK(inverse(perm({1, 4, 3, 2})) == perm({1, 4, 3, 2}));
}

TEST_CASE("string of a permutation") {
    CHECK(to_string_word(Permutation::identity(4)) == word({1, 2, 3, 4}));
    CHECK(to_string_word(perm({2, 1, 4, 3})) == word({2, 1, 4, 3}));
    CHECK(to_string_word(Permutation::identity(1)) == word({1}));
}

TEST_CASE("permute word") {
    CHECK(permute_word(word({5, 6, 7, 8}), perm({2, 1, 4, 3})) == word({6, 5, 8, 7}));
    CHECK(permute_word(word({4, 9, 2}), Permutation::identity(3)) == word({4, 9, 2}));
    CHECK(permute_word(word({1, 2, 3}), perm({3, 1, 2})) == word({3, 1, 2}));
    CHECK_THROWS(permute_word(word({1, 2}), perm({1, 2, 3})));
}

TEST_CASE("algebraic properties on random samples") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 1 + trial % 7;
        auto a = random_perm(rng, n), b = random_perm(rng, n), c = random_perm(rng, n);
        CHECK(compose(a, compose(b, c)) == compose(compose(a, b), c));
        CHECK(compose(a, inverse(a)).is_identity());
        Word w;
        for (int i = 0; i < n; ++i) w.symbols.push_back(static_cast<int>(rng() % 10));
        CHECK(permute_word(w, compose(a, b)) == permute_word(permute_word(w, a), b));
    }
}

TEST_CASE("string encoding is injective") {
    std::set<Word> seen;
    std::vector<int> img{1, 2, 3, 4};
    do seen.insert(to_string_word(Permutation(img)));
    while (std::next_permutation(img.begin(), img.end()));
    CHECK(seen.size() == 24);
}

TEST_CASE("validation and text formats") {
    CHECK_THROWS(Permutation({1, 1, 2}));
    CHECK_THROWS(Permutation({0, 1}));
    CHECK(parse_permutation("2 1 4 3") == perm({2, 1, 4, 3}));
    CHECK(format(perm({2, 1, 4, 3})) == "2 1 4 3");
    CHECK(parse_word("3,1,2") == word({3, 1, 2}));
    CHECK(parse_word("") == Word{});
    CHECK_THROWS_AS(parse_word("1 a"), ParseError);
    CHECK_THROWS(parse_permutation("1 3"));
    CHECK(word_to_permutation(word({2, 3, 1})) == perm({2, 3, 1}));
    CHECK_THROWS(word_to_permutation(word({2, 2})));
}
