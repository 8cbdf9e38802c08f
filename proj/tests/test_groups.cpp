#include <doctest.h>

#include <map>
#include <random>
#include <set>

#include "fano95/groups.hpp"
#include "oracles.hpp"

using namespace fano95;

TEST_CASE("reduction to normal form") {
    CHECK(reduce(PresentationTag::F2, {1, 1}).is_identity());
    CHECK(reduce(PresentationTag::F5, {4, 5, 5, 4}).is_identity());
    CHECK(reduce(PresentationTag::F3, {1, 2, 2, 3}).reduced == Word{1, 3});

    CHECK(reduce(PresentationTag::F3Hat, {1, 2, 3, 1, 2, 3}).is_identity());
    auto g = reduce(PresentationTag::F3Hat, {1, 2, 3});
    CHECK(g.affine.sign == -1);
    CHECK(g.affine.shift == std::array<std::int64_t, 2>{-2, 2});
    CHECK(g == reduce(PresentationTag::F3Hat, {3, 2, 1}));

    CHECK_THROWS_AS(reduce(PresentationTag::F2, {1, 3}), std::out_of_range);
    CHECK_THROWS_AS(reduce(PresentationTag::F0, {1}), std::out_of_range);
}

TEST_CASE("word equality") {
    CHECK(equal(PresentationTag::F3Hat, {1, 3, 2}, {2, 3, 1}));
    CHECK_FALSE(equal(PresentationTag::F2, {1, 2}, {2, 1}));
    CHECK_FALSE(equal(PresentationTag::F3, {1, 2, 3}, {3, 2, 1}));
    for (const Word& w : {Word{}, Word{1}, Word{1, 2, 1}, Word{2, 1, 2, 1}})
        CHECK(equal(PresentationTag::F2, w, w));
}

TEST_CASE("orders") {
    CHECK(order(PresentationTag::F2, {1, 2}) == ElementOrder::infinite());
    CHECK(order(PresentationTag::F3Hat, {1, 2, 3}) == ElementOrder{true, 2});
    CHECK(order(PresentationTag::F5, {4}) == ElementOrder{true, 2});
    CHECK(order(PresentationTag::F1, {}) == ElementOrder{true, 1});
    CHECK(order(PresentationTag::F3Hat, {1, 2, 1, 2}) == ElementOrder::infinite());
    // conjugate of a generator: cyclic reduction finds order 2
    CHECK(order(PresentationTag::F3, {1, 2, 3, 2, 1}) == ElementOrder{true, 2});

    for (auto tag : {PresentationTag::F1, PresentationTag::F2, PresentationTag::F3,
                     PresentationTag::F3Hat, PresentationTag::F5})
        for (int g = 1; g <= generator_count(tag); ++g)
            CHECK(order(tag, {g}) == ElementOrder{true, 2});
}

TEST_CASE("reduction respects concatenation in the affine model") {
    std::mt19937 rng(42);
    std::uniform_int_distribution<int> letter(1, 3), length(0, 12);
    for (int trial = 0; trial < 300; ++trial) {
        Word w1, w2;
        for (int i = length(rng); i > 0; --i) w1.push_back(letter(rng));
        for (int i = length(rng); i > 0; --i) w2.push_back(letter(rng));
        Word joined = w1;
        joined.insert(joined.end(), w2.begin(), w2.end());
        auto combined = reduce(PresentationTag::F3Hat, joined);
        auto composed = reduce(PresentationTag::F3Hat, w1).affine *
                        reduce(PresentationTag::F3Hat, w2).affine;
        CHECK(combined.affine == composed);
    }
}

TEST_CASE("ball sizes") {
    CHECK(ball_size(PresentationTag::F2, 3) == 7);
    CHECK(ball_size(PresentationTag::F3, 2) == 10);
    CHECK(ball_size(PresentationTag::F0, 5) == 1);
    CHECK(ball_size(PresentationTag::F1, 4) == 2);

    // free products against the closed form, radius <= 10
    for (auto tag : {PresentationTag::F1, PresentationTag::F2, PresentationTag::F3,
                     PresentationTag::F5})
        for (int r = 0; r <= 10; ++r)
            CHECK(ball_size(tag, r) == oracles::free_product_ball(generator_count(tag), r));

    // and against exhaustive reduction of every word; matching counts mean no
    // word dies except through t_i t_i cancellation
    CHECK(ball_size(PresentationTag::F2, 10) == oracles::exhaustive_free_ball(2, 10));
    CHECK(ball_size(PresentationTag::F3, 10) == oracles::exhaustive_free_ball(3, 10));
    CHECK(ball_size(PresentationTag::F5, 6) == oracles::exhaustive_free_ball(5, 6));
}

TEST_CASE("F3HAT ball sizes: frozen values and exhaustive folding") {
    const std::array<std::uint64_t, 9> expected{1, 4, 10, 19, 31, 46, 64, 85, 109};
    for (int r = 0; r <= 8; ++r) CHECK(ball_size(PresentationTag::F3Hat, r) == expected[r]);
    // the relation identifies words: strictly below the free-product count
    CHECK(ball_size(PresentationTag::F3Hat, 6) == 64);
    CHECK(64 < 94);

    // fold every word of length <= 6 through the normal form
    std::set<std::pair<int, std::array<std::int64_t, 2>>> folded;
    for (int k = 0; k <= 6; ++k) {
        Word digits(k, 1);
        while (true) {
            auto g = reduce(PresentationTag::F3Hat, digits);
            folded.insert({g.affine.sign, g.affine.shift});
            int pos = k - 1;
            while (pos >= 0 && digits[pos] == 3) digits[pos--] = 1;
            if (pos < 0) break;
            ++digits[pos];
        }
    }
    CHECK(folded.size() == 64);
}

TEST_CASE("relation words and their variants reduce to the identity") {
    const Word base{1, 2, 3, 1, 2, 3};
    for (int rot = 0; rot < 6; ++rot) {
        Word variant;
        for (int i = 0; i < 6; ++i) variant.push_back(base[(rot + i) % 6]);
        CHECK(reduce(PresentationTag::F3Hat, variant).is_identity());
        Word reversed(variant.rbegin(), variant.rend());
        CHECK(reduce(PresentationTag::F3Hat, reversed).is_identity());
        // the same words are nontrivial in the free product F3
        CHECK_FALSE(reduce(PresentationTag::F3, variant).is_identity());
    }
}

TEST_CASE("rewriting-system oracle agrees with the affine normal form") {
    // Connectivity under {t_i t_i -> e, relator variants -> e} over words of
    // length <= 8, allowing intermediates up to the oracle's cap, matches
    // equality of affine normal forms exactly: same class <=> same fold.
    oracles::RewriteOracle oracle;
    std::map<int, GroupElement> root_to_element;
    std::map<std::pair<int, std::array<std::int64_t, 2>>, int> element_to_root;
    int checked = 0;
    for (int k = 0; k <= 8; ++k) {
        Word digits(k, 1);
        while (true) {
            ++checked;
            int root = oracle.representative(digits);
            auto element = reduce(PresentationTag::F3Hat, digits);
            auto key = std::make_pair(element.affine.sign, element.affine.shift);
            auto [it, inserted] = element_to_root.emplace(key, root);
            if (!inserted) CHECK(it->second == root);  // completeness
            auto [jt, fresh] = root_to_element.emplace(root, element);
            if (!fresh) CHECK(jt->second == element);  // soundness
            int pos = k - 1;
            while (pos >= 0 && digits[pos] == 3) digits[pos--] = 1;
            if (pos < 0) break;
            ++digits[pos];
        }
    }
    CHECK(checked == 9841);  // (3^9 - 1) / 2 words of length <= 8
    CHECK(element_to_root.size() == 109);
    CHECK(root_to_element.size() == 109);
}

TEST_CASE("presentations per family") {
    CHECK(presentation_of(7) == PresentationTag::F5);
    CHECK(presentation_of(20) == PresentationTag::F3);
    CHECK(presentation_of(95) == PresentationTag::F0);
    CHECK(presentation_of(5) == PresentationTag::F2);
    CHECK(presentation_of(2) == PresentationTag::F1);
    for (int n : {4, 9, 17, 27}) CHECK(presentation_of(n) == PresentationTag::F3Hat);
    CHECK_THROWS_AS(presentation_of(0), std::out_of_range);
    CHECK_THROWS_AS(presentation_of(96), std::out_of_range);

    std::map<PresentationTag, int> counts;
    for (int n = 1; n <= 95; ++n) ++counts[presentation_of(n)];
    CHECK(counts[PresentationTag::F5] == 1);
    CHECK(counts[PresentationTag::F3Hat] == 4);
    CHECK(counts[PresentationTag::F3] == 1);
    CHECK(counts[PresentationTag::F2] == 20);
    CHECK(counts[PresentationTag::F1] == 19);
    CHECK(counts[PresentationTag::F0] == 50);
}
