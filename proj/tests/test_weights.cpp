#include <doctest.h>

#include <random>

#include "fano95/weights.hpp"
#include "oracles.hpp"

using namespace fano95;

TEST_CASE("rational arithmetic is exact and normalized") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(-3, -6) == Rational(1, 2));
    CHECK(Rational(3, -6) == Rational(-1, 2));
    CHECK(Rational(0, 7) == Rational(0));
    CHECK((Rational(1, 45) - Rational(1, 180)) == Rational(1, 60));
    CHECK((Rational(1, 60) - Rational(1, 20)) == Rational(-1, 30));
    CHECK((Rational(1, 3) * Rational(3, 5)) == Rational(1, 5));
    CHECK((Rational(1, 3) / Rational(1, 6)) == Rational(2));
    CHECK(Rational(1, 30) < Rational(1, 21));
    CHECK(Rational(-1, 30).sign() == -1);
    CHECK(Rational(7, 6).str() == "7/6");
    CHECK(Rational(4).str() == "4");
    CHECK(Rational::parse("-1/30") == Rational(-1, 30));
    CHECK(Rational::parse("12") == Rational(12));
    CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
    CHECK_THROWS_AS(Rational(1, 3) / Rational(0), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("x"), std::invalid_argument);
}

TEST_CASE("rational arithmetic refuses to wrap around") {
    Rational big(INT64_MAX / 2, 1);
    CHECK_THROWS_AS(big * big, std::overflow_error);
    CHECK_THROWS_AS(big + big + big, std::overflow_error);
}

TEST_CASE("weight system construction enforces shape") {
    CHECK_NOTHROW(WeightSystem({1, 4, 5, 6, 9}, 24));
    CHECK_THROWS_AS(WeightSystem({2, 4, 5, 6, 9}, 24), std::invalid_argument);
    CHECK_THROWS_AS(WeightSystem({1, 5, 4, 6, 9}, 24), std::invalid_argument);
    CHECK_THROWS_AS(WeightSystem({1, 4, 5, 6, 9}, 0), std::invalid_argument);
}

TEST_CASE("anticanonical degree") {
    CHECK(anticanonical_degree(WeightSystem({1, 1, 1, 1, 1}, 4)) == 4);
    CHECK(anticanonical_degree(WeightSystem({1, 4, 5, 6, 9}, 24)) == 24);
    CHECK(anticanonical_degree(WeightSystem({1, 2, 3, 10, 15}, 30)) == 30);
    CHECK(is_anticanonical(WeightSystem({1, 1, 4, 6, 7}, 18)));
    CHECK_FALSE(is_anticanonical(WeightSystem({1, 1, 4, 6, 7}, 17)));
}

TEST_CASE("minus K cubed spot values") {
    CHECK(minus_k_cubed(WeightSystem({1, 1, 4, 6, 7}, 18)) == Rational(3, 28));
    CHECK(minus_k_cubed(WeightSystem({1, 2, 5, 6, 7}, 20)) == Rational(1, 21));
    CHECK(minus_k_cubed(WeightSystem({1, 1, 1, 1, 1}, 4)) == Rational(4));
}

TEST_CASE("monomials of a given degree") {
    WeightSystem n19({1, 2, 3, 3, 4}, 12);
    auto only_x5 = monomials_of_degree(n19, 12, VarSet::of({5}));
    REQUIRE(only_x5.size() == 1);
    CHECK(only_x5[0] == Monomial{{0, 0, 0, 0, 3}});
    CHECK(only_x5[0].str() == "x5^3");

    WeightSystem n7({1, 1, 2, 2, 3}, 8);
    auto pair = monomials_of_degree(n7, 8, VarSet::of({3, 4}));
    REQUIRE(pair.size() == 5);
    for (const auto& m : pair) {
        CHECK(m.exponents[0] == 0);
        CHECK(m.exponents[1] == 0);
        CHECK(m.exponents[4] == 0);
        CHECK(m.exponents[2] + m.exponents[3] == 4);
    }

    auto constant = monomials_of_degree(n7, 0, VarSet::of({2, 5}));
    REQUIRE(constant.size() == 1);
    CHECK(constant[0] == Monomial{});
    CHECK(constant[0].str() == "1");
}

TEST_CASE("monomial enumeration matches brute force") {
    std::mt19937 rng(20240811);
    std::uniform_int_distribution<int> weight_dist(1, 9), degree_dist(0, 30),
        mask_dist(0, 31);
    for (int trial = 0; trial < 200; ++trial) {
        std::array<int, 5> w{1, 0, 0, 0, 0};
        for (int i = 1; i < 5; ++i) w[i] = weight_dist(rng);
        std::sort(w.begin() + 1, w.end());
        WeightSystem ws(w, 1 + degree_dist(rng));
        int deg = degree_dist(rng);
        VarSet support;
        int mask = mask_dist(rng);
        for (int i = 1; i <= 5; ++i)
            if (mask & (1 << (i - 1))) support.add(i);
        auto got = monomials_of_degree(ws, deg, support);
        auto expected = oracles::brute_force_monomials(ws, deg, support);
        REQUIRE(got.size() == expected.size());
        CHECK(got == expected);
        CHECK(std::is_sorted(got.begin(), got.end()));
        for (const auto& m : got) CHECK(m.weighted_degree(ws) == deg);
    }
}

TEST_CASE("edges with gcd h not dividing d carry no monomials") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> weight_dist(2, 12), degree_dist(1, 80);
    for (int trial = 0; trial < 500; ++trial) {
        std::array<int, 5> w{1, weight_dist(rng), weight_dist(rng), weight_dist(rng),
                             weight_dist(rng)};
        std::sort(w.begin() + 1, w.end());
        WeightSystem ws(w, degree_dist(rng));
        for (int i = 1; i <= 5; ++i)
            for (int j = i + 1; j <= 5; ++j) {
                int h = std::gcd(ws.weight(i), ws.weight(j));
                if (h > 1 && ws.degree() % h != 0) {
                    CHECK(monomials_of_degree(ws, ws.degree(), VarSet::of({i, j})).empty());
                    CHECK(pair_monomial_count(ws, i, j, ws.degree()) == 0);
                }
            }
    }
}
