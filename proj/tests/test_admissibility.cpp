#include <doctest.h>

#include <algorithm>

#include "fano95/admissibility.hpp"

using namespace fano95;

namespace {

bool has_failure(const AdmissibilityVerdict& v, FailureKind kind) {
    return std::any_of(v.failures.begin(), v.failures.end(),
                       [&](const AdmissibilityFailure& f) { return f.kind == kind; });
}

}  // namespace

TEST_CASE("quasismooth verdicts on known families") {
    CHECK(check_quasismooth(WeightSystem({1, 1, 2, 2, 3}, 8)).admissible);
    CHECK(check_quasismooth(WeightSystem({1, 3, 4, 7, 10}, 24)).admissible);
    CHECK(check_quasismooth(WeightSystem({1, 4, 5, 6, 9}, 24)).admissible);
    CHECK(check_quasismooth(WeightSystem({1, 5, 6, 22, 33}, 66)).admissible);
}

TEST_CASE("failure tags identify the offending stratum") {
    auto face = check_quasismooth(WeightSystem({1, 2, 2, 2, 2}, 8));
    CHECK_FALSE(face.admissible);
    CHECK(has_failure(face, FailureKind::FaceSingular));

    auto degree = check_quasismooth(WeightSystem({1, 2, 3, 4, 5}, 10));
    CHECK_FALSE(degree.admissible);
    CHECK(has_failure(degree, FailureKind::NotAnticanonical));

    auto edge = check_quasismooth(WeightSystem({1, 1, 1, 5, 5}, 12));
    CHECK_FALSE(edge.admissible);
    CHECK(has_failure(edge, FailureKind::EdgeContained));

    auto vertex = check_quasismooth(WeightSystem({1, 1, 2, 2, 7}, 12));
    CHECK_FALSE(vertex.admissible);
    CHECK(has_failure(vertex, FailureKind::VertexNotQuasismooth));

    auto wellformed = check_quasismooth(WeightSystem({1, 2, 4, 6, 8}, 20));
    CHECK_FALSE(wellformed.admissible);
    CHECK(has_failure(wellformed, FailureKind::NotWellFormed));

    // passes every combinatorial test but has a 1/4(3,3,3) vertex
    auto terminal = check_quasismooth(WeightSystem({1, 3, 4, 7, 7}, 21));
    CHECK_FALSE(terminal.admissible);
    CHECK(has_failure(terminal, FailureKind::NonTerminal));
    REQUIRE(terminal.failures.size() == 1);
    CHECK(terminal.failures[0].detail.find("vertex 3") != std::string::npos);
}

TEST_CASE("enumeration reproduces the 95 families") {
    auto families = enumerate_families();
    CHECK(families.size() == 95);
    CHECK(std::is_sorted(families.begin(), families.end()));
    CHECK(std::adjacent_find(families.begin(), families.end()) == families.end());

    auto contains = [&](std::array<int, 5> w, int d) {
        return std::find(families.begin(), families.end(), WeightSystem(w, d)) !=
               families.end();
    };
    CHECK(contains({1, 4, 5, 6, 9}, 24));
    CHECK(contains({1, 2, 3, 3, 4}, 12));
    CHECK(contains({1, 1, 1, 1, 1}, 4));
    CHECK(contains({1, 5, 6, 22, 33}, 66));

    for (const auto& ws : families) {
        CHECK(is_anticanonical(ws));
        CHECK(minus_k_cubed(ws).sign() > 0);
    }
}

TEST_CASE("enumeration bounds") {
    CHECK_THROWS_WITH_AS(enumerate_families(32, 100),
                         doctest::Contains("max_weight"), std::invalid_argument);
    CHECK_THROWS_WITH_AS(enumerate_families(40, 65),
                         doctest::Contains("max_degree"), std::invalid_argument);

    // enlarging the bounds changes nothing: the classification is complete
    auto at_minimum = enumerate_families(33, 66);
    auto at_default = enumerate_families();
    auto enlarged = enumerate_families(44, 108);
    CHECK(at_minimum == at_default);
    CHECK(enlarged == at_default);
}
