#include "fano95/admissibility.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace fano95 {

std::string AdmissibilityFailure::str() const {
    std::ostringstream out;
    switch (kind) {
        case FailureKind::NotAnticanonical: out << "not-anticanonical"; break;
        case FailureKind::NotWellFormed: out << "not-well-formed"; break;
        case FailureKind::VertexNotQuasismooth: out << "vertex-not-quasismooth"; break;
        case FailureKind::EdgeContained: out << "edge-contained"; break;
        case FailureKind::FaceSingular: out << "face-singular"; break;
        case FailureKind::NonTerminal: out << "non-terminal"; break;
    }
    if (!indices.empty()) {
        out << "(";
        for (size_t t = 0; t < indices.size(); ++t) out << (t ? "," : "") << indices[t];
        out << ")";
    }
    if (!detail.empty()) out << ": " << detail;
    return out.str();
}

std::string AdmissibilityVerdict::str() const {
    if (admissible) return "admissible";
    std::ostringstream out;
    for (size_t t = 0; t < failures.size(); ++t) out << (t ? "; " : "") << failures[t].str();
    return out.str();
}

AdmissibilityVerdict check_quasismooth(const WeightSystem& ws) {
    AdmissibilityVerdict verdict;
    const auto& a = ws.weights();
    const int d = ws.degree();
    auto fail = [&](FailureKind kind, std::vector<int> indices, std::string detail = "") {
        verdict.failures.push_back({kind, std::move(indices), std::move(detail)});
    };

    if (!is_anticanonical(ws))
        fail(FailureKind::NotAnticanonical, {},
             "degree " + std::to_string(d) + " != " + std::to_string(anticanonical_degree(ws)));

    for (int skip = 0; skip < 5; ++skip) {
        int g = 0;
        for (int t = 0; t < 5; ++t)
            if (t != skip) g = std::gcd(g, a[t]);
        if (g != 1) {
            fail(FailureKind::NotWellFormed, {}, "gcd of four weights is " + std::to_string(g));
            break;
        }
    }

    // vertex condition: x_i^m or x_i^m x_j (j possibly = i) of degree d
    for (int i = 0; i < 5; ++i) {
        bool ok = (d % a[i] == 0);
        for (int j = 0; j < 5 && !ok; ++j)
            ok = (j != i && a[j] % a[i] == d % a[i] && d - a[j] >= a[i]);
        if (!ok) fail(FailureKind::VertexNotQuasismooth, {i + 1});
    }

    for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j)
            if (std::gcd(a[i], a[j]) > 1 && pair_monomial_count(ws, i + 1, j + 1, d) == 0)
                fail(FailureKind::EdgeContained, {i + 1, j + 1});

    for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j)
            for (int k = j + 1; k < 5; ++k) {
                int g = std::gcd(std::gcd(a[i], a[j]), a[k]);
                if (g != 1)
                    fail(FailureKind::FaceSingular, {i + 1, j + 1, k + 1},
                         "gcd " + std::to_string(g));
            }

    // terminality: every basket stratum must normalize to 1/r(1,a,r-a)
    if (verdict.failures.empty()) {
        try {
            compute_basket(ws);
        } catch (const SingularityError& e) {
            fail(FailureKind::NonTerminal, {}, e.what());
        }
    }

    verdict.admissible = verdict.failures.empty();
    return verdict;
}

std::vector<WeightSystem> enumerate_families(int max_weight, int max_degree) {
    if (max_weight < kMinEnumerationWeight)
        throw std::invalid_argument(
            "enumerate_families: max_weight " + std::to_string(max_weight) +
            " is below the required minimum " + std::to_string(kMinEnumerationWeight));
    if (max_degree < kMinEnumerationDegree)
        throw std::invalid_argument(
            "enumerate_families: max_degree " + std::to_string(max_degree) +
            " is below the required minimum " + std::to_string(kMinEnumerationDegree));

    std::vector<WeightSystem> out;
    for (int a2 = 1; a2 <= max_weight; ++a2)
        for (int a3 = a2; a3 <= max_weight; ++a3) {
            if (a2 + a3 + a3 + a3 > max_degree) break;
            for (int a4 = a3; a4 <= max_weight; ++a4) {
                if (a2 + a3 + a4 + a4 > max_degree) break;
                for (int a5 = a4; a5 <= max_weight; ++a5) {
                    int d = a2 + a3 + a4 + a5;  // 1 + a2+..+a5 - 1
                    if (d > max_degree) break;
                    WeightSystem ws({1, a2, a3, a4, a5}, d);
                    if (check_quasismooth(ws).admissible) out.push_back(ws);
                }
            }
        }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace fano95
