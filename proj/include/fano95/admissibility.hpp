#pragma once
// Combinatorial quasismoothness / well-formedness / terminality checks for a
// general anticanonical hypersurface, and enumeration of all admissible
// weight systems.

#include <string>
#include <vector>

#include "fano95/singularities.hpp"
#include "fano95/weights.hpp"

namespace fano95 {

enum class FailureKind {
    NotAnticanonical,
    NotWellFormed,
    VertexNotQuasismooth,  // indices: {i}
    EdgeContained,         // indices: {i, j}
    FaceSingular,          // indices: {i, j, k}
    NonTerminal,           // detail describes the offending stratum
};

struct AdmissibilityFailure {
    FailureKind kind;
    std::vector<int> indices;  // 1-based coordinate indices, where applicable
    std::string detail;

    std::string str() const;
};

struct AdmissibilityVerdict {
    bool admissible = true;
    std::vector<AdmissibilityFailure> failures;

    std::string str() const;
};

// Verdict for a GENERAL hypersurface of the given degree:
//  (a) every vertex carries a monomial x_i^m or x_i^m x_j of degree d;
//  (b) every pair (i,j) with gcd(a_i,a_j) > 1 carries a degree-d monomial
//      supported on {i,j};
//  (c) gcd(a_i,a_j,a_k) = 1 for all triples;
//  (d) gcd of every four of the five weights is 1 (well-formedness);
//  (e) d = a1+...+a5 - 1;
//  (f) every basket stratum normalizes to a terminal type 1/r(1,a,r-a).
// Failures are data, never exceptions.
AdmissibilityVerdict check_quasismooth(const WeightSystem& ws);

// All admissible anticanonical weight systems with weights <= max_weight and
// degree <= max_degree, duplicate-free, sorted lexicographically in
// (d, a2, a3, a4, a5). Bounds must be at least (33, 66); the classification's
// largest family has degree 66 and top weight 33.
std::vector<WeightSystem> enumerate_families(int max_weight = 40, int max_degree = 100);

inline constexpr int kMinEnumerationWeight = 33;
inline constexpr int kMinEnumerationDegree = 66;

}  // namespace fano95
