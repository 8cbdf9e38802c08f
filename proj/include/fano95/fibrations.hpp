#pragma once
// Elliptic and K3 fibration structure per family, plus the explicit
// potential-density witness pair for family 19.

#include <array>
#include <string>

#include "fano95/rational.hpp"
#include "fano95/weights.hpp"

namespace fano95 {

enum class EllipticKind { NaturalProjection, SpecialConstruction, None };

struct EllipticStatus {
    EllipticKind kind = EllipticKind::None;
    bool multiple_structures = false;  // several distinct elliptic fibrations
    bool unique_structure = false;     // provably a single fibration structure

    bool operator==(const EllipticStatus& o) const {
        return kind == o.kind && multiple_structures == o.multiple_structures &&
               unique_structure == o.unique_structure;
    }
};

enum class K3Route {
    IndexA3Pencil,       // pencil through the index-a3 singular point
    Quartic,             // fiber compactifies a quartic in C^3
    DoubleSextic,        // double cover ramified along a sextic
    DoubleQuintic,       // double cover ramified along a quintic
    SpecialCase,         // case-by-case substitution or resolution
    FlipConstruction,    // log flip of the blown-up pencil
    AnticanonicalPencil, // a2 = 1: the fiber is an anticanonical surface with
                         // trivial canonical class, a K3 by adjunction
};

std::string to_string(EllipticKind kind);
std::string to_string(K3Route route);
EllipticKind elliptic_kind_from_string(const std::string& text);
K3Route k3_route_from_string(const std::string& text);

// Weight inequality deciding whether the general fiber of the natural
// projection X --> P(1,a2,a3) is elliptic:
//   floor(d/a4) <= 3, or floor(d/a4) <= 4 and 2*a5 <= d < 2*a5 + a4.
bool elliptic_fiber_criterion(const WeightSystem& ws);

// Authoritative per-family elliptic structure. Throws std::out_of_range for
// N outside 1..95.
EllipticStatus elliptic_status(int family);

// K3 fibration route, first matching rule wins:
//   index-a3 pencil list -> floor(d/a3) <= 4 -> (2a5+a3 > d and
//   floor(d/a3) <= 6) -> (2a5+2a3 > d, 3a5 > d, d <= 5a3) -> special-case
//   list -> residual flip list -> anticanonical pencil when a2 = 1.
// Every family receives exactly one route; anything else throws.
K3Route k3_route(const WeightSystem& ws, int family);

// Coefficients of the six relevant monomials of a general degree-12
// hypersurface in P(1,2,3,3,4), normalized so that the x4^3 coefficient is 0
// and the x5^3 coefficient is 1.
struct WitnessCoefficients {
    Rational a10012, a20021, a01021, a10030, a30030, a00130;
};

struct DensityWitness {
    Rational lambda, mu;
    // coefficients of the certified cubic x5^3 + c2 x5^2 + c1 x5 + c0
    Rational c2, c1, c0;
};

// Explicit (lambda, mu) such that the fiber curve acquires a double point:
// lambda = (a10012^2 - 4 a20021) / (4 a01021),
// mu = -(lambda a10030 + a30030) / a00130.
// Certifies that the cubic factors exactly as x5 (x5 + a10012/2)^2 with two
// distinct roots. Preconditions: a01021 != 0, a00130 != 0, a10012 != 0
// (a vanishing a10012 would collapse the two roots into a triple root).
DensityWitness density_witness_n19(const WitnessCoefficients& c);

}  // namespace fano95
