#include "fano95/fibrations.hpp"

#include <stdexcept>

#include "fano95/family_lists.hpp"

namespace fano95 {

std::string to_string(EllipticKind kind) {
    switch (kind) {
        case EllipticKind::NaturalProjection: return "natural_projection";
        case EllipticKind::SpecialConstruction: return "special_construction";
        case EllipticKind::None: return "none";
    }
    throw std::logic_error("unknown EllipticKind");
}

std::string to_string(K3Route route) {
    switch (route) {
        case K3Route::IndexA3Pencil: return "index_a3_pencil";
        case K3Route::Quartic: return "quartic";
        case K3Route::DoubleSextic: return "double_sextic";
        case K3Route::DoubleQuintic: return "double_quintic";
        case K3Route::SpecialCase: return "special_case";
        case K3Route::FlipConstruction: return "flip_construction";
        case K3Route::AnticanonicalPencil: return "anticanonical_pencil";
    }
    throw std::logic_error("unknown K3Route");
}

EllipticKind elliptic_kind_from_string(const std::string& text) {
    if (text == "natural_projection") return EllipticKind::NaturalProjection;
    if (text == "special_construction") return EllipticKind::SpecialConstruction;
    if (text == "none") return EllipticKind::None;
    throw std::invalid_argument("unknown elliptic kind '" + text + "'");
}

K3Route k3_route_from_string(const std::string& text) {
    if (text == "index_a3_pencil") return K3Route::IndexA3Pencil;
    if (text == "quartic") return K3Route::Quartic;
    if (text == "double_sextic") return K3Route::DoubleSextic;
    if (text == "double_quintic") return K3Route::DoubleQuintic;
    if (text == "special_case") return K3Route::SpecialCase;
    if (text == "flip_construction") return K3Route::FlipConstruction;
    if (text == "anticanonical_pencil") return K3Route::AnticanonicalPencil;
    throw std::invalid_argument("unknown K3 route '" + text + "'");
}

bool elliptic_fiber_criterion(const WeightSystem& ws) {
    int d = ws.degree(), a4 = ws.weight(4), a5 = ws.weight(5);
    if (d / a4 <= 3) return true;
    return d / a4 <= 4 && 2 * a5 <= d && d < 2 * a5 + a4;
}

EllipticStatus elliptic_status(int family) {
    if (family < 1 || family > 95)
        throw std::out_of_range("elliptic_status: family number must be 1..95");
    EllipticStatus status;
    if (lists::contains(lists::kNoEllipticFibration, family)) {
        status.kind = EllipticKind::None;
        return status;
    }
    status.kind = lists::contains(lists::kSpecialEllipticConstruction, family)
                      ? EllipticKind::SpecialConstruction
                      : EllipticKind::NaturalProjection;
    status.multiple_structures = lists::contains(lists::kMultipleEllipticStructures, family);
    status.unique_structure = lists::contains(lists::kUniqueEllipticFibration, family) ||
                              lists::contains(lists::kUniqueEllipticVerified, family);
    return status;
}

K3Route k3_route(const WeightSystem& ws, int family) {
    if (family < 1 || family > 95)
        throw std::out_of_range("k3_route: family number must be 1..95");
    int d = ws.degree(), a2 = ws.weight(2), a3 = ws.weight(3), a5 = ws.weight(5);
    if (lists::contains(lists::kK3IndexPencil, family)) return K3Route::IndexA3Pencil;
    if (d / a3 <= 4) return K3Route::Quartic;
    if (2 * a5 + a3 > d && d / a3 <= 6) return K3Route::DoubleSextic;
    if (2 * a5 + 2 * a3 > d && 3 * a5 > d && d <= 5 * a3) return K3Route::DoubleQuintic;
    if (lists::contains(lists::kK3SpecialCases, family)) return K3Route::SpecialCase;
    if (lists::contains(lists::kK3Residual, family)) return K3Route::FlipConstruction;
    if (a2 == 1) return K3Route::AnticanonicalPencil;
    throw std::logic_error("k3_route: no rule matches family " + std::to_string(family) +
                           " with weights " + ws.str());
}

DensityWitness density_witness_n19(const WitnessCoefficients& c) {
    if (c.a01021.is_zero())
        throw std::invalid_argument("density_witness_n19: coefficient a01021 must be nonzero");
    if (c.a00130.is_zero())
        throw std::invalid_argument("density_witness_n19: coefficient a00130 must be nonzero");
    if (c.a10012.is_zero())
        throw std::invalid_argument(
            "density_witness_n19: coefficient a10012 must be nonzero "
            "(a zero value degenerates the double root into a triple root)");

    DensityWitness w;
    w.lambda = (c.a10012 * c.a10012 - Rational(4) * c.a20021) / (Rational(4) * c.a01021);
    w.mu = -(w.lambda * c.a10030 + c.a30030) / c.a00130;
    w.c2 = c.a10012;
    w.c1 = c.a20021 + w.lambda * c.a01021;
    w.c0 = w.mu * c.a00130 + w.lambda * c.a10030 + c.a30030;

    // certify the factorization x5 (x5 + a10012/2)^2: the linear coefficient
    // must equal a10012^2/4 and the constant term must vanish
    Rational half = c.a10012 / Rational(2);
    if (w.c1 != half * half || !w.c0.is_zero())
        throw std::logic_error("density_witness_n19: certification failed");
    return w;
}

}  // namespace fano95
