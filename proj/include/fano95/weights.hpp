#pragma once
// Weight systems of weighted projective 4-space, graded monomials, and the
// anticanonical intersection number -K^3 = d / (a1*a2*a3*a4*a5).

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "fano95/rational.hpp"

namespace fano95 {

// Subset of the five homogeneous coordinates, 1-based indices.
class VarSet {
public:
    constexpr VarSet() = default;
    static constexpr VarSet all() { return VarSet(0b11111); }
    static VarSet of(std::initializer_list<int> indices) {
        VarSet s;
        for (int i : indices) s.add(i);
        return s;
    }
    void add(int index) { mask_ |= bit(index); }
    bool contains(int index) const { return mask_ & bit(index); }
    unsigned mask() const { return mask_; }

private:
    explicit constexpr VarSet(unsigned mask) : mask_(mask) {}
    static unsigned bit(int index) {
        if (index < 1 || index > 5) throw std::out_of_range("VarSet: index must be 1..5");
        return 1u << (index - 1);
    }
    unsigned mask_ = 0;
};

// Ascending weights (a1,...,a5) with a1 = 1, plus a hypersurface degree d.
// The degree is stored as given; is_anticanonical() tells whether it equals
// a1+...+a5-1. Immutable value type.
class WeightSystem {
public:
    WeightSystem(std::array<int, 5> weights, int degree);

    const std::array<int, 5>& weights() const { return weights_; }
    int weight(int index) const { return weights_.at(index - 1); }  // 1-based
    int degree() const { return degree_; }

    std::int64_t weight_product() const;
    std::string str() const;  // "(1,4,5,6,9; 24)"

    bool operator==(const WeightSystem& o) const {
        return weights_ == o.weights_ && degree_ == o.degree_;
    }
    bool operator!=(const WeightSystem& o) const { return !(*this == o); }
    // lexicographic in (d, a2, a3, a4, a5)
    bool operator<(const WeightSystem& o) const {
        if (degree_ != o.degree_) return degree_ < o.degree_;
        return weights_ < o.weights_;
    }

private:
    std::array<int, 5> weights_;
    int degree_;
};

// Exponent vector of a monomial x1^e1 ... x5^e5.
struct Monomial {
    std::array<int, 5> exponents{0, 0, 0, 0, 0};

    int weighted_degree(const WeightSystem& ws) const;
    bool operator==(const Monomial& o) const { return exponents == o.exponents; }
    bool operator<(const Monomial& o) const { return exponents < o.exponents; }
    std::string str() const;  // "x3^2*x5"
};

// d = a1+...+a5 - 1, the degree of an anticanonically embedded hypersurface.
int anticanonical_degree(const WeightSystem& ws);

bool is_anticanonical(const WeightSystem& ws);

// -K_X^3 = d / (a1 a2 a3 a4 a5), exact.
Rational minus_k_cubed(const WeightSystem& ws);

// All monomials of the given weighted degree whose support lies in `support`,
// in lexicographic order of the exponent vectors.
std::vector<Monomial> monomials_of_degree(const WeightSystem& ws, int degree,
                                          VarSet support = VarSet::all());

// Number of degree-`degree` monomials supported on coordinates {i, j}
// (1-based). Counts pure powers of either variable.
int pair_monomial_count(const WeightSystem& ws, int i, int j, int degree);

}  // namespace fano95
