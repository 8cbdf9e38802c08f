#include "fano95/weights.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace fano95 {

WeightSystem::WeightSystem(std::array<int, 5> weights, int degree)
    : weights_(weights), degree_(degree) {
    if (weights_[0] != 1)
        throw std::invalid_argument("WeightSystem: a1 must be 1");
    for (int i = 0; i < 5; ++i) {
        if (weights_[i] <= 0)
            throw std::invalid_argument("WeightSystem: weights must be positive");
        if (i > 0 && weights_[i - 1] > weights_[i])
            throw std::invalid_argument("WeightSystem: weights must be ascending");
    }
    if (degree_ <= 0)
        throw std::invalid_argument("WeightSystem: degree must be positive");
}

std::int64_t WeightSystem::weight_product() const {
    std::int64_t p = 1;
    for (int a : weights_) p = Rational::checked_mul(p, a);
    return p;
}

std::string WeightSystem::str() const {
    std::ostringstream out;
    out << "(";
    for (int i = 0; i < 5; ++i) out << (i ? "," : "") << weights_[i];
    out << "; " << degree_ << ")";
    return out.str();
}

int Monomial::weighted_degree(const WeightSystem& ws) const {
    int d = 0;
    for (int i = 0; i < 5; ++i) d += exponents[i] * ws.weights()[i];
    return d;
}

std::string Monomial::str() const {
    std::ostringstream out;
    bool first = true;
    for (int i = 0; i < 5; ++i) {
        if (exponents[i] == 0) continue;
        if (!first) out << "*";
        out << "x" << (i + 1);
        if (exponents[i] > 1) out << "^" << exponents[i];
        first = false;
    }
    if (first) out << "1";
    return out.str();
}

int anticanonical_degree(const WeightSystem& ws) {
    int s = 0;
    for (int a : ws.weights()) s += a;
    return s - 1;
}

bool is_anticanonical(const WeightSystem& ws) {
    return ws.degree() == anticanonical_degree(ws);
}

Rational minus_k_cubed(const WeightSystem& ws) {
    return Rational(ws.degree(), ws.weight_product());
}

namespace {

void collect(const WeightSystem& ws, VarSet support, int index, int remaining,
             Monomial& current, std::vector<Monomial>& out) {
    if (index == 5) {
        if (remaining == 0) out.push_back(current);
        return;
    }
    int a = ws.weights()[index];
    int max_e = support.contains(index + 1) ? remaining / a : 0;
    for (int e = 0; e <= max_e; ++e) {
        current.exponents[index] = e;
        collect(ws, support, index + 1, remaining - e * a, current, out);
    }
    current.exponents[index] = 0;
}

}  // namespace

std::vector<Monomial> monomials_of_degree(const WeightSystem& ws, int degree,
                                          VarSet support) {
    if (degree < 0) throw std::invalid_argument("monomials_of_degree: negative degree");
    std::vector<Monomial> out;
    Monomial current;
    collect(ws, support, 0, degree, current, out);
    // recursion emits exponent vectors in ascending lexicographic order already
    return out;
}

int pair_monomial_count(const WeightSystem& ws, int i, int j, int degree) {
    int ai = ws.weight(i), aj = ws.weight(j);
    int count = 0;
    for (int p = 0; p * ai <= degree; ++p) {
        int rest = degree - p * ai;
        if (i == j) {
            if (rest == 0) ++count;
        } else if (rest % aj == 0) {
            ++count;
        }
    }
    return count;
}

}  // namespace fano95
