#pragma once
// Terminal cyclic quotient singularities 1/r(1,a,r-a), baskets of a general
// hypersurface, and the numeric effect of Kawamata blow-ups on -K^3.

#include <stdexcept>
#include <string>
#include <vector>

#include "fano95/rational.hpp"
#include "fano95/weights.hpp"

namespace fano95 {

// Raised when a stratum produces a local type that is not of the terminal
// form 1/r(1,a,r-a), or when the input weight system is not admissible.
class SingularityError : public std::runtime_error {
public:
    explicit SingularityError(const std::string& what) : std::runtime_error(what) {}
};

// A point of type 1/r(1,a,r-a), gcd(a,r)=1, stored in normal form with
// 1 <= a <= r-a. Types 1/r(1,a,r-a) and 1/r(1,r-a,a) are identified.
class QuotientSingularity {
public:
    // Direct construction from normalized data; validates terminality.
    QuotientSingularity(int r, int a);

    // Normalizes raw local weights (w1,w2,w3) mod r: finds the weight whose
    // inverse maps the other two to a pair summing to 0 mod r. Throws
    // SingularityError if the type is not terminal or not isolated.
    static QuotientSingularity from_local_weights(int r, std::array<int, 3> w,
                                                  const std::string& stratum = "");

    int r() const { return r_; }
    int a() const { return a_; }
    int third() const { return r_ - a_; }

    bool operator==(const QuotientSingularity& o) const { return r_ == o.r_ && a_ == o.a_; }
    bool operator<(const QuotientSingularity& o) const {
        return r_ != o.r_ ? r_ < o.r_ : a_ < o.a_;
    }

    std::string str() const;  // "1/9(1,4,5)"

private:
    int r_;
    int a_;
};

struct BasketEntry {
    QuotientSingularity type;
    int count = 1;

    bool operator==(const BasketEntry& o) const {
        return type == o.type && count == o.count;
    }
};

// Multiset of quotient singularities, entries distinct and sorted by (r,a).
class Basket {
public:
    Basket() = default;
    explicit Basket(std::vector<BasketEntry> entries);

    void add(const QuotientSingularity& s, int count = 1);
    const std::vector<BasketEntry>& entries() const { return entries_; }
    bool empty() const { return entries_.empty(); }
    int total_points() const;

    bool operator==(const Basket& o) const { return entries_ == o.entries_; }
    bool operator!=(const Basket& o) const { return !(*this == o); }

    std::string str() const;  // "2 x 1/2(1,1,1) + 1 x 1/3(1,1,2)" or "smooth"

private:
    std::vector<BasketEntry> entries_;
};

// Basket of a general member, stratum by stratum:
//  - vertex i lies on X iff a_i does not divide d; it contributes one point
//    of index a_i whose local weights are the three weights other than a_i
//    and a_{j0}, where x_i^m x_{j0} has degree d;
//  - an edge (i,j) with h = gcd(a_i,a_j) > 1 contributes M-1 points of index
//    h, M the number of degree-d monomials supported on {i,j}, with local
//    weights the three non-edge weights mod h.
// Throws SingularityError on non-admissible input or a non-terminal stratum.
Basket compute_basket(const WeightSystem& ws);

// -K_Y^3 after the Kawamata blow-up of a point of type 1/r(1,a,r-a):
// subtracts 1/(r*a*(r-a)).
Rational kawamata_blowup(const Rational& kcube, const QuotientSingularity& s);

// Running -K^3 values along a chain of Kawamata blow-ups, starting from
// minus_k_cubed(ws). Purely numeric: the chain is trusted as given; no check
// is made that each point actually exists on the running blown-up model
// (chains may blow up points on exceptional divisors of earlier steps).
std::vector<Rational> blowup_chain(const WeightSystem& ws,
                                   const std::vector<QuotientSingularity>& chain);

}  // namespace fano95
