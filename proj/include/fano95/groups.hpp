#pragma once
// The six presentations of the birational involution groups and their word
// problems. Five of them are free products of involutions; the sixth, F3HAT,
// adds the relation t1 t2 t3 t1 t2 t3 = 1 and is solved through a faithful
// affine model: t1: v -> -v, t2: v -> 2e1 - v, t3: v -> 2e2 - v on Z^2.

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace fano95 {

enum class PresentationTag { F0, F1, F2, F3, F3Hat, F5 };

int generator_count(PresentationTag tag);
std::string to_string(PresentationTag tag);
PresentationTag presentation_from_string(const std::string& text);

// Word in the generators, 1-based letters; the empty word is the identity.
using Word = std::vector<int>;

// Affine map v -> sign*v + shift with shift in the even lattice 2Z^2.
// Composition: (s,t)*(s',t') = (s s', t + s t').
struct AffineElement {
    int sign = 1;
    std::array<std::int64_t, 2> shift{0, 0};

    bool operator==(const AffineElement& o) const {
        return sign == o.sign && shift == o.shift;
    }
    AffineElement operator*(const AffineElement& o) const {
        return {sign * o.sign, {shift[0] + sign * o.shift[0], shift[1] + sign * o.shift[1]}};
    }
    bool is_identity() const { return sign == 1 && shift[0] == 0 && shift[1] == 0; }
};

// Normal form of a group element: the reduced word for free products, the
// affine pair for F3Hat.
struct GroupElement {
    PresentationTag tag = PresentationTag::F0;
    Word reduced;          // free-product tags only
    AffineElement affine;  // F3Hat only

    bool operator==(const GroupElement& o) const;
    bool operator!=(const GroupElement& o) const { return !(*this == o); }
    bool is_identity() const;
    std::string str() const;
};

struct ElementOrder {
    bool finite = true;
    std::int64_t value = 1;

    static ElementOrder infinite() { return {false, 0}; }
    bool operator==(const ElementOrder& o) const {
        return finite == o.finite && (!finite || value == o.value);
    }
    std::string str() const { return finite ? std::to_string(value) : "inf"; }
};

// Canonical normal form: iterated cancellation of adjacent equal letters for
// free products; folding through the affine model for F3Hat.
// Throws std::out_of_range for letters outside 1..generator_count.
GroupElement reduce(PresentationTag tag, const Word& word);

bool equal(PresentationTag tag, const Word& lhs, const Word& rhs);

// 1 for the identity, 2 for involutions, infinity otherwise. In a free
// product of involutions the only torsion elements are conjugates of
// generators; in F3Hat the sign -1 elements are the involutions.
ElementOrder order(PresentationTag tag, const Word& word);

// Number of distinct group elements represented by words of length <= radius.
std::uint64_t ball_size(PresentationTag tag, int radius);

// Presentation of the birational involution group of family N (1..95).
PresentationTag presentation_of(int family);

}  // namespace fano95
