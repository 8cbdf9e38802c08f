#pragma once
// Per-family classification lists. This is registry data consumed by the
// fibration and group classifiers; every list is stored exactly once, here.

#include <algorithm>
#include <array>

namespace fano95::lists {

template <std::size_t N>
constexpr bool contains(const std::array<int, N>& xs, int n) {
    for (int x : xs)
        if (x == n) return true;
    return false;
}

// families with no birational elliptic fibration at all
inline constexpr std::array<int, 6> kNoEllipticFibration{3, 60, 75, 84, 87, 93};

// families whose elliptic fibration comes from a special construction rather
// than the natural projection to P(1,a2,a3)
inline constexpr std::array<int, 5> kSpecialEllipticConstruction{1, 2, 7, 11, 19};

// families with several distinct elliptic fibration structures
inline constexpr std::array<int, 15> kMultipleEllipticStructures{
    1, 2, 7, 9, 11, 17, 19, 20, 26, 30, 36, 44, 49, 51, 64};

// families whose elliptic fibration structure is unique, established via the
// one-point -K_Y^3 = 0 blow-up mechanism
inline constexpr std::array<int, 23> kUniqueEllipticFibration{
    14, 22, 28, 34, 37, 39, 52, 53, 57, 59, 66, 70,
    72, 73, 78, 81, 86, 88, 89, 90, 92, 94, 95};

// uniqueness established separately by an explicit classification of the
// birational transformations of the family
inline constexpr std::array<int, 1> kUniqueEllipticVerified{5};

// presentation classes of the birational involution group
inline constexpr std::array<int, 1> kPresentationF5{7};
inline constexpr std::array<int, 4> kPresentationF3Hat{4, 9, 17, 27};
inline constexpr std::array<int, 1> kPresentationF3{20};
inline constexpr std::array<int, 20> kPresentationF2{
    5, 6, 12, 13, 15, 23, 25, 30, 31, 33, 36, 38, 40, 41, 42, 44, 58, 61, 68, 76};
inline constexpr std::array<int, 19> kPresentationF1{
    2, 8, 16, 18, 24, 26, 32, 43, 45, 46, 47, 48, 54, 56, 60, 65, 69, 74, 79};
// every other family is F0 (trivial group, birationally superrigid)

// families with potentially dense rational points
inline constexpr std::array<int, 30> kPotentiallyDense{
    1,  2,  4,  5,  6,  7,  9,  11, 12, 13, 15, 17, 19, 20, 23,
    25, 27, 30, 31, 33, 36, 38, 40, 41, 42, 44, 58, 61, 68, 76};

// K3 routing data: families served by the pencil through the index-a3 point
inline constexpr std::array<int, 3> kK3IndexPencil{18, 22, 28};

// families not reached by any of the weight-inequality K3 routes
inline constexpr std::array<int, 21> kK3Residual{
    27, 33, 48, 55, 56, 58, 63, 65, 68, 72, 74, 79, 80, 83, 85, 89, 90, 91, 92, 94, 95};

// residual families needing a case-by-case variable substitution or a
// resolution argument; the rest of the residual list goes through a log flip
inline constexpr std::array<int, 5> kK3SpecialCases{27, 56, 65, 68, 83};

}  // namespace fano95::lists
