#include "fano95/groups.hpp"

#include <set>
#include <sstream>
#include <stdexcept>

#include "fano95/family_lists.hpp"
#include "fano95/rational.hpp"

namespace fano95 {

int generator_count(PresentationTag tag) {
    switch (tag) {
        case PresentationTag::F0: return 0;
        case PresentationTag::F1: return 1;
        case PresentationTag::F2: return 2;
        case PresentationTag::F3: return 3;
        case PresentationTag::F3Hat: return 3;
        case PresentationTag::F5: return 5;
    }
    throw std::logic_error("unknown PresentationTag");
}

std::string to_string(PresentationTag tag) {
    switch (tag) {
        case PresentationTag::F0: return "F0";
        case PresentationTag::F1: return "F1";
        case PresentationTag::F2: return "F2";
        case PresentationTag::F3: return "F3";
        case PresentationTag::F3Hat: return "F3HAT";
        case PresentationTag::F5: return "F5";
    }
    throw std::logic_error("unknown PresentationTag");
}

PresentationTag presentation_from_string(const std::string& text) {
    if (text == "F0") return PresentationTag::F0;
    if (text == "F1") return PresentationTag::F1;
    if (text == "F2") return PresentationTag::F2;
    if (text == "F3") return PresentationTag::F3;
    if (text == "F3HAT") return PresentationTag::F3Hat;
    if (text == "F5") return PresentationTag::F5;
    throw std::invalid_argument("unknown presentation tag '" + text + "'");
}

namespace {

void check_word(PresentationTag tag, const Word& word) {
    int n = generator_count(tag);
    for (int letter : word)
        if (letter < 1 || letter > n)
            throw std::out_of_range("word letter " + std::to_string(letter) +
                                    " out of range for " + to_string(tag));
}

AffineElement affine_generator(int letter) {
    switch (letter) {
        case 1: return {-1, {0, 0}};
        case 2: return {-1, {2, 0}};
        case 3: return {-1, {0, 2}};
    }
    throw std::out_of_range("affine generator index out of range");
}

AffineElement fold_affine(const Word& word) {
    AffineElement g;
    for (int letter : word) g = g * affine_generator(letter);
    return g;
}

Word cancel_involutions(const Word& word) {
    Word stack;
    for (int letter : word) {
        if (!stack.empty() && stack.back() == letter)
            stack.pop_back();
        else
            stack.push_back(letter);
    }
    return stack;
}

}  // namespace

bool GroupElement::operator==(const GroupElement& o) const {
    if (tag != o.tag) return false;
    if (tag == PresentationTag::F3Hat) return affine == o.affine;
    return reduced == o.reduced;
}

bool GroupElement::is_identity() const {
    if (tag == PresentationTag::F3Hat) return affine.is_identity();
    return reduced.empty();
}

std::string GroupElement::str() const {
    if (tag == PresentationTag::F3Hat) {
        std::ostringstream out;
        out << "(s=" << (affine.sign > 0 ? "+1" : "-1") << ", t=(" << affine.shift[0] << ","
            << affine.shift[1] << "))";
        return out.str();
    }
    if (reduced.empty()) return "e";
    std::ostringstream out;
    for (size_t i = 0; i < reduced.size(); ++i) out << (i ? "*" : "") << "t" << reduced[i];
    return out.str();
}

GroupElement reduce(PresentationTag tag, const Word& word) {
    check_word(tag, word);
    GroupElement g;
    g.tag = tag;
    if (tag == PresentationTag::F3Hat)
        g.affine = fold_affine(word);
    else
        g.reduced = cancel_involutions(word);
    return g;
}

bool equal(PresentationTag tag, const Word& lhs, const Word& rhs) {
    return reduce(tag, lhs) == reduce(tag, rhs);
}

ElementOrder order(PresentationTag tag, const Word& word) {
    GroupElement g = reduce(tag, word);
    if (tag == PresentationTag::F3Hat) {
        if (g.affine.is_identity()) return {true, 1};
        if (g.affine.sign == -1) return {true, 2};
        return ElementOrder::infinite();  // nonzero translation
    }
    Word w = g.reduced;
    // cyclic reduction: x u x is conjugate to u
    while (w.size() >= 2 && w.front() == w.back()) {
        w.erase(w.begin());
        w.pop_back();
        w = cancel_involutions(w);
    }
    if (w.empty()) return {true, 1};
    if (w.size() == 1) return {true, 2};
    return ElementOrder::infinite();  // cyclically reduced of length >= 2
}

std::uint64_t ball_size(PresentationTag tag, int radius) {
    if (radius < 0) throw std::invalid_argument("ball_size: radius must be >= 0");
    if (tag == PresentationTag::F3Hat) {
        // breadth-first search over affine states
        std::set<std::tuple<int, std::int64_t, std::int64_t>> seen;
        std::vector<AffineElement> frontier{AffineElement{}};
        seen.insert({1, 0, 0});
        for (int step = 0; step < radius; ++step) {
            std::vector<AffineElement> next;
            for (const auto& g : frontier)
                for (int letter = 1; letter <= 3; ++letter) {
                    AffineElement h = g * affine_generator(letter);
                    if (seen.insert({h.sign, h.shift[0], h.shift[1]}).second)
                        next.push_back(h);
                }
            frontier = std::move(next);
        }
        return seen.size();
    }
    // free products: distinct elements of word length <= radius are exactly
    // the reduced words of length <= radius
    std::uint64_t ell = static_cast<std::uint64_t>(generator_count(tag));
    if (ell == 0) return 1;
    std::uint64_t total = 1, level = ell;
    for (int k = 1; k <= radius; ++k) {
        total = static_cast<std::uint64_t>(
            Rational::checked_add(static_cast<std::int64_t>(total),
                                  static_cast<std::int64_t>(level)));
        if (k < radius)
            level = static_cast<std::uint64_t>(Rational::checked_mul(
                static_cast<std::int64_t>(level), static_cast<std::int64_t>(ell - 1)));
    }
    return total;
}

PresentationTag presentation_of(int family) {
    if (family < 1 || family > 95)
        throw std::out_of_range("presentation_of: family number must be 1..95");
    if (lists::contains(lists::kPresentationF5, family)) return PresentationTag::F5;
    if (lists::contains(lists::kPresentationF3Hat, family)) return PresentationTag::F3Hat;
    if (lists::contains(lists::kPresentationF3, family)) return PresentationTag::F3;
    if (lists::contains(lists::kPresentationF2, family)) return PresentationTag::F2;
    if (lists::contains(lists::kPresentationF1, family)) return PresentationTag::F1;
    return PresentationTag::F0;
}

}  // namespace fano95
