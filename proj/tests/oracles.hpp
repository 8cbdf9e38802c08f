#pragma once
// Independent oracles for the test suite. Everything here is deliberately
// brute-force and kept apart from the library implementations it checks.

#include <algorithm>
#include <array>
#include <cstdint>
#include <set>
#include <vector>

#include "fano95/weights.hpp"

namespace oracles {

// All degree-`degree` monomials by plain nested loops over the exponents.
inline std::vector<fano95::Monomial> brute_force_monomials(const fano95::WeightSystem& ws,
                                                           int degree,
                                                           fano95::VarSet support) {
    std::vector<fano95::Monomial> out;
    const auto& a = ws.weights();
    auto bound = [&](int i) { return support.contains(i + 1) ? degree / a[i] : 0; };
    for (int e1 = 0; e1 <= bound(0); ++e1)
        for (int e2 = 0; e2 <= bound(1); ++e2)
            for (int e3 = 0; e3 <= bound(2); ++e3)
                for (int e4 = 0; e4 <= bound(3); ++e4)
                    for (int e5 = 0; e5 <= bound(4); ++e5) {
                        fano95::Monomial m{{e1, e2, e3, e4, e5}};
                        if (m.weighted_degree(ws) == degree) out.push_back(m);
                    }
    std::sort(out.begin(), out.end());
    return out;
}

// Closed-form ball size of a free product of ell involutions.
inline std::uint64_t free_product_ball(int ell, int radius) {
    if (ell == 0) return 1;
    if (ell == 1) return radius >= 1 ? 2 : 1;
    if (ell == 2) return 2 * static_cast<std::uint64_t>(radius) + 1;
    // 1 + ell*((ell-1)^r - 1)/(ell-2)
    std::uint64_t pw = 1;
    for (int i = 0; i < radius; ++i) pw *= static_cast<std::uint64_t>(ell - 1);
    return 1 + static_cast<std::uint64_t>(ell) * (pw - 1) / static_cast<std::uint64_t>(ell - 2);
}

// Distinct elements among all ell^k words of length k <= radius, reduced by
// plain adjacent-cancellation (independent of the library's reducer).
inline std::uint64_t exhaustive_free_ball(int ell, int radius) {
    std::set<std::vector<int>> seen;
    // iterate words of each length via an odometer
    for (int k = 0; k <= radius; ++k) {
        std::vector<int> digits(k, 1);
        while (true) {
            std::vector<int> stack;
            for (int x : digits) {
                if (!stack.empty() && stack.back() == x)
                    stack.pop_back();
                else
                    stack.push_back(x);
            }
            seen.insert(stack);
            int pos = k - 1;
            while (pos >= 0 && digits[pos] == ell) digits[pos--] = 1;
            if (pos < 0) break;
            ++digits[pos];
        }
        if (k == 0 && ell == 0) break;
    }
    return seen.size();
}

// ---------------------------------------------------------------------------
// Rewriting-system oracle for F3HAT: two words are equal iff they are
// connected by deletions/insertions of t_i t_i and of the six cyclic/reversed
// variants of the relator t1 t2 t3 t1 t2 t3, allowing intermediate words up
// to kRewriteCap letters. Implemented as a union-find over every word of
// length <= kRewriteCap with one edge per deletion.
// ---------------------------------------------------------------------------

inline constexpr int kRewriteCap = 14;

class RewriteOracle {
public:
    explicit RewriteOracle(int cap = kRewriteCap) : cap_(cap) {
        offsets_.assign(cap_ + 2, 0);
        for (int k = 0; k <= cap_; ++k)
            offsets_[k + 1] = offsets_[k] + pow3(k);
        parent_.resize(offsets_[cap_ + 1]);
        for (std::size_t i = 0; i < parent_.size(); ++i) parent_[i] = static_cast<int>(i);
        build_relator_table();
        link_all();
    }

    // representative of the equivalence class of a word (letters 1..3)
    int representative(const std::vector<int>& word) {
        std::vector<int> digits;
        digits.reserve(word.size());
        for (int x : word) digits.push_back(x - 1);
        return find(index_of(digits));
    }

private:
    static std::int64_t pow3(int k) {
        std::int64_t v = 1;
        while (k-- > 0) v *= 3;
        return v;
    }

    void build_relator_table() {
        relator_.assign(729, false);
        const std::array<int, 6> base{0, 1, 2, 0, 1, 2};  // letters - 1
        for (int rot = 0; rot < 6; ++rot) {
            std::array<int, 6> fwd{}, rev{};
            for (int i = 0; i < 6; ++i) fwd[i] = base[(rot + i) % 6];
            for (int i = 0; i < 6; ++i) rev[i] = fwd[5 - i];
            relator_[code6(fwd)] = true;
            relator_[code6(rev)] = true;
        }
    }

    template <typename Seq>
    static int code6(const Seq& s) {
        int v = 0;
        for (int i = 0; i < 6; ++i) v = v * 3 + s[i];
        return v;
    }

    std::int64_t index_of(const std::vector<int>& digits) const {
        std::int64_t v = 0;
        for (int d : digits) v = v * 3 + d;
        return offsets_[digits.size()] + v;
    }

    int find(std::int64_t i) {
        auto x = static_cast<int>(i);
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }

    void unite(std::int64_t a, std::int64_t b) {
        int ra = find(a), rb = find(b);
        if (ra != rb) parent_[ra] = rb;
    }

    void link_all() {
        std::vector<int> digits;
        for (int k = 2; k <= cap_; ++k) {
            digits.assign(k, 0);
            while (true) {
                link_word(digits);
                int pos = k - 1;
                while (pos >= 0 && digits[pos] == 2) digits[pos--] = 0;
                if (pos < 0) break;
                ++digits[pos];
            }
        }
    }

    void link_word(const std::vector<int>& digits) {
        const int k = static_cast<int>(digits.size());
        const std::int64_t self = index_of(digits);
        std::vector<int> child;
        child.reserve(k);
        for (int i = 0; i + 1 < k; ++i) {
            if (digits[i] != digits[i + 1]) continue;
            child.clear();
            for (int t = 0; t < k; ++t)
                if (t != i && t != i + 1) child.push_back(digits[t]);
            unite(self, index_of(child));
        }
        if (k >= 6) {
            for (int i = 0; i + 6 <= k; ++i) {
                int code = 0;
                for (int t = 0; t < 6; ++t) code = code * 3 + digits[i + t];
                if (!relator_[code]) continue;
                child.clear();
                for (int t = 0; t < k; ++t)
                    if (t < i || t >= i + 6) child.push_back(digits[t]);
                unite(self, index_of(child));
            }
        }
    }

    int cap_;
    std::vector<std::int64_t> offsets_;
    std::vector<int> parent_;
    std::vector<bool> relator_;
};

}  // namespace oracles
