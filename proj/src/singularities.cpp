#include "fano95/singularities.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace fano95 {

namespace {

int mod_inverse(int x, int r) {
    // r is small; extended Euclid
    int t = 0, new_t = 1, rr = r, new_r = x % r;
    while (new_r != 0) {
        int q = rr / new_r;
        t -= q * new_t;
        std::swap(t, new_t);
        rr -= q * new_r;
        std::swap(rr, new_r);
    }
    return ((t % r) + r) % r;
}

}  // namespace

QuotientSingularity::QuotientSingularity(int r, int a) : r_(r), a_(a) {
    if (r_ < 2) throw SingularityError("quotient singularity: index must be >= 2");
    if (a_ < 1 || a_ >= r_)
        throw SingularityError("quotient singularity: residue out of range");
    if (std::gcd(a_, r_) != 1)
        throw SingularityError("quotient singularity: gcd(a,r) != 1, not isolated");
    if (a_ > r_ - a_) a_ = r_ - a_;
}

QuotientSingularity QuotientSingularity::from_local_weights(int r, std::array<int, 3> w,
                                                            const std::string& stratum) {
    auto fail = [&](const std::string& why) -> SingularityError {
        std::ostringstream out;
        out << "non-terminal local type 1/" << r << "(" << w[0] << "," << w[1] << ","
            << w[2] << ")";
        if (!stratum.empty()) out << " at " << stratum;
        out << ": " << why;
        return SingularityError(out.str());
    };
    if (r < 2) throw fail("index < 2");
    for (auto& x : w) x = ((x % r) + r) % r;
    for (int x : w)
        if (std::gcd(x, r) != 1) throw fail("weight not coprime to index");
    // find the distinguished weight: the other two must sum to 0 mod r
    for (int k = 0; k < 3; ++k) {
        int i = (k + 1) % 3, j = (k + 2) % 3;
        if ((w[i] + w[j]) % r == 0) {
            int u = mod_inverse(w[k], r);
            int a = static_cast<int>((static_cast<std::int64_t>(u) * w[i]) % r);
            return QuotientSingularity(r, a);
        }
    }
    throw fail("no pair of weights sums to 0 mod r");
}

std::string QuotientSingularity::str() const {
    std::ostringstream out;
    out << "1/" << r_ << "(1," << a_ << "," << (r_ - a_) << ")";
    return out.str();
}

Basket::Basket(std::vector<BasketEntry> entries) {
    for (const auto& e : entries) add(e.type, e.count);
}

void Basket::add(const QuotientSingularity& s, int count) {
    if (count <= 0) throw SingularityError("basket: counts must be positive");
    for (auto& e : entries_) {
        if (e.type == s) {
            e.count += count;
            return;
        }
    }
    entries_.push_back({s, count});
    std::sort(entries_.begin(), entries_.end(),
              [](const BasketEntry& x, const BasketEntry& y) { return x.type < y.type; });
}

int Basket::total_points() const {
    int n = 0;
    for (const auto& e : entries_) n += e.count;
    return n;
}

std::string Basket::str() const {
    if (entries_.empty()) return "smooth";
    std::ostringstream out;
    bool first = true;
    for (const auto& e : entries_) {
        if (!first) out << " + ";
        out << e.count << " x " << e.type.str();
        first = false;
    }
    return out.str();
}

Basket compute_basket(const WeightSystem& ws) {
    const auto& a = ws.weights();
    const int d = ws.degree();
    if (!is_anticanonical(ws))
        throw SingularityError("weight system " + ws.str() + " is not anticanonical");
    Basket basket;

    // vertices
    for (int i = 0; i < 5; ++i) {
        if (a[i] == 1 || d % a[i] == 0) continue;  // smooth point or off X
        int j0 = -1;
        for (int j = 0; j < 5; ++j) {
            if (j != i && a[j] % a[i] == d % a[i] && d - a[j] >= a[i]) {
                j0 = j;
                break;
            }
        }
        if (j0 < 0) {
            std::ostringstream out;
            out << "weight system " << ws.str() << " is not quasismooth at vertex " << (i + 1);
            throw SingularityError(out.str());
        }
        std::array<int, 3> local{};
        int k = 0;
        for (int t = 0; t < 5; ++t)
            if (t != i && t != j0) local[k++] = a[t];
        basket.add(QuotientSingularity::from_local_weights(
            a[i], local, "vertex " + std::to_string(i + 1) + " of " + ws.str()));
    }

    // edges
    for (int i = 0; i < 5; ++i) {
        for (int j = i + 1; j < 5; ++j) {
            int h = std::gcd(a[i], a[j]);
            if (h <= 1) continue;
            int m = pair_monomial_count(ws, i + 1, j + 1, d);
            if (m == 0) {
                std::ostringstream out;
                out << "edge (" << (i + 1) << "," << (j + 1) << ") of " << ws.str()
                    << " is contained in a general member";
                throw SingularityError(out.str());
            }
            if (m == 1) continue;
            std::array<int, 3> local{};
            int k = 0;
            for (int t = 0; t < 5; ++t)
                if (t != i && t != j) local[k++] = a[t];
            auto s = QuotientSingularity::from_local_weights(
                h, local,
                "edge (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ") of " +
                    ws.str());
            basket.add(s, m - 1);
        }
    }
    return basket;
}

Rational kawamata_blowup(const Rational& kcube, const QuotientSingularity& s) {
    std::int64_t denom = Rational::checked_mul(
        Rational::checked_mul(s.r(), s.a()), s.r() - s.a());
    return kcube - Rational(1, denom);
}

std::vector<Rational> blowup_chain(const WeightSystem& ws,
                                   const std::vector<QuotientSingularity>& chain) {
    std::vector<Rational> values;
    values.reserve(chain.size() + 1);
    values.push_back(minus_k_cubed(ws));
    for (const auto& s : chain) values.push_back(kawamata_blowup(values.back(), s));
    return values;
}

}  // namespace fano95
