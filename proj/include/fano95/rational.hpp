#pragma once
// Exact rational arithmetic on 64-bit integers with overflow checking.
// Every value in this project that is not an integer is a Rational; there is
// no floating point anywhere.

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace fano95 {

class Rational {
public:
    Rational() = default;
    Rational(std::int64_t value) : num_(value) {}
    Rational(std::int64_t num, std::int64_t den) : num_(num), den_(den) {
        if (den_ == 0) throw std::invalid_argument("Rational: zero denominator");
        normalize();
    }

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    static std::int64_t checked_add(std::int64_t a, std::int64_t b) {
        std::int64_t r;
        if (__builtin_add_overflow(a, b, &r))
            throw std::overflow_error("Rational: integer overflow in addition");
        return r;
    }
    static std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
        std::int64_t r;
        if (__builtin_mul_overflow(a, b, &r))
            throw std::overflow_error("Rational: integer overflow in multiplication");
        return r;
    }

    Rational operator+(const Rational& o) const {
        return Rational(checked_add(checked_mul(num_, o.den_), checked_mul(o.num_, den_)),
                        checked_mul(den_, o.den_));
    }
    Rational operator-(const Rational& o) const {
        return *this + Rational(-o.num_, o.den_);
    }
    Rational operator*(const Rational& o) const {
        return Rational(checked_mul(num_, o.num_), checked_mul(den_, o.den_));
    }
    Rational operator/(const Rational& o) const {
        if (o.num_ == 0) throw std::invalid_argument("Rational: division by zero");
        return Rational(checked_mul(num_, o.den_), checked_mul(den_, o.num_));
    }
    Rational operator-() const { return Rational(-num_, den_); }

    bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const Rational& o) const { return !(*this == o); }
    bool operator<(const Rational& o) const {
        // denominators are positive, so cross multiplication keeps the order
        return checked_mul(num_, o.den_) < checked_mul(o.num_, den_);
    }
    bool operator>(const Rational& o) const { return o < *this; }
    bool operator<=(const Rational& o) const { return !(o < *this); }
    bool operator>=(const Rational& o) const { return !(*this < o); }

    int sign() const { return num_ > 0 ? 1 : (num_ < 0 ? -1 : 0); }
    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }

    // "num/den" with the denominator omitted when it is 1
    std::string str() const {
        if (den_ == 1) return std::to_string(num_);
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

    // parses "n" or "n/d"
    static Rational parse(const std::string& text);

private:
    void normalize() {
        if (den_ < 0) {
            if (den_ == INT64_MIN || num_ == INT64_MIN)
                throw std::overflow_error("Rational: integer overflow in normalization");
            num_ = -num_;
            den_ = -den_;
        }
        std::int64_t g = std::gcd(num_ < 0 ? -num_ : num_, den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
        if (num_ == 0) den_ = 1;
    }

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

}  // namespace fano95
