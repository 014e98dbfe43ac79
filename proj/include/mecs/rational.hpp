#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace mecs {

// Exact rational on int64 with normalized sign and gcd-reduced terms.
// All average-path-length comparisons in this library go through this type;
// doubles appear only in reports. Intermediate products use __int128 and
// overflow of the reduced result throws instead of wrapping.
class Rational {
public:
    constexpr Rational() : num_(0), den_(1) {}
    Rational(std::int64_t value) : num_(value), den_(1) {}  // NOLINT: implicit by design

    Rational(std::int64_t num, std::int64_t den) {
        if (den == 0) throw std::domain_error("rational with zero denominator");
        if (den < 0) { num = -num; den = -den; }
        const std::int64_t g = std::gcd(num < 0 ? -num : num, den);
        num_ = g ? num / g : num;
        den_ = g ? den / g : den;
    }

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

    Rational operator+(const Rational& o) const {
        return reduce(i128(num_) * o.den_ + i128(o.num_) * den_, i128(den_) * o.den_);
    }
    Rational operator-(const Rational& o) const {
        return reduce(i128(num_) * o.den_ - i128(o.num_) * den_, i128(den_) * o.den_);
    }
    Rational operator*(const Rational& o) const {
        return reduce(i128(num_) * o.num_, i128(den_) * o.den_);
    }
    Rational operator/(const Rational& o) const {
        if (o.num_ == 0) throw std::domain_error("rational division by zero");
        return reduce(i128(num_) * o.den_, i128(den_) * o.num_);
    }
    Rational operator-() const { return Rational(-num_, den_); }

    bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const Rational& o) const { return !(*this == o); }
    bool operator<(const Rational& o) const { return i128(num_) * o.den_ < i128(o.num_) * den_; }
    bool operator>(const Rational& o) const { return o < *this; }
    bool operator<=(const Rational& o) const { return !(o < *this); }
    bool operator>=(const Rational& o) const { return !(*this < o); }

    // Accepts "p", "p/q", and plain decimals like "2.71" or "-0.5".
    static Rational parse(const std::string& text);

    // "p/q", or just "p" for integers.
    std::string str() const {
        return den_ == 1 ? std::to_string(num_)
                         : std::to_string(num_) + "/" + std::to_string(den_);
    }

private:
    using i128 = __int128;

    static Rational reduce(i128 num, i128 den) {
        if (den < 0) { num = -num; den = -den; }
        const i128 g = gcd128(num < 0 ? -num : num, den);
        if (g) { num /= g; den /= g; }
        if (num > INT64_MAX || num < INT64_MIN || den > INT64_MAX) {
            throw std::overflow_error("rational arithmetic overflow");
        }
        Rational r;
        r.num_ = static_cast<std::int64_t>(num);
        r.den_ = static_cast<std::int64_t>(den);
        return r;
    }

    static i128 gcd128(i128 a, i128 b) {
        while (b) { const i128 t = a % b; a = b; b = t; }
        return a;
    }

    std::int64_t num_;
    std::int64_t den_;
};

}  // namespace mecs
