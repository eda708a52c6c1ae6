#pragma once

#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <string_view>

#include "bugonomics/errors.hpp"

namespace bugonomics {

// Exact signed rational over int64 with __int128 intermediates.
// Always normalized: gcd(num, den) == 1, den > 0.
class Rational {
public:
    Rational() = default;

    Rational(std::int64_t num, std::int64_t den)
    {
        if (den == 0) {
            throw domain_error("rational with zero denominator");
        }
        __int128 n = num;
        __int128 d = den;
        if (d < 0) {
            n = -n;
            d = -d;
        }
        normalize_assign(n, d);
    }

    static Rational from_int(std::int64_t n) { return Rational(n, 1); }

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }
    bool is_negative() const { return num_ < 0; }

    double to_double() const
    {
        return static_cast<double>(num_) / static_cast<double>(den_);
    }

    Rational operator+(const Rational& o) const
    {
        return make(i128(num_) * o.den_ + i128(o.num_) * den_, i128(den_) * o.den_);
    }
    Rational operator-(const Rational& o) const
    {
        return make(i128(num_) * o.den_ - i128(o.num_) * den_, i128(den_) * o.den_);
    }
    Rational operator*(const Rational& o) const
    {
        return make(i128(num_) * o.num_, i128(den_) * o.den_);
    }
    Rational operator/(const Rational& o) const
    {
        if (o.num_ == 0) {
            throw computation_error("rational division by zero");
        }
        return make(i128(num_) * o.den_, i128(den_) * o.num_);
    }

    bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const Rational& o) const { return !(*this == o); }
    bool operator<(const Rational& o) const { return i128(num_) * o.den_ < i128(o.num_) * den_; }
    bool operator<=(const Rational& o) const { return i128(num_) * o.den_ <= i128(o.num_) * den_; }
    bool operator>(const Rational& o) const { return o < *this; }
    bool operator>=(const Rational& o) const { return o <= *this; }

    // Nearest integer, ties away from zero (the display-rounding rule).
    std::int64_t round_half_away() const
    {
        __int128 n = num_;
        __int128 d = den_;
        bool neg = n < 0;
        if (neg) n = -n;
        __int128 q = (2 * n + d) / (2 * d);
        return static_cast<std::int64_t>(neg ? -q : q);
    }

    std::string to_string() const
    {
        std::string s = std::to_string(num_);
        if (den_ != 1) {
            s += "/" + std::to_string(den_);
        }
        return s;
    }

private:
    using i128 = __int128;

    static Rational make(i128 n, i128 d)
    {
        Rational r;
        if (d < 0) {
            n = -n;
            d = -d;
        }
        r.normalize_assign(n, d);
        return r;
    }

    void normalize_assign(i128 n, i128 d)
    {
        i128 a = n < 0 ? -n : n;
        i128 g = gcd128(a, d);
        if (g > 1) {
            n /= g;
            d /= g;
        }
        constexpr i128 lo = INT64_MIN;
        constexpr i128 hi = INT64_MAX;
        if (n < lo || n > hi || d > hi) {
            throw computation_error("rational overflow");
        }
        num_ = static_cast<std::int64_t>(n);
        den_ = static_cast<std::int64_t>(d);
    }

    static i128 gcd128(i128 a, i128 b)
    {
        while (b != 0) {
            i128 t = a % b;
            a = b;
            b = t;
        }
        return a;
    }

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

// Parses a (possibly signed) decimal literal into an exact rational.
Rational rational_from_decimal(std::string_view text);

// Exact decimal rendering when the denominator divides 10^6; empty
// optional otherwise.
std::optional<std::string> rational_to_decimal(const Rational& r);

// A rational constrained to [0, 1]; houses the acceptance fractions.
using Fraction = Rational;

inline Fraction make_fraction(std::int64_t numerator, std::int64_t denominator)
{
    if (denominator <= 0) {
        throw domain_error("fraction denominator must be positive");
    }
    if (numerator < 0 || numerator > denominator) {
        throw domain_error("fraction outside [0, 1]");
    }
    return Rational(numerator, denominator);
}

} // namespace bugonomics
