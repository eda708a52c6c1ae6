#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "bugonomics/errors.hpp"
#include "bugonomics/rational.hpp"

namespace bugonomics {

// Non-negative USD amount stored as an exact count of micro-dollars
// (10^-6 USD). Never a binary float. All arithmetic is overflow-checked.
class Money {
public:
    static constexpr std::int64_t micro_per_usd = 1'000'000;

    Money() = default;

    static Money from_micro(std::int64_t micro)
    {
        if (micro < 0) {
            throw domain_error("negative money amount");
        }
        Money m;
        m.micro_ = micro;
        return m;
    }

    static Money from_dollars(std::int64_t dollars)
    {
        if (dollars < 0) {
            throw domain_error("negative money amount");
        }
        std::int64_t micro = 0;
        if (__builtin_mul_overflow(dollars, micro_per_usd, &micro)) {
            throw computation_error("money overflow");
        }
        return from_micro(micro);
    }

    // Parses a decimal literal with at most 6 fractional digits,
    // e.g. "20000", "2.50", "0.000001".
    static Money from_usd(std::string_view text);

    std::int64_t micro() const { return micro_; }

    // Exact value in micro-USD as a rational (for unit-cost arithmetic).
    Rational micro_rational() const { return Rational::from_int(micro_); }

    Money operator+(Money o) const
    {
        std::int64_t r = 0;
        if (__builtin_add_overflow(micro_, o.micro_, &r)) {
            throw computation_error("money overflow");
        }
        return from_micro(r);
    }

    Money& operator+=(Money o)
    {
        *this = *this + o;
        return *this;
    }

    // Multiplies by a non-negative integer count, checked.
    Money times(std::int64_t count) const
    {
        if (count < 0) {
            throw domain_error("negative count");
        }
        std::int64_t r = 0;
        if (__builtin_mul_overflow(micro_, count, &r)) {
            throw computation_error("money overflow");
        }
        return from_micro(r);
    }

    // Exact scaling by a non-negative rational. Throws if the result is
    // not a whole number of micro-dollars; losslessness is the contract.
    Money scaled(const Rational& factor) const;

    bool operator==(Money o) const { return micro_ == o.micro_; }
    bool operator!=(Money o) const { return micro_ != o.micro_; }
    bool operator<(Money o) const { return micro_ < o.micro_; }
    bool operator<=(Money o) const { return micro_ <= o.micro_; }
    bool operator>(Money o) const { return micro_ > o.micro_; }
    bool operator>=(Money o) const { return micro_ >= o.micro_; }

    // Minimal decimal string: "20000", "2.5", "0.000001". Round-trips
    // through from_usd exactly.
    std::string to_decimal_string() const;

private:
    std::int64_t micro_ = 0;
};

// Fully loaded hourly cost (w_v, w_i, w_r, w_t).
struct HourlyRate {
    Money per_hour;
};

// Per-million-token API pricing (r_in, r_out).
struct TokenPricing {
    std::string model_name;
    Money input_per_mtok;
    Money output_per_mtok;
};

} // namespace bugonomics
