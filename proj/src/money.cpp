#include "bugonomics/money.hpp"

#include <cctype>

namespace bugonomics {

Money Money::from_usd(std::string_view text)
{
    if (text.empty()) {
        throw parse_error("empty money literal");
    }
    if (text.front() == '-') {
        throw domain_error("negative money amount: '" + std::string(text) + "'");
    }
    std::size_t i = 0;
    std::int64_t whole = 0;
    bool any_digit = false;
    for (; i < text.size() && text[i] != '.'; ++i) {
        if (!std::isdigit(static_cast<unsigned char>(text[i]))) {
            throw parse_error("malformed money literal: '" + std::string(text) + "'");
        }
        any_digit = true;
        if (__builtin_mul_overflow(whole, std::int64_t{10}, &whole) ||
            __builtin_add_overflow(whole, std::int64_t{text[i] - '0'}, &whole)) {
            throw computation_error("money overflow: '" + std::string(text) + "'");
        }
    }
    std::int64_t frac = 0;
    if (i < text.size()) { // at '.'
        ++i;
        std::size_t frac_digits = 0;
        for (; i < text.size(); ++i, ++frac_digits) {
            if (!std::isdigit(static_cast<unsigned char>(text[i]))) {
                throw parse_error("malformed money literal: '" + std::string(text) + "'");
            }
            if (frac_digits >= 6) {
                throw parse_error("money literal has more than 6 fractional digits: '" +
                                  std::string(text) + "'");
            }
            any_digit = true;
            frac = frac * 10 + (text[i] - '0');
        }
        for (; frac_digits < 6; ++frac_digits) {
            frac *= 10;
        }
    }
    if (!any_digit) {
        throw parse_error("malformed money literal: '" + std::string(text) + "'");
    }
    std::int64_t micro = 0;
    if (__builtin_mul_overflow(whole, micro_per_usd, &micro) ||
        __builtin_add_overflow(micro, frac, &micro)) {
        throw computation_error("money overflow: '" + std::string(text) + "'");
    }
    return from_micro(micro);
}

Money Money::scaled(const Rational& factor) const
{
    if (factor.is_negative()) {
        throw domain_error("negative money scale factor");
    }
    Rational scaled = micro_rational() * factor;
    if (!scaled.is_integer()) {
        throw computation_error("inexact money amount: " + scaled.to_string() +
                                " micro-USD");
    }
    return from_micro(scaled.num());
}

std::string Money::to_decimal_string() const
{
    std::int64_t whole = micro_ / micro_per_usd;
    std::int64_t frac = micro_ % micro_per_usd;
    std::string s = std::to_string(whole);
    if (frac != 0) {
        std::string f = std::to_string(frac);
        f.insert(f.begin(), 6 - f.size(), '0');
        while (f.back() == '0') {
            f.pop_back();
        }
        s += "." + f;
    }
    return s;
}

} // namespace bugonomics
