#include "bugonomics/rational.hpp"

#include <cctype>

namespace bugonomics {

Rational rational_from_decimal(std::string_view text)
{
    if (text.empty()) {
        throw parse_error("empty decimal literal");
    }
    bool negative = false;
    std::size_t i = 0;
    if (text[0] == '-' || text[0] == '+') {
        negative = text[0] == '-';
        i = 1;
    }
    std::int64_t num = 0;
    std::int64_t den = 1;
    bool any_digit = false;
    bool seen_dot = false;
    for (; i < text.size(); ++i) {
        char c = text[i];
        if (c == '.') {
            if (seen_dot) {
                throw parse_error("malformed decimal literal: '" + std::string(text) + "'");
            }
            seen_dot = true;
            continue;
        }
        if (!std::isdigit(static_cast<unsigned char>(c))) {
            throw parse_error("malformed decimal literal: '" + std::string(text) + "'");
        }
        any_digit = true;
        if (__builtin_mul_overflow(num, std::int64_t{10}, &num) ||
            __builtin_add_overflow(num, std::int64_t{c - '0'}, &num)) {
            throw computation_error("decimal literal overflow: '" + std::string(text) + "'");
        }
        if (seen_dot) {
            if (__builtin_mul_overflow(den, std::int64_t{10}, &den)) {
                throw computation_error("decimal literal overflow: '" +
                                        std::string(text) + "'");
            }
        }
    }
    if (!any_digit) {
        throw parse_error("malformed decimal literal: '" + std::string(text) + "'");
    }
    return Rational(negative ? -num : num, den);
}

std::optional<std::string> rational_to_decimal(const Rational& r)
{
    constexpr std::int64_t scale = 1'000'000;
    if (scale % r.den() != 0) {
        return std::nullopt;
    }
    std::int64_t micro = 0;
    if (__builtin_mul_overflow(r.num(), scale / r.den(), &micro)) {
        return std::nullopt;
    }
    bool negative = micro < 0;
    if (negative) {
        micro = -micro;
    }
    std::string s = std::to_string(micro / scale);
    std::int64_t frac = micro % scale;
    if (frac != 0) {
        std::string f = std::to_string(frac);
        f.insert(f.begin(), 6 - f.size(), '0');
        while (f.back() == '0') {
            f.pop_back();
        }
        s += "." + f;
    }
    if (negative) {
        s.insert(s.begin(), '-');
    }
    return s;
}

} // namespace bugonomics
