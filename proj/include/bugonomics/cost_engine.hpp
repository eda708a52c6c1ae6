#pragma once

#include <cstdint>

#include "bugonomics/core.hpp"

namespace bugonomics {

enum class OutcomeKind { validated_finding, impact_backed, accepted };

constexpr const char* outcome_name(OutcomeKind k)
{
    switch (k) {
    case OutcomeKind::validated_finding: return "validated_finding";
    case OutcomeKind::impact_backed: return "impact_backed";
    case OutcomeKind::accepted: return "accepted";
    }
    return "?";
}

// Amortized cost for one outcome class. unit_cost_micro is the exact
// rational count of micro-USD, so unit_cost * denominator == numerator
// holds before any display rounding.
struct UnitCostResult {
    OutcomeKind kind = OutcomeKind::validated_finding;
    Money numerator;
    Rational denominator_count;
    Rational unit_cost_micro;
};

// q * (T_in * r_in + T_out * r_out) + C_tools, token rates per million.
Money generation_cost(const GenerationProfile& profile, const TokenPricing& pricing);

// item_count * hours_per_item * rate; one formula shared by all four
// human-effort stages.
Money stage_cost(std::int64_t item_count, const StageEffort& effort);

Money total_cost(const CostBreakdown& breakdown);

// (C_G + C_V) / (N_c * pi_s)
UnitCostResult cost_per_validated_finding(Money c_g, Money c_v,
                                          std::int64_t n_c, const Fraction& pi_s);

// (C_G + C_V + C_I) / (N_c * pi_s * pi_e)
UnitCostResult cost_per_impact_backed(Money c_g, Money c_v, Money c_i,
                                      std::int64_t n_c, const Fraction& pi_s,
                                      const Fraction& pi_e);

// (C_G + C_V + C_R + C_T) / (N_c * pi_s)
UnitCostResult cost_per_accepted(Money c_g, Money c_v, Money c_r, Money c_t,
                                 std::int64_t n_c, const Fraction& pi_s);

} // namespace bugonomics
