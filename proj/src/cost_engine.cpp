#include "bugonomics/cost_engine.hpp"

namespace bugonomics {

namespace {

// tokens * rate-per-million must land on whole micro-dollars; the
// engine is exact or it refuses.
Money token_cost(std::int64_t tokens, Money rate_per_mtok)
{
    Rational per_token(1, 1'000'000);
    return rate_per_mtok.scaled(Rational::from_int(tokens) * per_token);
}

UnitCostResult amortize(OutcomeKind kind, Money numerator, const Rational& denominator,
                        const char* what)
{
    if (denominator.is_zero() || denominator.is_negative()) {
        throw computation_error(std::string("unit cost undefined: no ") + what);
    }
    UnitCostResult r;
    r.kind = kind;
    r.numerator = numerator;
    r.denominator_count = denominator;
    r.unit_cost_micro = numerator.micro_rational() / denominator;
    return r;
}

} // namespace

Money generation_cost(const GenerationProfile& profile, const TokenPricing& pricing)
{
    profile.validate();
    Money per_run = token_cost(profile.input_tokens_per_run, pricing.input_per_mtok) +
                    token_cost(profile.output_tokens_per_run, pricing.output_per_mtok);
    return per_run.times(profile.runs) + profile.tools_cost;
}

Money stage_cost(std::int64_t item_count, const StageEffort& effort)
{
    if (item_count < 0) {
        throw domain_error("negative item count");
    }
    effort.validate();
    return effort.rate.per_hour.scaled(Rational::from_int(item_count) *
                                       effort.hours_per_item);
}

Money total_cost(const CostBreakdown& b)
{
    return b.generation + b.validation + b.impact + b.remediation + b.triage;
}

UnitCostResult cost_per_validated_finding(Money c_g, Money c_v,
                                          std::int64_t n_c, const Fraction& pi_s)
{
    if (n_c < 0) {
        throw domain_error("negative submitted-report count");
    }
    Rational denom = Rational::from_int(n_c) * pi_s;
    return amortize(OutcomeKind::validated_finding, c_g + c_v, denom,
                    "validated findings");
}

UnitCostResult cost_per_impact_backed(Money c_g, Money c_v, Money c_i,
                                      std::int64_t n_c, const Fraction& pi_s,
                                      const Fraction& pi_e)
{
    if (n_c < 0) {
        throw domain_error("negative submitted-report count");
    }
    Rational denom = Rational::from_int(n_c) * pi_s * pi_e;
    return amortize(OutcomeKind::impact_backed, c_g + c_v + c_i, denom,
                    "impact-backed findings");
}

UnitCostResult cost_per_accepted(Money c_g, Money c_v, Money c_r, Money c_t,
                                 std::int64_t n_c, const Fraction& pi_s)
{
    if (n_c < 0) {
        throw domain_error("negative submitted-report count");
    }
    Rational denom = Rational::from_int(n_c) * pi_s;
    return amortize(OutcomeKind::accepted, c_g + c_v + c_r + c_t, denom,
                    "accepted findings");
}

} // namespace bugonomics
