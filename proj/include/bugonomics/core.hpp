#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "bugonomics/errors.hpp"
#include "bugonomics/money.hpp"
#include "bugonomics/rational.hpp"

namespace bugonomics {

// One scaffolded campaign: q runs with mean token counts and fixed
// non-token infrastructure cost.
struct GenerationProfile {
    std::int64_t runs = 0;
    std::int64_t input_tokens_per_run = 0;
    std::int64_t output_tokens_per_run = 0;
    Money tools_cost;

    void validate() const
    {
        if (runs < 0 || input_tokens_per_run < 0 || output_tokens_per_run < 0) {
            throw domain_error("generation profile counts must be non-negative");
        }
    }
};

enum class Stage { validation, impact, remediation, triage };

constexpr const char* stage_name(Stage s)
{
    switch (s) {
    case Stage::validation: return "validation";
    case Stage::impact: return "impact";
    case Stage::remediation: return "remediation";
    case Stage::triage: return "triage";
    }
    return "?";
}

// Per-item human effort at one pipeline stage (h paired with w).
struct StageEffort {
    Stage stage = Stage::validation;
    Rational hours_per_item; // exact, non-negative
    HourlyRate rate;

    void validate() const
    {
        if (hours_per_item.is_negative()) {
            throw domain_error("hours per item must be non-negative");
        }
    }
};

struct SeveritySplit {
    std::optional<std::int64_t> high;
    std::optional<std::int64_t> moderate;
    std::optional<std::int64_t> low;
    // True when the report declares high+moderate+low to cover every
    // accepted finding.
    bool exhaustive = false;
};

// The report funnel: raw -> deduplicated -> submitted -> accepted.
struct FunnelCounts {
    std::int64_t raw_candidates = 0;
    std::int64_t deduplicated_candidates = 0;
    std::int64_t submitted_reports = 0;
    std::int64_t accepted_findings = 0;
    SeveritySplit severity;
    std::optional<std::int64_t> exploitable;

    // Throws domain_error on monotonicity or severity-sum violations.
    void validate() const;

    static FunnelCounts create(std::int64_t raw, std::int64_t dedup,
                               std::int64_t submitted, std::int64_t accepted)
    {
        FunnelCounts f;
        f.raw_candidates = raw;
        f.deduplicated_candidates = dedup;
        f.submitted_reports = submitted;
        f.accepted_findings = accepted;
        f.validate();
        return f;
    }
};

enum class Unit { money, hours, rate, count, fraction };

constexpr const char* unit_name(Unit u)
{
    switch (u) {
    case Unit::money: return "money";
    case Unit::hours: return "hours";
    case Unit::rate: return "rate";
    case Unit::count: return "count";
    case Unit::fraction: return "fraction";
    }
    return "?";
}

// Closed range [lo, hi] with a dimension tag. Used for every
// under-specified parameter.
struct Interval {
    double lo = 0;
    double hi = 0;
    Unit unit = Unit::count;

    static Interval make(double lo, double hi, Unit unit)
    {
        if (!(lo <= hi)) {
            throw domain_error("interval lower endpoint exceeds upper");
        }
        return Interval{lo, hi, unit};
    }

    static Interval point(double v, Unit unit) { return make(v, v, unit); }

    bool is_point() const { return lo == hi; }
    double width() const { return hi - lo; }
};

// The five cost components of a campaign.
struct CostBreakdown {
    Money generation;  // C_G
    Money validation;  // C_V
    Money impact;      // C_I
    Money remediation; // C_R
    Money triage;      // C_T
};

// Descriptive arguments of an outcome's market price. Carried as free
// text and never evaluated; no quantitative form is defined for them.
struct PriceFactors {
    std::string utility;
    std::string scarcity;
    std::string exclusivity;
    std::string legal_risk;
    std::string substitutes;
};

} // namespace bugonomics
