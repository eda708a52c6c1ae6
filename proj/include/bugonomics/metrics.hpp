#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bugonomics/campaign.hpp"
#include "bugonomics/cost_engine.hpp"

namespace bugonomics {

// Derived campaign quantities. Absent inputs leave the corresponding
// metric absent; nothing here defaults to zero.
struct MetricsSummary {
    std::optional<Fraction> precision;              // pi_s = accepted / submitted
    std::optional<Fraction> high_severity_fraction; // pi_h = high / submitted
    std::optional<Rational> reports_per_accepted;   // 1 / pi_s
    std::optional<Rational> reports_per_high;
    std::optional<UnitCostResult> cost_per_accepted; // expenditure / accepted
    std::optional<Rational> fixes_per_maintainer_hour;
    // Band when the campaign disclosed only a findings range.
    std::optional<Interval> cost_per_finding_interval;
};

// pi_s, pi_h and the reciprocal review-burden ratios from the funnel.
MetricsSummary funnel_metrics(const FunnelCounts& counts);

// accepted_fixed / maintainer_hours, exact.
Rational fixes_per_maintainer_hour(std::int64_t accepted_fixed, const Rational& maintainer_hours);

// Everything computable from the fields present in the report.
MetricsSummary campaign_summary(const CampaignReport& report);

struct ComparisonRow {
    std::string campaign_id;
    MetricsSummary summary;
};

// One row per campaign, ordered by campaign id. Duplicate ids error.
std::vector<ComparisonRow> compare_campaigns(const std::vector<CampaignReport>& reports);

} // namespace bugonomics
