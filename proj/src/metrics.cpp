#include "bugonomics/metrics.hpp"

#include <algorithm>
#include <set>

#include "bugonomics/sensitivity.hpp"

namespace bugonomics {

MetricsSummary funnel_metrics(const FunnelCounts& counts)
{
    counts.validate();
    if (counts.submitted_reports == 0) {
        throw computation_error("no submitted reports");
    }
    MetricsSummary s;
    s.precision = make_fraction(counts.accepted_findings, counts.submitted_reports);
    if (counts.accepted_findings > 0) {
        s.reports_per_accepted =
            Rational(counts.submitted_reports, counts.accepted_findings);
    }
    if (counts.severity.high) {
        s.high_severity_fraction =
            make_fraction(*counts.severity.high, counts.submitted_reports);
        if (*counts.severity.high > 0) {
            s.reports_per_high =
                Rational(counts.submitted_reports, *counts.severity.high);
        }
    }
    return s;
}

Rational fixes_per_maintainer_hour(std::int64_t accepted_fixed,
                                   const Rational& maintainer_hours)
{
    if (accepted_fixed < 0) {
        throw domain_error("negative accepted-fix count");
    }
    if (maintainer_hours.is_negative()) {
        throw domain_error("negative maintainer hours");
    }
    if (maintainer_hours == Rational()) {
        throw computation_error("throughput undefined: no maintainer hours");
    }
    return Rational::from_int(accepted_fixed) / maintainer_hours;
}

MetricsSummary campaign_summary(const CampaignReport& report)
{
    report.check_funnel();
    MetricsSummary s;

    if (report.submitted_reports && *report.submitted_reports > 0 &&
        report.accepted_findings) {
        FunnelCounts counts;
        counts.submitted_reports = *report.submitted_reports;
        counts.accepted_findings = *report.accepted_findings;
        counts.raw_candidates =
            report.raw_candidates.value_or(std::max(*report.submitted_reports,
                report.deduplicated_candidates.value_or(*report.submitted_reports)));
        counts.deduplicated_candidates =
            report.deduplicated_candidates.value_or(*report.submitted_reports);
        if (report.severity) {
            counts.severity = *report.severity;
        }
        s = funnel_metrics(counts);
    }

    if (report.total_expenditure && report.total_expenditure->point &&
        report.accepted_findings && *report.accepted_findings > 0) {
        UnitCostResult r;
        r.kind = OutcomeKind::accepted;
        r.numerator = *report.total_expenditure->point;
        r.denominator_count = Rational::from_int(*report.accepted_findings);
        r.unit_cost_micro = r.numerator.micro_rational() / r.denominator_count;
        s.cost_per_accepted = r;
    }

    // Band-only campaigns: per-finding cost over the disclosed findings
    // range. An upper-bound-only expenditure contributes its upper
    // endpoint, matching the "bounded above by" reading.
    if (report.total_expenditure && report.findings_estimate &&
        report.findings_estimate->lo > 0) {
        std::optional<Interval> spend;
        const Expenditure& e = *report.total_expenditure;
        if (e.range) {
            spend = e.upper_bound_only
                        ? Interval::point(e.range->hi, Unit::money)
                        : *e.range;
        } else if (e.point) {
            double usd = static_cast<double>(e.point->micro()) / Money::micro_per_usd;
            spend = Interval::point(usd, Unit::money);
        }
        if (spend) {
            s.cost_per_finding_interval = interval_div(*spend, *report.findings_estimate);
        }
    }

    if (report.maintainer_review_hours &&
        *report.maintainer_review_hours > Rational()) {
        std::optional<std::int64_t> fixed;
        if (report.patch_status) {
            fixed = report.patch_status->patched;
        } else if (report.accepted_findings) {
            fixed = report.accepted_findings;
        }
        if (fixed) {
            s.fixes_per_maintainer_hour =
                fixes_per_maintainer_hour(*fixed, *report.maintainer_review_hours);
        }
    }

    return s;
}

std::vector<ComparisonRow> compare_campaigns(const std::vector<CampaignReport>& reports)
{
    if (reports.empty()) {
        throw domain_error("no campaigns to compare");
    }
    std::set<std::string> ids;
    std::vector<ComparisonRow> rows;
    rows.reserve(reports.size());
    for (const CampaignReport& r : reports) {
        if (!ids.insert(r.campaign_id).second) {
            throw domain_error("duplicate campaign identifier: " + r.campaign_id);
        }
        rows.push_back({r.campaign_id, campaign_summary(r)});
    }
    std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) {
        return a.campaign_id < b.campaign_id;
    });
    return rows;
}

} // namespace bugonomics
