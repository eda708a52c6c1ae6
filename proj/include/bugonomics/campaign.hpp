#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bugonomics/core.hpp"

namespace bugonomics {

struct GroundingEvidence {
    bool reproducer = false;
    bool trace = false;
    bool path_constraints = false;
    bool attacker_control = false;
    bool affected_configs = false;
};

struct PatchStatus {
    std::int64_t patched = 0;
    std::int64_t tested = 0;
    std::int64_t pending = 0;
};

// Total campaign expenditure: either an exact figure or a band. A band
// tagged upper_bound_only records a "under $X" public claim; derived
// per-unit costs then use the upper endpoint.
struct Expenditure {
    std::optional<Money> point;
    std::optional<Interval> range;
    bool upper_bound_only = false;

    bool present() const { return point.has_value() || range.has_value(); }
};

// One campaign disclosure record. Every field beyond the identifiers is
// optional; the linter reports what is missing, and metrics over absent
// inputs stay absent rather than defaulting to zero.
struct CampaignReport {
    std::string schema_version;
    std::string campaign_id;

    std::optional<std::int64_t> raw_candidates;
    std::optional<std::int64_t> deduplicated_candidates;
    std::optional<std::int64_t> submitted_reports;
    std::optional<std::int64_t> accepted_findings;
    // Band for campaigns that disclosed only "several dozen"-style counts.
    std::optional<Interval> findings_estimate;

    std::optional<SeveritySplit> severity;
    std::optional<std::int64_t> exploitable_count;
    std::optional<GroundingEvidence> grounding_evidence;

    std::optional<Rational> validation_hours;
    std::optional<Rational> impact_hours;
    std::optional<Rational> maintainer_review_hours;

    std::optional<PatchStatus> patch_status;
    std::optional<Rational> time_to_first_useful_finding_hours;
    std::optional<std::int64_t> run_count;
    std::optional<Money> failed_run_cost;
    std::optional<Rational> scaffold_effort_hours;
    std::optional<Expenditure> total_expenditure;

    // Self-declared precision, cross-checked against the counts.
    std::optional<double> declared_precision;

    // Context fields carried through verbatim.
    std::optional<std::int64_t> files_scanned;
    std::optional<std::int64_t> total_fixes_all_sources;

    // Fields the parser did not recognize (forward compatibility).
    std::vector<std::string> unknown_fields;

    // Funnel view over whatever counts are present; absent counts are
    // treated as unconstrained. Throws domain_error if counts invert.
    void check_funnel() const;
};

} // namespace bugonomics
