#include "bugonomics/report_lint.hpp"

#include <algorithm>
#include <cmath>

namespace bugonomics {

namespace {

void warn(std::vector<LintFinding>& out, const std::string& field,
          const std::string& message)
{
    out.push_back({LintSeverity::warning, field, message});
}

void fatal(std::vector<LintFinding>& out, const std::string& field,
           const std::string& message)
{
    out.push_back({LintSeverity::fatal, field, message});
}

} // namespace

const std::vector<std::string>& minimum_report_fields()
{
    static const std::vector<std::string> fields = {
        "raw_candidates",
        "deduplicated_candidates",
        "submitted_reports",
        "accepted_findings",
        "severity",
        "exploitable_count",
        "grounding_evidence",
        "validation_hours",
        "impact_hours",
        "maintainer_review_hours",
        "patch_status",
        "time_to_first_useful_finding_hours",
        "run_count",
        "failed_run_cost",
        "scaffold_effort_hours",
        "total_expenditure",
    };
    return fields;
}

std::vector<LintFinding> validate_campaign_report(const CampaignReport& r)
{
    std::vector<LintFinding> out;

    // Recommended disclosure fields: absence is a warning, never fatal.
    auto missing = [&](const std::string& field, bool present, const char* why) {
        if (!present) {
            warn(out, field, std::string("recommended field missing: ") + why);
        }
    };
    missing("raw_candidates", r.raw_candidates.has_value(),
            "output volume before filtering is unknown");
    missing("deduplicated_candidates", r.deduplicated_candidates.has_value(),
            "repeated discoveries cannot be separated from distinct hypotheses");
    missing("submitted_reports", r.submitted_reports.has_value(),
            "the review load placed on the recipient is unknown");
    missing("accepted_findings", r.accepted_findings.has_value() ||
                                     r.findings_estimate.has_value(),
            "confirmed security value is unknown");
    missing("severity", r.severity.has_value(),
            "low-risk cleanup cannot be distinguished from high-impact findings");
    missing("exploitable_count", r.exploitable_count.has_value(),
            "suspected defects cannot be separated from credible attack paths");
    missing("grounding_evidence", r.grounding_evidence.has_value(),
            "reproducers, traces, and attacker-control arguments are undeclared");
    missing("validation_hours", r.validation_hours.has_value(),
            "confirmation cost is unknown");
    missing("impact_hours", r.impact_hours.has_value(),
            "the cost of proving severity or exploitability is unknown");
    missing("maintainer_review_hours", r.maintainer_review_hours.has_value(),
            "maintainer-side review burden is unknown");
    missing("patch_status", r.patch_status.has_value(),
            "whether findings became durable fixes is unknown");
    missing("time_to_first_useful_finding_hours",
            r.time_to_first_useful_finding_hours.has_value(),
            "search cost cannot be separated from replay success");
    missing("run_count", r.run_count.has_value(),
            "variance and unsuccessful exploration are unmeasured");
    missing("failed_run_cost", r.failed_run_cost.has_value(),
            "the cost of unsuccessful exploration is unknown");
    missing("scaffold_effort_hours", r.scaffold_effort_hours.has_value(),
            "model capability cannot be separated from harness support");
    missing("total_expenditure",
            r.total_expenditure.has_value() && r.total_expenditure->present(),
            "cross-system cost comparison is impossible");

    // Count inversions make every derived metric meaningless: fatal.
    try {
        r.check_funnel();
    } catch (const domain_error& e) {
        fatal(out, "funnel", e.what());
    }

    // Precision is derived from counts, never an input; a declared
    // figure that disagrees with accepted/submitted gets flagged.
    if (r.declared_precision && r.submitted_reports && *r.submitted_reports > 0 &&
        r.accepted_findings) {
        double derived = static_cast<double>(*r.accepted_findings) /
                         static_cast<double>(*r.submitted_reports);
        if (std::fabs(derived - *r.declared_precision) > 5e-4) {
            warn(out, "declared_precision",
                 "declared precision disagrees with accepted/submitted counts");
        }
    }

    for (const std::string& f : r.unknown_fields) {
        warn(out, f, "unrecognized field (ignored)");
    }

    std::sort(out.begin(), out.end(), [](const LintFinding& a, const LintFinding& b) {
        if (a.severity != b.severity) {
            return a.severity == LintSeverity::fatal;
        }
        return a.field < b.field;
    });
    return out;
}

bool has_fatal(const std::vector<LintFinding>& findings)
{
    return std::any_of(findings.begin(), findings.end(), [](const LintFinding& f) {
        return f.severity == LintSeverity::fatal;
    });
}

OwnershipModel ownership_from_string(const std::string& name)
{
    if (name == "human_owned") return OwnershipModel::human_owned;
    if (name == "human_driven_llm") return OwnershipModel::human_driven_llm;
    if (name == "llm_owned") return OwnershipModel::llm_owned;
    throw parse_error("unknown ownership model: '" + name + "'");
}

const std::vector<std::string>& known_review_artifacts()
{
    static const std::vector<std::string> names = {
        "patch",
        "candidate_report",
        "affected_paths",
        "exploitability_argument",
        "changed_invariant",
        "regression_test",
        "compatibility_notes",
        "documentation",
        "human_intent",
        "prompt_spec",
        "review_decision",
        "audit_trail",
        "objective_spec",
        "evidence_used",
        "alternatives_rejected",
        "acceptability_explanation",
    };
    return names;
}

const ReviewPolicy& default_review_policy()
{
    static const ReviewPolicy policy = [] {
        ReviewPolicy p;
        p[OwnershipModel::human_owned] = {
            "patch",          "changed_invariant", "regression_test",
            "compatibility_notes", "documentation", "candidate_report",
        };
        // Human-driven LLM work needs everything a human-owned change
        // needs, plus the model-facing rationale.
        p[OwnershipModel::human_driven_llm] = p[OwnershipModel::human_owned];
        for (const char* extra : {"human_intent", "prompt_spec", "review_decision"}) {
            p[OwnershipModel::human_driven_llm].push_back(extra);
        }
        p[OwnershipModel::llm_owned] = {
            "audit_trail",   "objective_spec",        "evidence_used",
            "alternatives_rejected", "regression_test", "acceptability_explanation",
        };
        return p;
    }();
    return policy;
}

ChecklistResult check_review_package(const ReviewPackage& pkg, const ReviewPolicy& policy)
{
    auto it = policy.find(pkg.model);
    if (it == policy.end()) {
        throw domain_error(std::string("no required-artifact set for ownership model ") +
                           ownership_name(pkg.model));
    }
    ChecklistResult res;
    res.model = pkg.model;
    res.passed = true;
    for (const std::string& artifact : it->second) {
        bool present = pkg.artifacts.count(artifact) > 0;
        res.items.push_back({artifact, present});
        res.passed = res.passed && present;
    }
    return res;
}

} // namespace bugonomics
