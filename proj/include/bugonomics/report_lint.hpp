#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "bugonomics/campaign.hpp"

namespace bugonomics {

enum class LintSeverity { fatal, warning };

struct LintFinding {
    LintSeverity severity = LintSeverity::warning;
    std::string field;
    std::string message;
};

// One finding per missing minimum-reporting field (warning), per count
// inversion (fatal), per inconsistent severity sum (fatal when declared
// exhaustive). Sorted by (severity, field); fatal first.
std::vector<LintFinding> validate_campaign_report(const CampaignReport& report);

bool has_fatal(const std::vector<LintFinding>& findings);

// The minimum-reporting field names, in schema order.
const std::vector<std::string>& minimum_report_fields();

enum class OwnershipModel { human_owned, human_driven_llm, llm_owned };

constexpr const char* ownership_name(OwnershipModel m)
{
    switch (m) {
    case OwnershipModel::human_owned: return "human_owned";
    case OwnershipModel::human_driven_llm: return "human_driven_llm";
    case OwnershipModel::llm_owned: return "llm_owned";
    }
    return "?";
}

OwnershipModel ownership_from_string(const std::string& name);

// Evidence bundle accompanying a patch. Artifact names are drawn from
// known_review_artifacts(); presence is what the checklist evaluates.
struct ReviewPackage {
    OwnershipModel model = OwnershipModel::human_owned;
    std::set<std::string> artifacts;
};

const std::vector<std::string>& known_review_artifacts();

// Required artifact set per ownership model; overridable via a policy
// file (see campaign_io).
using ReviewPolicy = std::map<OwnershipModel, std::vector<std::string>>;

const ReviewPolicy& default_review_policy();

struct ChecklistItem {
    std::string artifact;
    bool present = false;
};

struct ChecklistResult {
    OwnershipModel model = OwnershipModel::human_owned;
    std::vector<ChecklistItem> items;
    bool passed = false;
};

ChecklistResult check_review_package(const ReviewPackage& pkg,
                                     const ReviewPolicy& policy = default_review_policy());

} // namespace bugonomics
