#include <map>

#include "bugonomics/campaign_io.hpp"

namespace bugonomics {

namespace {

// Built-in campaign documents assembled from the public disclosures the
// toolkit uses as anchors. Values intentionally carry only what the
// public record states; everything else stays absent.
const std::map<std::string, std::string>& fixture_map()
{
    static const std::map<std::string, std::string> fixtures = {
        {"mythos_preview", R"({
  "schema_version": "1",
  "campaign_id": "mythos_preview",
  "run_count": 1000,
  "findings_estimate": {"lo": 24, "hi": 48},
  "total_expenditure": {"lo": 0, "hi": 20000, "upper_bound_only": true}
})"},
        {"firefox_opus46", R"({
  "schema_version": "1",
  "campaign_id": "firefox_opus46",
  "submitted_reports": 112,
  "accepted_findings": 22,
  "severity": {"high": 14},
  "files_scanned": 6000
})"},
        {"firefox_150", R"({
  "schema_version": "1",
  "campaign_id": "firefox_150",
  "accepted_findings": 271,
  "severity": {"high": 180, "moderate": 80, "low": 11, "exhaustive": true},
  "total_fixes_all_sources": 423
})"},
        {"exploit_experiment", R"({
  "schema_version": "1",
  "campaign_id": "exploit_experiment",
  "accepted_findings": 2,
  "exploitable_count": 2,
  "total_expenditure": "4000"
})"},
    };
    return fixtures;
}

} // namespace

const std::vector<std::string>& fixture_names()
{
    static const std::vector<std::string> names = [] {
        std::vector<std::string> v;
        for (const auto& [name, text] : fixture_map()) {
            (void)text;
            v.push_back(name);
        }
        return v;
    }();
    return names;
}

bool is_fixture(const std::string& name)
{
    return fixture_map().count(name) > 0;
}

const std::string& fixture_text(const std::string& name)
{
    auto it = fixture_map().find(name);
    if (it == fixture_map().end()) {
        throw io_error("unknown built-in campaign: '" + name + "'");
    }
    return it->second;
}

CampaignReport fixture_report(const std::string& name)
{
    return parse_campaign(fixture_text(name), "builtin:" + name);
}

} // namespace bugonomics
