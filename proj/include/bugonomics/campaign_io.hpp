#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "bugonomics/campaign.hpp"
#include "bugonomics/cost_engine.hpp"
#include "bugonomics/report_lint.hpp"
#include "bugonomics/sensitivity.hpp"
#include "bugonomics/throughput_sim.hpp"

namespace bugonomics {

inline constexpr std::string_view campaign_schema_version = "1";

// ---- campaign documents -------------------------------------------------

// Parse errors carry line:column positions; origin labels the source.
CampaignReport parse_campaign(std::string_view text, std::string_view origin);
CampaignReport load_campaign(const std::filesystem::path& path);

// Lossless: money as decimal strings, hours as exact decimal strings,
// intervals as {"lo", "hi"} objects. load(render(r)) == r.
nlohmann::json campaign_to_json(const CampaignReport& report);

// ---- built-in fixtures --------------------------------------------------

const std::vector<std::string>& fixture_names();
bool is_fixture(const std::string& name);
const std::string& fixture_text(const std::string& name);
CampaignReport fixture_report(const std::string& name);

// Resolves a CLI argument: an existing file path, else a fixture name.
CampaignReport load_campaign_or_fixture(const std::string& arg);

// ---- simulator scenarios ------------------------------------------------

PipelineConfig parse_scenario(std::string_view text, std::string_view origin);
PipelineConfig load_scenario(const std::filesystem::path& path);

// ---- sensitivity specs --------------------------------------------------

struct SensitivitySpec {
    FormulaKind target = FormulaKind::stage_cost;
    std::vector<UncertainParam> params;
    std::int64_t samples = default_mc_samples;
    std::uint64_t seed = 0;
};

SensitivitySpec parse_sensitivity_spec(std::string_view text, std::string_view origin);
SensitivitySpec load_sensitivity_spec(const std::filesystem::path& path);

// ---- cost scenarios -----------------------------------------------------

// Scalar inputs for the full cost-equation stack: generation profile,
// pricing, per-stage efforts, and funnel counts.
struct CostScenario {
    std::optional<GenerationProfile> generation;
    std::optional<TokenPricing> pricing;
    std::map<Stage, StageEffort> efforts;
    std::optional<std::int64_t> submitted;
    std::optional<std::int64_t> accepted;
    std::optional<std::int64_t> high_severity;
    std::optional<std::int64_t> exploitable;
};

CostScenario parse_cost_scenario(std::string_view text, std::string_view origin);
CostScenario load_cost_scenario(const std::filesystem::path& path);

// ---- review packages and policies --------------------------------------

ReviewPackage parse_review_package(std::string_view text, std::string_view origin);
ReviewPackage load_review_package(const std::filesystem::path& path);

ReviewPolicy parse_review_policy(std::string_view text, std::string_view origin);
ReviewPolicy load_review_policy(const std::filesystem::path& path);

// Shared helpers.
std::string read_file(const std::filesystem::path& path);
nlohmann::json parse_json(std::string_view text, std::string_view origin);

} // namespace bugonomics
