#include <cstdio>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "bugonomics/campaign_io.hpp"
#include "bugonomics/cost_engine.hpp"
#include "bugonomics/metrics.hpp"
#include "bugonomics/render.hpp"
#include "bugonomics/report_lint.hpp"
#include "bugonomics/sensitivity.hpp"
#include "bugonomics/throughput_sim.hpp"

namespace {

using namespace bugonomics;

// Exit codes: 0 success, 1 fatal lint findings, 2 I/O or parse error,
// 3 computation error.
constexpr int exit_ok = 0;
constexpr int exit_lint_fatal = 1;
constexpr int exit_io = 2;
constexpr int exit_compute = 3;

int cmd_metrics(const std::string& file, Format fmt)
{
    CampaignReport report = load_campaign_or_fixture(file);
    auto findings = validate_campaign_report(report);
    if (has_fatal(findings)) {
        std::cerr << render_lint(findings, Format::table);
        return exit_lint_fatal;
    }
    std::cout << render_metrics(campaign_summary(report), fmt);
    return exit_ok;
}

int cmd_compare(const std::vector<std::string>& files, Format fmt)
{
    std::vector<CampaignReport> reports;
    for (const std::string& f : files) {
        reports.push_back(load_campaign_or_fixture(f));
    }
    std::cout << render_comparison(compare_campaigns(reports), fmt);
    return exit_ok;
}

int cmd_cost(const std::string& file, Format fmt)
{
    CostScenario sc = load_cost_scenario(file);

    CostBreakdown b;
    if (sc.generation && sc.pricing) {
        b.generation = generation_cost(*sc.generation, *sc.pricing);
    }
    auto stage_total = [&](Stage stage, std::optional<std::int64_t> count) -> Money {
        auto it = sc.efforts.find(stage);
        if (it == sc.efforts.end() || !count) {
            return Money{};
        }
        return stage_cost(*count, it->second);
    };
    b.validation = stage_total(Stage::validation, sc.submitted);
    b.impact = stage_total(Stage::impact, sc.accepted);
    b.remediation = stage_total(Stage::remediation, sc.accepted);
    b.triage = stage_total(Stage::triage, sc.accepted);

    std::vector<UnitCostResult> unit_costs;
    if (sc.submitted && *sc.submitted > 0 && sc.accepted && *sc.accepted > 0) {
        Fraction pi_s = make_fraction(*sc.accepted, *sc.submitted);
        unit_costs.push_back(
            cost_per_validated_finding(b.generation, b.validation, *sc.submitted, pi_s));
        unit_costs.push_back(cost_per_accepted(b.generation, b.validation, b.remediation,
                                               b.triage, *sc.submitted, pi_s));
        if (sc.exploitable && *sc.exploitable > 0) {
            Fraction pi_e = make_fraction(*sc.exploitable, *sc.accepted);
            unit_costs.push_back(cost_per_impact_backed(b.generation, b.validation,
                                                        b.impact, *sc.submitted, pi_s,
                                                        pi_e));
        }
    }
    std::cout << render_cost(b, unit_costs, fmt);
    return exit_ok;
}

int cmd_sensitivity(const std::string& file, std::optional<std::int64_t> samples,
                    std::optional<std::uint64_t> seed, Format fmt)
{
    SensitivitySpec spec = load_sensitivity_spec(file);
    if (samples) {
        spec.samples = *samples;
    }
    if (seed) {
        spec.seed = *seed;
    }
    std::map<std::string, Interval> intervals;
    for (const UncertainParam& p : spec.params) {
        intervals[p.name] = p.interval;
    }
    Interval lifted = lift_cost_model(spec.target, intervals);
    McSummary mc = monte_carlo(spec.target, spec.params, spec.samples, spec.seed);
    std::cout << render_sensitivity(lifted, mc, fmt);
    return exit_ok;
}

int cmd_simulate(const std::string& file, std::optional<std::uint64_t> seed, Format fmt)
{
    PipelineConfig cfg = load_scenario(file);
    if (seed) {
        cfg.seed = *seed;
    }
    SimResult result = simulate(cfg);
    BottleneckReport bn = bottleneck_report(result, cfg);
    std::cout << render_sim(result, bn, fmt);
    return exit_ok;
}

int cmd_lint(const std::string& file, Format fmt)
{
    CampaignReport report = load_campaign_or_fixture(file);
    auto findings = validate_campaign_report(report);
    std::cout << render_lint(findings, fmt);
    return has_fatal(findings) ? exit_lint_fatal : exit_ok;
}

int cmd_review_lint(const std::string& file, const std::string& policy_file, Format fmt)
{
    ReviewPackage pkg = load_review_package(file);
    ReviewPolicy policy =
        policy_file.empty() ? default_review_policy() : load_review_policy(policy_file);
    ChecklistResult result = check_review_package(pkg, policy);
    std::cout << render_checklist(result, fmt);
    return result.passed ? exit_ok : exit_lint_fatal;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Campaign economics toolkit: cost model, uncertainty bands, "
                 "pipeline simulation, and disclosure linting"};
    app.require_subcommand(1);

    std::string format_name = "table";
    app.add_option("--format", format_name, "Output format: table, json, or csv")
        ->check(CLI::IsMember({"table", "json", "csv"}));

    std::string file;
    std::vector<std::string> files;
    std::string policy_file;
    std::optional<std::int64_t> samples;
    std::optional<std::uint64_t> seed;

    auto* metrics_cmd = app.add_subcommand("metrics", "Derived metrics for one campaign");
    metrics_cmd->add_option("file", file, "Campaign document or built-in name")->required();

    auto* cost_cmd = app.add_subcommand("cost", "Evaluate the cost model over a scenario");
    cost_cmd->add_option("file", file, "Cost scenario file")->required();

    auto* sens_cmd =
        app.add_subcommand("sensitivity", "Interval and Monte Carlo uncertainty bands");
    sens_cmd->add_option("file", file, "Sensitivity spec file")->required();
    sens_cmd->add_option("--samples", samples, "Monte Carlo sample count");
    sens_cmd->add_option("--seed", seed, "Random seed");

    auto* sim_cmd = app.add_subcommand("simulate", "Run the remediation pipeline simulator");
    sim_cmd->add_option("file", file, "Scenario file")->required();
    sim_cmd->add_option("--seed", seed, "Random seed (overrides the scenario)");

    auto* lint_cmd = app.add_subcommand("lint", "Check a campaign report for "
                                                "missing fields and count errors");
    lint_cmd->add_option("file", file, "Campaign document or built-in name")->required();

    auto* review_cmd =
        app.add_subcommand("review-lint", "Check a review package against its "
                                          "ownership-model checklist");
    review_cmd->add_option("file", file, "Review package file")->required();
    review_cmd->add_option("--policy", policy_file, "Required-artifact policy file");

    auto* compare_cmd = app.add_subcommand("compare", "Compare campaigns side by side");
    compare_cmd->add_option("files", files, "Campaign documents or built-in names")
        ->required();

    auto* anchors_cmd =
        app.add_subcommand("anchors", "Print the built-in public anchors and "
                                      "their derived quantities");
    (void)anchors_cmd;

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? exit_ok : exit_io;
    }

    try {
        Format fmt = format_from_string(format_name);
        if (metrics_cmd->parsed()) return cmd_metrics(file, fmt);
        if (cost_cmd->parsed()) return cmd_cost(file, fmt);
        if (sens_cmd->parsed()) return cmd_sensitivity(file, samples, seed, fmt);
        if (sim_cmd->parsed()) return cmd_simulate(file, seed, fmt);
        if (lint_cmd->parsed()) return cmd_lint(file, fmt);
        if (review_cmd->parsed()) return cmd_review_lint(file, policy_file, fmt);
        if (compare_cmd->parsed()) return cmd_compare(files, fmt);
        std::cout << render_anchors(fmt);
        return exit_ok;
    } catch (const io_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_io;
    } catch (const parse_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_io;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_compute;
    }
}
