#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "bugonomics/cost_engine.hpp"
#include "bugonomics/metrics.hpp"
#include "bugonomics/report_lint.hpp"
#include "bugonomics/sensitivity.hpp"
#include "bugonomics/throughput_sim.hpp"

namespace bugonomics {

enum class Format { table, json, csv };

Format format_from_string(const std::string& name);

// ---- display rounding ---------------------------------------------------
// Rounding is display-only; stored values stay exact. Half rounds away
// from zero. Dollars render to the nearest whole dollar with thousands
// separators; percents and ratios to one decimal.

std::string format_dollars(Money m);
std::string format_dollars(const Rational& micro);
std::string format_dollars(double usd);
// Two-decimal form for places that show cents.
std::string format_dollars_cents(const Rational& micro);
std::string format_percent(const Rational& fraction);
std::string format_ratio(const Rational& ratio);
std::string format_hours(const Rational& hours);

// Exact JSON encodings: money as decimal strings, rationals as
// {"num", "den"} pairs.
nlohmann::json money_json(Money m);
nlohmann::json rational_json(const Rational& r);
nlohmann::json interval_json(const Interval& iv);
nlohmann::json unit_cost_json(const UnitCostResult& r);
nlohmann::json metrics_json(const MetricsSummary& s);
nlohmann::json mc_summary_json(const McSummary& s);
nlohmann::json sim_result_json(const SimResult& r);
nlohmann::json lint_findings_json(const std::vector<LintFinding>& findings);
nlohmann::json checklist_json(const ChecklistResult& r);

// ---- plain-text tables and csv -----------------------------------------

class TableWriter {
public:
    explicit TableWriter(std::vector<std::string> header);
    void add_row(std::vector<std::string> cells);
    std::string str() const;

private:
    std::vector<std::string> header_;
    std::vector<std::vector<std::string>> rows_;
};

std::string csv_field(const std::string& value);
std::string csv_line(const std::vector<std::string>& fields);

// ---- full renderers (one string per CLI result) ------------------------

std::string render_metrics(const MetricsSummary& s, Format fmt);
std::string render_comparison(const std::vector<ComparisonRow>& rows, Format fmt);
std::string render_cost(const CostBreakdown& breakdown,
                        const std::vector<UnitCostResult>& unit_costs, Format fmt);
std::string render_sensitivity(const Interval& lifted, const McSummary& mc, Format fmt);
std::string render_sim(const SimResult& r, const BottleneckReport& b, Format fmt);
std::string render_lint(const std::vector<LintFinding>& findings, Format fmt);
std::string render_checklist(const ChecklistResult& r, Format fmt);
std::string render_anchors(Format fmt);

} // namespace bugonomics
