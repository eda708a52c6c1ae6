#include "bugonomics/render.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "bugonomics/campaign_io.hpp"
#include "bugonomics/metrics.hpp"

namespace bugonomics {

Format format_from_string(const std::string& name)
{
    if (name == "table") return Format::table;
    if (name == "json") return Format::json;
    if (name == "csv") return Format::csv;
    throw parse_error("unknown output format: '" + name + "'");
}

// ---- display formatting -------------------------------------------------

namespace {

std::string group_thousands(std::int64_t v)
{
    bool neg = v < 0;
    std::string digits = std::to_string(neg ? -v : v);
    std::string out;
    std::size_t lead = digits.size() % 3 == 0 ? 3 : digits.size() % 3;
    for (std::size_t i = 0; i < digits.size(); ++i) {
        if (i > 0 && (i - lead) % 3 == 0 && i >= lead) {
            out += ',';
        }
        out += digits[i];
    }
    return neg ? "-" + out : out;
}

std::string fixed1(const Rational& r)
{
    // One decimal, half away from zero.
    std::int64_t tenths = (r * Rational::from_int(10)).round_half_away();
    std::string sign = tenths < 0 ? "-" : "";
    if (tenths < 0) tenths = -tenths;
    return sign + std::to_string(tenths / 10) + "." + std::to_string(tenths % 10);
}

std::string sig6(double v)
{
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

} // namespace

std::string format_dollars(const Rational& micro)
{
    Rational dollars = micro / Rational::from_int(Money::micro_per_usd);
    return "$" + group_thousands(dollars.round_half_away());
}

std::string format_dollars(Money m)
{
    return format_dollars(m.micro_rational());
}

std::string format_dollars(double usd)
{
    return "$" + group_thousands(std::llround(usd));
}

std::string format_dollars_cents(const Rational& micro)
{
    Rational cents_r = micro / Rational::from_int(10'000);
    std::int64_t cents = cents_r.round_half_away();
    std::string sign = cents < 0 ? "-" : "";
    if (cents < 0) cents = -cents;
    std::string frac = std::to_string(cents % 100);
    if (frac.size() < 2) frac.insert(frac.begin(), '0');
    return sign + "$" + group_thousands(cents / 100) + "." + frac;
}

std::string format_percent(const Rational& fraction)
{
    // Per-mille precision gives one decimal of percent.
    std::int64_t pm = (fraction * Rational::from_int(1000)).round_half_away();
    std::string sign = pm < 0 ? "-" : "";
    if (pm < 0) pm = -pm;
    return sign + std::to_string(pm / 10) + "." + std::to_string(pm % 10) + "%";
}

std::string format_ratio(const Rational& ratio)
{
    return fixed1(ratio);
}

std::string format_hours(const Rational& hours)
{
    if (auto dec = rational_to_decimal(hours)) {
        return *dec;
    }
    return hours.to_string();
}

// ---- exact JSON encodings ----------------------------------------------

nlohmann::json money_json(Money m)
{
    return m.to_decimal_string();
}

nlohmann::json rational_json(const Rational& r)
{
    return nlohmann::json{{"num", r.num()}, {"den", r.den()}};
}

nlohmann::json interval_json(const Interval& iv)
{
    return nlohmann::json{{"lo", iv.lo}, {"hi", iv.hi}, {"unit", unit_name(iv.unit)}};
}

nlohmann::json unit_cost_json(const UnitCostResult& r)
{
    return nlohmann::json{
        {"outcome", outcome_name(r.kind)},
        {"numerator_usd", money_json(r.numerator)},
        {"denominator_count", rational_json(r.denominator_count)},
        {"unit_cost_micro_usd", rational_json(r.unit_cost_micro)},
        {"display", format_dollars(r.unit_cost_micro)},
    };
}

nlohmann::json metrics_json(const MetricsSummary& s)
{
    nlohmann::json j = nlohmann::json::object();
    if (s.precision) j["precision"] = rational_json(*s.precision);
    if (s.high_severity_fraction) {
        j["high_severity_fraction"] = rational_json(*s.high_severity_fraction);
    }
    if (s.reports_per_accepted) {
        j["reports_per_accepted"] = rational_json(*s.reports_per_accepted);
    }
    if (s.reports_per_high) j["reports_per_high"] = rational_json(*s.reports_per_high);
    if (s.cost_per_accepted) j["cost_per_accepted"] = unit_cost_json(*s.cost_per_accepted);
    if (s.fixes_per_maintainer_hour) {
        j["fixes_per_maintainer_hour"] = rational_json(*s.fixes_per_maintainer_hour);
    }
    if (s.cost_per_finding_interval) {
        j["cost_per_finding_usd"] = interval_json(*s.cost_per_finding_interval);
    }
    return j;
}

nlohmann::json mc_summary_json(const McSummary& s)
{
    return nlohmann::json{
        {"sample_count", s.sample_count}, {"seed", s.seed}, {"mean", s.mean},
        {"std_dev", s.std_dev},           {"p05", s.p05},   {"p50", s.p50},
        {"p95", s.p95},                   {"min", s.min},   {"max", s.max},
    };
}

nlohmann::json sim_result_json(const SimResult& r)
{
    nlohmann::json stages = nlohmann::json::object();
    const char* names[] = {"validation", "impact", "remediation", "triage"};
    for (std::size_t i = 0; i < 4; ++i) {
        const StageStats& st = r.stages[i];
        stages[names[i]] = {
            {"items_in", st.items_in},
            {"items_out", st.items_out},
            {"items_dropped", st.items_dropped},
            {"end_backlog", st.end_backlog},
            {"busy_hours", st.busy_hours},
            {"utilization", st.utilization},
        };
    }
    nlohmann::json j{
        {"arrivals", r.arrivals},
        {"stages", stages},
        {"accepted_fixes_shipped", r.accepted_fixes_shipped},
        {"total_cost_usd",
         {{"generation", money_json(r.total_cost.generation)},
          {"validation", money_json(r.total_cost.validation)},
          {"impact", money_json(r.total_cost.impact)},
          {"remediation", money_json(r.total_cost.remediation)},
          {"triage", money_json(r.total_cost.triage)},
          {"total", money_json(total_cost(r.total_cost))}}},
    };
    if (r.fixes_per_maintainer_hour) {
        j["accepted_fixes_per_maintainer_hour"] = *r.fixes_per_maintainer_hour;
    }
    return j;
}

nlohmann::json lint_findings_json(const std::vector<LintFinding>& findings)
{
    nlohmann::json arr = nlohmann::json::array();
    for (const LintFinding& f : findings) {
        arr.push_back({
            {"severity", f.severity == LintSeverity::fatal ? "fatal" : "warning"},
            {"field", f.field},
            {"message", f.message},
        });
    }
    return arr;
}

nlohmann::json checklist_json(const ChecklistResult& r)
{
    nlohmann::json items = nlohmann::json::array();
    for (const ChecklistItem& item : r.items) {
        items.push_back({{"artifact", item.artifact}, {"present", item.present}});
    }
    return nlohmann::json{
        {"ownership_model", ownership_name(r.model)},
        {"items", items},
        {"passed", r.passed},
    };
}

// ---- tables and csv -----------------------------------------------------

TableWriter::TableWriter(std::vector<std::string> header) : header_(std::move(header)) {}

void TableWriter::add_row(std::vector<std::string> cells)
{
    cells.resize(header_.size());
    rows_.push_back(std::move(cells));
}

std::string TableWriter::str() const
{
    std::vector<std::size_t> widths(header_.size());
    for (std::size_t c = 0; c < header_.size(); ++c) {
        widths[c] = header_[c].size();
        for (const auto& row : rows_) {
            widths[c] = std::max(widths[c], row[c].size());
        }
    }
    std::ostringstream out;
    auto emit = [&](const std::vector<std::string>& row) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            out << row[c];
            if (c + 1 < row.size()) {
                out << std::string(widths[c] - row[c].size() + 2, ' ');
            }
        }
        out << '\n';
    };
    emit(header_);
    std::string rule;
    for (std::size_t c = 0; c < widths.size(); ++c) {
        rule += std::string(widths[c], '-');
        if (c + 1 < widths.size()) {
            rule += "  ";
        }
    }
    out << rule << '\n';
    for (const auto& row : rows_) {
        emit(row);
    }
    return out.str();
}

std::string csv_field(const std::string& value)
{
    if (value.find_first_of(",\"\n") == std::string::npos) {
        return value;
    }
    std::string quoted = "\"";
    for (char c : value) {
        if (c == '"') {
            quoted += '"';
        }
        quoted += c;
    }
    quoted += '"';
    return quoted;
}

std::string csv_line(const std::vector<std::string>& fields)
{
    std::string out;
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i > 0) {
            out += ',';
        }
        out += csv_field(fields[i]);
    }
    out += '\n';
    return out;
}

// ---- full renderers -----------------------------------------------------

namespace {

constexpr const char* gap = "-";

std::string json_dump(const nlohmann::json& j)
{
    return j.dump(2) + "\n";
}

std::vector<std::pair<std::string, std::string>> metric_rows(const MetricsSummary& s)
{
    std::vector<std::pair<std::string, std::string>> rows;
    auto add = [&](const char* name, const std::string& v) { rows.push_back({name, v}); };
    add("precision", s.precision ? format_percent(*s.precision) : gap);
    add("high_severity_fraction",
        s.high_severity_fraction ? format_percent(*s.high_severity_fraction) : gap);
    add("reports_per_accepted",
        s.reports_per_accepted ? format_ratio(*s.reports_per_accepted) : gap);
    add("reports_per_high", s.reports_per_high ? format_ratio(*s.reports_per_high) : gap);
    add("cost_per_accepted",
        s.cost_per_accepted ? format_dollars(s.cost_per_accepted->unit_cost_micro) : gap);
    add("fixes_per_maintainer_hour",
        s.fixes_per_maintainer_hour ? format_ratio(*s.fixes_per_maintainer_hour) : gap);
    if (s.cost_per_finding_interval) {
        const Interval& iv = *s.cost_per_finding_interval;
        add("cost_per_finding",
            format_dollars(iv.lo) + (iv.is_point() ? "" : "-" + format_dollars(iv.hi)));
    } else {
        add("cost_per_finding", gap);
    }
    return rows;
}

} // namespace

std::string render_metrics(const MetricsSummary& s, Format fmt)
{
    if (fmt == Format::json) {
        return json_dump(metrics_json(s));
    }
    auto rows = metric_rows(s);
    if (fmt == Format::csv) {
        std::vector<std::string> header, values;
        for (auto& [k, v] : rows) {
            header.push_back(k);
            values.push_back(v == gap ? "" : v);
        }
        return csv_line(header) + csv_line(values);
    }
    TableWriter t({"metric", "value"});
    for (auto& [k, v] : rows) {
        t.add_row({k, v});
    }
    return t.str();
}

std::string render_comparison(const std::vector<ComparisonRow>& rows, Format fmt)
{
    if (fmt == Format::json) {
        nlohmann::json arr = nlohmann::json::array();
        for (const ComparisonRow& r : rows) {
            nlohmann::json j = metrics_json(r.summary);
            j["campaign_id"] = r.campaign_id;
            arr.push_back(j);
        }
        return json_dump(arr);
    }
    std::vector<std::string> header = {"campaign"};
    for (auto& [k, v] : metric_rows(MetricsSummary{})) {
        (void)v;
        header.push_back(k);
    }
    std::vector<std::vector<std::string>> body;
    for (const ComparisonRow& r : rows) {
        std::vector<std::string> cells = {r.campaign_id};
        for (auto& [k, v] : metric_rows(r.summary)) {
            (void)k;
            cells.push_back(v);
        }
        body.push_back(cells);
    }
    if (fmt == Format::csv) {
        std::string out = csv_line(header);
        for (auto& cells : body) {
            for (auto& c : cells) {
                if (c == gap) {
                    c.clear();
                }
            }
            out += csv_line(cells);
        }
        return out;
    }
    TableWriter t(header);
    for (auto& cells : body) {
        t.add_row(cells);
    }
    return t.str();
}

std::string render_cost(const CostBreakdown& breakdown,
                        const std::vector<UnitCostResult>& unit_costs, Format fmt)
{
    if (fmt == Format::json) {
        nlohmann::json j{
            {"breakdown_usd",
             {{"generation", money_json(breakdown.generation)},
              {"validation", money_json(breakdown.validation)},
              {"impact", money_json(breakdown.impact)},
              {"remediation", money_json(breakdown.remediation)},
              {"triage", money_json(breakdown.triage)},
              {"total", money_json(total_cost(breakdown))}}},
        };
        nlohmann::json arr = nlohmann::json::array();
        for (const UnitCostResult& u : unit_costs) {
            arr.push_back(unit_cost_json(u));
        }
        j["unit_costs"] = arr;
        return json_dump(j);
    }
    std::vector<std::pair<std::string, std::string>> rows = {
        {"generation", format_dollars(breakdown.generation)},
        {"validation", format_dollars(breakdown.validation)},
        {"impact", format_dollars(breakdown.impact)},
        {"remediation", format_dollars(breakdown.remediation)},
        {"triage", format_dollars(breakdown.triage)},
        {"total", format_dollars(total_cost(breakdown))},
    };
    for (const UnitCostResult& u : unit_costs) {
        rows.push_back({std::string("cost_per_") + outcome_name(u.kind),
                        format_dollars(u.unit_cost_micro)});
    }
    if (fmt == Format::csv) {
        std::vector<std::string> header, values;
        for (auto& [k, v] : rows) {
            header.push_back(k);
            values.push_back(v);
        }
        return csv_line(header) + csv_line(values);
    }
    TableWriter t({"component", "cost"});
    for (auto& [k, v] : rows) {
        t.add_row({k, v});
    }
    return t.str();
}

std::string render_sensitivity(const Interval& lifted, const McSummary& mc, Format fmt)
{
    if (fmt == Format::json) {
        return json_dump(nlohmann::json{
            {"interval_usd", interval_json(lifted)},
            {"monte_carlo", mc_summary_json(mc)},
        });
    }
    std::vector<std::pair<std::string, std::string>> rows = {
        {"interval_lo", format_dollars(lifted.lo)},
        {"interval_hi", format_dollars(lifted.hi)},
        {"samples", std::to_string(mc.sample_count)},
        {"seed", std::to_string(mc.seed)},
        {"mean", sig6(mc.mean)},
        {"std_dev", sig6(mc.std_dev)},
        {"p05", sig6(mc.p05)},
        {"p50", sig6(mc.p50)},
        {"p95", sig6(mc.p95)},
        {"min", sig6(mc.min)},
        {"max", sig6(mc.max)},
    };
    if (fmt == Format::csv) {
        std::vector<std::string> header, values;
        for (auto& [k, v] : rows) {
            header.push_back(k);
            values.push_back(v);
        }
        return csv_line(header) + csv_line(values);
    }
    TableWriter t({"quantity", "value"});
    for (auto& [k, v] : rows) {
        t.add_row({k, v});
    }
    return t.str();
}

std::string render_sim(const SimResult& r, const BottleneckReport& b, Format fmt)
{
    if (fmt == Format::json) {
        nlohmann::json j = sim_result_json(r);
        nlohmann::json ranking = nlohmann::json::array();
        for (const BottleneckEntry& e : b.ranking) {
            ranking.push_back({
                {"stage", stage_name(e.stage)},
                {"backlog_growth_per_week", e.backlog_growth_per_week},
                {"utilization", e.utilization},
            });
        }
        j["bottleneck"] = {
            {"ranking", ranking},
            {"stage", b.bottleneck ? nlohmann::json(stage_name(*b.bottleneck))
                                   : nlohmann::json()},
            {"marginal_fixes_per_capacity_hour", b.marginal_fixes_per_capacity_hour},
        };
        return json_dump(j);
    }
    const char* names[] = {"validation", "impact", "remediation", "triage"};
    if (fmt == Format::csv) {
        std::string out = csv_line({"stage", "items_in", "items_out", "items_dropped",
                                    "end_backlog", "busy_hours", "utilization"});
        for (std::size_t i = 0; i < 4; ++i) {
            const StageStats& st = r.stages[i];
            out += csv_line({names[i], std::to_string(st.items_in),
                             std::to_string(st.items_out), std::to_string(st.items_dropped),
                             std::to_string(st.end_backlog), sig6(st.busy_hours),
                             sig6(st.utilization)});
        }
        return out;
    }
    TableWriter t({"stage", "in", "out", "dropped", "backlog", "busy_h", "util"});
    for (std::size_t i = 0; i < 4; ++i) {
        const StageStats& st = r.stages[i];
        t.add_row({names[i], std::to_string(st.items_in), std::to_string(st.items_out),
                   std::to_string(st.items_dropped), std::to_string(st.end_backlog),
                   sig6(st.busy_hours), sig6(st.utilization)});
    }
    std::ostringstream out;
    out << t.str();
    out << "arrivals: " << r.arrivals << '\n';
    out << "accepted fixes shipped: " << r.accepted_fixes_shipped << '\n';
    if (r.fixes_per_maintainer_hour) {
        out << "accepted fixes per maintainer-hour: " << sig6(*r.fixes_per_maintainer_hour)
            << '\n';
    }
    out << "total cost: " << format_dollars(total_cost(r.total_cost)) << '\n';
    if (b.bottleneck) {
        out << "bottleneck: " << stage_name(*b.bottleneck)
            << " (backlog growth " << sig6(b.ranking.front().backlog_growth_per_week)
            << "/week, +1 capacity-hour -> +" << b.marginal_fixes_per_capacity_hour
            << " fixes)\n";
    } else {
        out << "bottleneck: none\n";
    }
    return out.str();
}

std::string render_lint(const std::vector<LintFinding>& findings, Format fmt)
{
    if (fmt == Format::json) {
        return json_dump(lint_findings_json(findings));
    }
    if (fmt == Format::csv) {
        std::string out = csv_line({"severity", "field", "message"});
        for (const LintFinding& f : findings) {
            out += csv_line({f.severity == LintSeverity::fatal ? "fatal" : "warning",
                             f.field, f.message});
        }
        return out;
    }
    if (findings.empty()) {
        return "clean: no findings\n";
    }
    std::ostringstream out;
    for (const LintFinding& f : findings) {
        out << (f.severity == LintSeverity::fatal ? "fatal" : "warning") << "  "
            << f.field << ": " << f.message << '\n';
    }
    return out.str();
}

std::string render_checklist(const ChecklistResult& r, Format fmt)
{
    if (fmt == Format::json) {
        return json_dump(checklist_json(r));
    }
    if (fmt == Format::csv) {
        std::string out = csv_line({"artifact", "present"});
        for (const ChecklistItem& item : r.items) {
            out += csv_line({item.artifact, item.present ? "yes" : "no"});
        }
        return out;
    }
    std::ostringstream out;
    out << "ownership model: " << ownership_name(r.model) << '\n';
    for (const ChecklistItem& item : r.items) {
        out << (item.present ? "  [x] " : "  [ ] ") << item.artifact << '\n';
    }
    out << (r.passed ? "PASS" : "FAIL") << '\n';
    return out.str();
}

std::string render_anchors(Format fmt)
{
    MetricsSummary firefox = campaign_summary(fixture_report("firefox_opus46"));
    MetricsSummary mythos = campaign_summary(fixture_report("mythos_preview"));
    MetricsSummary exploit = campaign_summary(fixture_report("exploit_experiment"));
    CampaignReport ff150 = fixture_report("firefox_150");

    std::vector<std::pair<std::string, std::string>> rows;
    rows.push_back({"mythos_campaign_cost", "<$20,000"});
    rows.push_back({"mythos_campaign_runs", "1,000"});
    rows.push_back({"mythos_findings", "24-48"});
    {
        const Interval& iv = *mythos.cost_per_finding_interval;
        rows.push_back({"mythos_cost_per_finding",
                        format_dollars(iv.lo) + "-" + format_dollars(iv.hi)});
    }
    rows.push_back({"firefox_submitted_reports", "112"});
    rows.push_back({"firefox_accepted_vulnerabilities", "22"});
    rows.push_back({"firefox_high_severity", "14"});
    rows.push_back({"firefox_accepted_fraction", format_percent(*firefox.precision)});
    rows.push_back(
        {"firefox_high_severity_fraction", format_percent(*firefox.high_severity_fraction)});
    rows.push_back(
        {"reports_per_accepted", format_ratio(*firefox.reports_per_accepted)});
    rows.push_back({"reports_per_high_severity", format_ratio(*firefox.reports_per_high)});
    rows.push_back(
        {"firefox_150_accepted", std::to_string(*ff150.accepted_findings)});
    rows.push_back({"firefox_150_severity_split",
                    std::to_string(*ff150.severity->high) + " high, " +
                        std::to_string(*ff150.severity->moderate) + " moderate, " +
                        std::to_string(*ff150.severity->low) + " low"});
    rows.push_back({"firefox_april_total_fixes",
                    std::to_string(*ff150.total_fixes_all_sources)});
    rows.push_back({"exploit_experiment_cost_per_success",
                    format_dollars(exploit.cost_per_accepted->unit_cost_micro)});

    if (fmt == Format::json) {
        nlohmann::json j = nlohmann::json::object();
        for (auto& [k, v] : rows) {
            j[k] = v;
        }
        return json_dump(j);
    }
    if (fmt == Format::csv) {
        std::string out = csv_line({"quantity", "value"});
        for (auto& [k, v] : rows) {
            out += csv_line({k, v});
        }
        return out;
    }
    TableWriter t({"quantity", "value"});
    for (auto& [k, v] : rows) {
        t.add_row({k, v});
    }
    return t.str();
}

} // namespace bugonomics
