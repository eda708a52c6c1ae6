// Release gate: one line of output per criterion, nonzero exit if any
// fails. Pass the CLI binary path as argv[1] to include the end-to-end
// exit-code checks; without it they are skipped and reported as such.

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "bugonomics/campaign_io.hpp"
#include "bugonomics/cost_engine.hpp"
#include "bugonomics/metrics.hpp"
#include "bugonomics/render.hpp"
#include "bugonomics/report_lint.hpp"
#include "bugonomics/sensitivity.hpp"
#include "bugonomics/throughput_sim.hpp"

using namespace bugonomics;

namespace {

int failures = 0;
std::ostringstream detail;

void report(int number, const char* title, bool ok)
{
    std::cout << (ok ? "PASS" : "FAIL") << "  criterion " << number << ": " << title
              << '\n';
    if (!ok) {
        ++failures;
        std::string text = detail.str();
        if (!text.empty()) {
            std::cout << text;
        }
    }
    detail.str("");
}

bool expect(bool cond, const std::string& what)
{
    if (!cond) {
        detail << "    failed: " << what << '\n';
    }
    return cond;
}

bool near(double actual, double expected, double tol, const std::string& what)
{
    return expect(std::abs(actual - expected) <= tol,
                  what + " (got " + std::to_string(actual) + ", want " +
                      std::to_string(expected) + ")");
}

bool contains(const std::string& haystack, const std::string& needle)
{
    return expect(haystack.find(needle) != std::string::npos,
                  "output contains '" + needle + "'");
}

// ---- criterion 1: anchor table reproduces the published figures --------

bool criterion_anchor_table()
{
    bool ok = true;
    std::string table = render_anchors(Format::table);
    for (const char* needle :
         {"19.6%", "12.5%", "5.1", "8.0", "$417", "$833", "$2,000"}) {
        ok &= contains(table, needle);
    }

    MetricsSummary mythos = campaign_summary(fixture_report("mythos_preview"));
    ok &= expect(mythos.cost_per_finding_interval.has_value(),
                 "mythos per-finding interval present");
    if (mythos.cost_per_finding_interval) {
        ok &= near(mythos.cost_per_finding_interval->lo, 416.67, 0.01,
                   "mythos interval low");
        ok &= near(mythos.cost_per_finding_interval->hi, 833.33, 0.01,
                   "mythos interval high");
    }

    MetricsSummary exploit = campaign_summary(fixture_report("exploit_experiment"));
    ok &= expect(exploit.cost_per_accepted.has_value(), "exploit unit cost present");
    if (exploit.cost_per_accepted) {
        ok &= expect(exploit.cost_per_accepted->unit_cost_micro ==
                         Money::from_usd("2000").micro_rational(),
                     "exploit cost per success is exactly $2,000");
    }

    MetricsSummary firefox = campaign_summary(fixture_report("firefox_opus46"));
    ok &= expect(firefox.precision == Rational(22, 112), "precision 22/112");
    ok &= expect(firefox.high_severity_fraction == Rational(14, 112),
                 "high fraction 14/112");
    ok &= expect(firefox.reports_per_accepted == Rational(112, 22),
                 "reports per accepted 112/22");
    ok &= expect(firefox.reports_per_high == Rational(112, 14),
                 "reports per high 112/14");
    return ok;
}

// ---- criterion 2: uncertainty bands ------------------------------------

bool criterion_bands()
{
    bool ok = true;
    Interval band = interval_mul(
        interval_mul(Interval::point(112, Unit::count),
                     Interval::make(0.5, 2, Unit::hours)),
        Interval::make(100, 250, Unit::rate));
    ok &= expect(band.lo == 5600.0 && band.hi == 56000.0,
                 "validation band is exactly [5600, 56000]");

    Interval per22 = interval_div(band, Interval::point(22, Unit::count));
    ok &= near(per22.lo, 254.55, 0.01, "band/22 low");
    ok &= near(per22.hi, 2545.45, 0.01, "band/22 high");
    ok &= expect(format_dollars(per22.lo) == "$255" &&
                     format_dollars(per22.hi) == "$2,545",
                 "band/22 displays $255-$2,545");

    Interval per14 = interval_div(band, Interval::point(14, Unit::count));
    ok &= expect(per14.lo == 400.0 && per14.hi == 4000.0,
                 "band/14 is exactly [400, 4000]");

    Interval gen = Interval::make(5000, 20000, Unit::money);
    Interval gen22 = interval_div(gen, Interval::point(22, Unit::count));
    ok &= expect(format_dollars(gen22.lo) == "$227" &&
                     format_dollars(gen22.hi) == "$909",
                 "generation/22 displays $227-$909");
    Interval gen14 = interval_div(gen, Interval::point(14, Unit::count));
    ok &= expect(format_dollars(gen14.lo) == "$357" &&
                     format_dollars(gen14.hi) == "$1,429",
                 "generation/14 displays $357-$1,429");
    return ok;
}

// ---- criterion 3: complete-split fixture consistency --------------------

bool criterion_complete_split()
{
    bool ok = true;
    CampaignReport r = fixture_report("firefox_150");
    ok &= expect(r.accepted_findings == 271, "accepted count 271");
    ok &= expect(r.severity.has_value(), "severity split present");
    if (r.severity) {
        std::int64_t sum = r.severity->high.value_or(0) +
                           r.severity->moderate.value_or(0) +
                           r.severity->low.value_or(0);
        ok &= expect(sum == 271, "severity buckets sum to 271");
        ok &= expect(r.severity->exhaustive, "split declared exhaustive");
    }
    ok &= expect(!has_fatal(validate_campaign_report(r)), "lint has zero fatals");
    ok &= expect(r.total_fixes_all_sources == 423, "all-source fix total stored");
    ok &= contains(campaign_to_json(r).dump(), "423");
    return ok;
}

// ---- criterion 4: cost-engine identities --------------------------------

bool criterion_cost_identities()
{
    bool ok = true;
    std::mt19937_64 rng(2024);
    auto money = [&] {
        return Money::from_micro(static_cast<std::int64_t>(rng() % 100'000'000'000ULL));
    };
    auto frac = [&] {
        std::int64_t den = 1 + static_cast<std::int64_t>(rng() % 200);
        return Rational(1 + static_cast<std::int64_t>(rng() % den), den);
    };
    for (int i = 0; i < 1000 && ok; ++i) {
        Money c_g = money();
        Money c_v = money();
        std::int64_t n_c = 1 + static_cast<std::int64_t>(rng() % 1000);
        Rational pi_s = frac();

        auto validated = cost_per_validated_finding(c_g, c_v, n_c, pi_s);
        auto accepted = cost_per_accepted(c_g, c_v, Money{}, Money{}, n_c, pi_s);
        ok &= expect(accepted.unit_cost_micro == validated.unit_cost_micro,
                     "accepted==validated when packaging and triage are free");

        auto impact = cost_per_impact_backed(c_g, c_v, Money{}, n_c, pi_s,
                                             Rational::from_int(1));
        ok &= expect(impact.unit_cost_micro == validated.unit_cost_micro,
                     "impact==validated when pi_e=1 and impact work is free");

        StageEffort e{Stage::validation,
                      Rational(static_cast<std::int64_t>(rng() % 8000), 1000),
                      HourlyRate{Money::from_dollars(
                          static_cast<std::int64_t>(rng() % 500))}};
        std::int64_t a = static_cast<std::int64_t>(rng() % 10'000);
        std::int64_t b = static_cast<std::int64_t>(rng() % 10'000);
        ok &= expect(stage_cost(a + b, e) == stage_cost(a, e) + stage_cost(b, e),
                     "stage cost linearity");

        if (c_g + c_v > Money{}) {
            auto worse = cost_per_validated_finding(c_g, c_v, n_c,
                                                    pi_s * Rational(1, 2));
            ok &= expect(validated.unit_cost_micro < worse.unit_cost_micro,
                         "unit cost decreases as precision rises");
        }
    }
    return ok;
}

// ---- criterion 5: sensitivity properties --------------------------------

bool criterion_sensitivity()
{
    bool ok = true;
    std::vector<UncertainParam> params = {
        UncertainParam::point_value("item_count", 112, Unit::count),
        UncertainParam::uniform("hours_per_item", 0.5, 2, Unit::hours),
        UncertainParam::uniform("rate", 100, 250, Unit::rate),
    };
    McSummary s = monte_carlo(FormulaKind::stage_cost, params, 100'000, 424242);
    ok &= expect(std::abs(s.mean - 24500.0) / 24500.0 < 0.01,
                 "Monte Carlo mean within 1% of 24,500 (got " +
                     std::to_string(s.mean) + ")");

    std::map<std::string, Interval> ivs;
    for (const auto& p : params) {
        ivs[p.name] = p.interval;
    }
    Interval lifted = lift_cost_model(FormulaKind::stage_cost, ivs);
    ok &= expect(s.min >= lifted.lo && s.max <= lifted.hi,
                 "all samples inside the lifted interval");

    McSummary again = monte_carlo(FormulaKind::stage_cost, params, 100'000, 424242);
    ok &= expect(mc_summary_json(s) == mc_summary_json(again),
                 "rerun is byte-identical");
    std::vector<UncertainParam> reordered = {params[2], params[0], params[1]};
    McSummary shuffled =
        monte_carlo(FormulaKind::stage_cost, reordered, 100'000, 424242);
    ok &= expect(mc_summary_json(s) == mc_summary_json(shuffled),
                 "result independent of parameter order");
    return ok;
}

// ---- criterion 6: simulator properties ----------------------------------

PipelineConfig random_sim_config(std::mt19937_64& rng)
{
    PipelineConfig c;
    c.horizon_weeks = 1 + static_cast<std::int64_t>(rng() % 10);
    c.arrival_kind = (rng() % 2) ? ArrivalKind::poisson : ArrivalKind::deterministic;
    c.arrival_rate_per_week = static_cast<double>(rng() % 15);
    c.pi_s = static_cast<double>(rng() % 101) / 100.0;
    c.pi_e = static_cast<double>(rng() % 101) / 100.0;
    c.discipline =
        (rng() % 2) ? QueueDiscipline::severity_priority : QueueDiscipline::fifo;
    c.severity_probs = {0.25, 0.35, 0.4};
    for (auto& s : c.stages) {
        s.service = ServiceSpec::fixed(
            Rational(static_cast<std::int64_t>(rng() % 3000), 1000));
        if (rng() % 2) {
            s.weekly_capacity_hours = static_cast<double>(rng() % 25);
        }
    }
    return c;
}

bool criterion_simulator()
{
    bool ok = true;
    std::mt19937_64 rng(606);
    for (int i = 0; i < 100 && ok; ++i) {
        PipelineConfig c = random_sim_config(rng);
        for (int s = 0; s < 10 && ok; ++s) {
            c.seed = rng();
            SimResult r = simulate(c);
            std::int64_t upstream = r.arrivals;
            for (const auto& st : r.stages) {
                ok &= expect(st.items_in == upstream &&
                                 st.items_in == st.items_out + st.items_dropped +
                                                    st.end_backlog,
                             "flow conservation");
                upstream = st.items_out;
            }
        }
    }

    PipelineConfig det;
    det.horizon_weeks = 10;
    det.arrival_rate_per_week = 10;
    for (auto& s : det.stages) {
        s.service = ServiceSpec::fixed(Rational(0, 1));
    }
    det.stages[0].service = ServiceSpec::fixed(Rational::from_int(1));
    det.stages[0].weekly_capacity_hours = 5;
    SimResult r = simulate(det);
    ok &= expect(r.stages[0].end_backlog == 50, "capacity case backlog 50");
    ok &= expect(r.stages[0].items_out == 50, "capacity case throughput 5/week");

    PipelineConfig thin = det;
    thin.horizon_weeks = 2;
    thin.arrival_kind = ArrivalKind::poisson;
    thin.arrival_rate_per_week = 56;
    thin.pi_s = 22.0 / 112.0;
    thin.stages[0].service = ServiceSpec::fixed(Rational(0, 1));
    thin.stages[0].weekly_capacity_hours.reset();
    double total = 0;
    for (std::uint64_t seed = 0; seed < 1000; ++seed) {
        thin.seed = seed;
        total += static_cast<double>(simulate(thin).accepted_fixes_shipped);
    }
    ok &= expect(std::abs(total / 1000.0 - 22.0) / 22.0 < 0.05,
                 "thinned Poisson mean within 5% of 22 (got " +
                     std::to_string(total / 1000.0) + ")");

    for (int i = 0; i < 100 && ok; ++i) {
        PipelineConfig c = random_sim_config(rng);
        c.seed = rng();
        SimResult before = simulate(c);
        PipelineConfig more = c;
        std::size_t which = rng() % 4;
        if (more.stages[which].weekly_capacity_hours) {
            *more.stages[which].weekly_capacity_hours +=
                static_cast<double>(1 + rng() % 8);
        } else {
            more.stages[which].weekly_capacity_hours.reset();
        }
        ok &= expect(simulate(more).accepted_fixes_shipped >=
                         before.accepted_fixes_shipped,
                     "added capacity never lowers shipped fixes");
    }

    PipelineConfig costed = det;
    costed.generation_cost_per_item = Money::from_usd("1.50");
    Rational hours[4] = {Rational(1, 2), Rational::from_int(1), Rational(3, 4),
                         Rational(1, 4)};
    for (int i = 0; i < 4; ++i) {
        costed.stages[i].service = ServiceSpec::fixed(hours[i]);
        costed.stages[i].hourly_rate = Money::from_usd("120");
    }
    costed.stages[0].weekly_capacity_hours = 8;
    SimResult cr = simulate(costed);
    Stage order[4] = {Stage::validation, Stage::impact, Stage::remediation,
                      Stage::triage};
    Money tallies[4] = {cr.total_cost.validation, cr.total_cost.impact,
                        cr.total_cost.remediation, cr.total_cost.triage};
    for (int i = 0; i < 4; ++i) {
        StageEffort e{order[i], hours[i], HourlyRate{costed.stages[i].hourly_rate}};
        std::int64_t served = cr.stages[i].items_out + cr.stages[i].items_dropped;
        ok &= expect(tallies[i] == stage_cost(served, e),
                     "sim cost equals scalar stage cost exactly");
    }
    return ok;
}

// ---- criterion 7: lint and checklists -----------------------------------

CampaignReport complete_report()
{
    CampaignReport r;
    r.schema_version = "1";
    r.campaign_id = "complete";
    r.raw_candidates = 500;
    r.deduplicated_candidates = 200;
    r.submitted_reports = 112;
    r.accepted_findings = 22;
    r.severity = SeveritySplit{};
    r.severity->high = 14;
    r.exploitable_count = 2;
    r.grounding_evidence = GroundingEvidence{};
    r.validation_hours = Rational::from_int(56);
    r.impact_hours = Rational::from_int(20);
    r.maintainer_review_hours = Rational::from_int(30);
    r.patch_status = PatchStatus{20, 18, 2};
    r.time_to_first_useful_finding_hours = Rational::from_int(6);
    r.run_count = 1000;
    r.failed_run_cost = Money::from_usd("800");
    r.scaffold_effort_hours = Rational::from_int(40);
    r.total_expenditure = Expenditure{Money::from_usd("20000"), std::nullopt, false};
    return r;
}

bool criterion_lint()
{
    bool ok = true;
    ok &= expect(validate_campaign_report(complete_report()).empty(),
                 "complete report lints clean");

    CampaignReport parsed = parse_campaign(
        campaign_to_json(complete_report()).dump(), "acceptance");
    for (const std::string& field : minimum_report_fields()) {
        nlohmann::json doc = campaign_to_json(parsed);
        doc.erase(field);
        CampaignReport partial = parse_campaign(doc.dump(), "acceptance");
        auto findings = validate_campaign_report(partial);
        ok &= expect(findings.size() == 1 && findings[0].field == field &&
                         findings[0].severity == LintSeverity::warning,
                     "omitting '" + field + "' yields exactly one warning");
    }

    CampaignReport inverted = complete_report();
    inverted.submitted_reports = 10;
    ok &= expect(has_fatal(validate_campaign_report(inverted)),
                 "funnel inversion is fatal");

    std::mt19937_64 rng(717);
    const auto& known = known_review_artifacts();
    for (OwnershipModel m :
         {OwnershipModel::human_owned, OwnershipModel::human_driven_llm,
          OwnershipModel::llm_owned}) {
        const auto& required = default_review_policy().at(m);
        ReviewPackage pkg;
        pkg.model = m;
        pkg.artifacts = {required.begin(), required.end()};
        ok &= expect(check_review_package(pkg).passed,
                     std::string("complete ") + ownership_name(m) + " package passes");
        ReviewPackage partial = pkg;
        partial.artifacts.erase(required[rng() % required.size()]);
        ok &= expect(!check_review_package(partial).passed,
                     "missing required artifact fails the checklist");

        // Flag-addition monotonicity over random packages.
        for (int i = 0; i < 100 && ok; ++i) {
            ReviewPackage random_pkg;
            random_pkg.model = m;
            for (const auto& a : known) {
                if (rng() % 2) {
                    random_pkg.artifacts.insert(a);
                }
            }
            bool before = check_review_package(random_pkg).passed;
            random_pkg.artifacts.insert(known[rng() % known.size()]);
            bool after = check_review_package(random_pkg).passed;
            ok &= expect(!before || after, "adding an artifact never fails a package");
        }
    }
    return ok;
}

// ---- criterion 8: round trip and exit codes -----------------------------

CampaignReport random_report(std::mt19937_64& rng)
{
    CampaignReport r;
    r.schema_version = "1";
    r.campaign_id = "c" + std::to_string(rng());
    auto maybe = [&] { return rng() % 2 == 0; };
    if (maybe()) r.raw_candidates = static_cast<std::int64_t>(rng() % 1000);
    if (maybe()) r.submitted_reports = static_cast<std::int64_t>(rng() % 500);
    if (maybe()) r.accepted_findings = static_cast<std::int64_t>(rng() % 100);
    if (maybe()) {
        double lo = static_cast<double>(rng() % 40);
        r.findings_estimate =
            Interval::make(lo, lo + static_cast<double>(rng() % 40), Unit::count);
    }
    if (maybe()) {
        SeveritySplit s;
        s.high = static_cast<std::int64_t>(rng() % 50);
        r.severity = s;
    }
    if (maybe()) r.grounding_evidence = GroundingEvidence{maybe(), maybe(), maybe(), maybe(), maybe()};
    if (maybe()) r.validation_hours = Rational(static_cast<std::int64_t>(rng() % 10000), 1 + rng() % 100);
    if (maybe()) r.maintainer_review_hours = Rational(static_cast<std::int64_t>(rng() % 10000), 1 + rng() % 100);
    if (maybe()) r.patch_status = PatchStatus{static_cast<std::int64_t>(rng() % 40), 0, 0};
    if (maybe()) r.run_count = static_cast<std::int64_t>(rng() % 100000);
    if (maybe()) {
        r.failed_run_cost =
            Money::from_micro(static_cast<std::int64_t>(rng() % 1'000'000'000'000ULL));
    }
    if (maybe()) {
        Expenditure e;
        e.point = Money::from_micro(static_cast<std::int64_t>(rng() % 1'000'000'000'000ULL));
        r.total_expenditure = e;
    }
    if (maybe()) r.declared_precision = static_cast<double>(rng() % 1000) / 1000.0;
    return r;
}

int run_cli(const std::string& cli, const std::string& args)
{
    std::string cmd = cli + " " + args + " >/dev/null 2>&1";
    int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

bool criterion_io(const std::string& cli)
{
    bool ok = true;
    std::mt19937_64 rng(808);
    for (int i = 0; i < 1000 && ok; ++i) {
        CampaignReport r = random_report(rng);
        nlohmann::json doc = campaign_to_json(r);
        CampaignReport back = parse_campaign(doc.dump(), "acceptance");
        ok &= expect(campaign_to_json(back) == doc, "round-trip identity");
    }

    if (cli.empty()) {
        detail << "    failed: CLI path not supplied (argv[1])\n";
        return false;
    }

    namespace fs = std::filesystem;
    fs::path dir = fs::temp_directory_path() / "bugonomics_acceptance";
    fs::create_directories(dir);
    fs::path inverted = dir / "inverted.json";
    std::ofstream(inverted)
        << R"({"schema_version": "1", "campaign_id": "x",
              "submitted_reports": 10, "accepted_findings": 22})";
    fs::path broken = dir / "broken.json";
    std::ofstream(broken) << "{not json";
    fs::path bad_counts = dir / "bad_counts.json";
    std::ofstream(bad_counts)
        << R"({"counts": {"submitted": 10, "accepted": 22},
              "efforts": {"validation": {"hours_per_item": "1", "rate": "100"}}})";

    ok &= expect(run_cli(cli, "anchors") == 0, "anchors exits 0");
    ok &= expect(run_cli(cli, "lint firefox_opus46") == 0, "clean lint exits 0");
    ok &= expect(run_cli(cli, "lint " + inverted.string()) == 1,
                 "fatal lint exits 1");
    ok &= expect(run_cli(cli, "metrics " + (dir / "missing.json").string()) == 2,
                 "missing file exits 2");
    ok &= expect(run_cli(cli, "lint " + broken.string()) == 2,
                 "malformed JSON exits 2");
    ok &= expect(run_cli(cli, "cost " + bad_counts.string()) == 3,
                 "impossible counts exit 3");
    return ok;
}

} // namespace

int main(int argc, char** argv)
{
    std::string cli = argc > 1 ? argv[1] : "";

    report(1, "anchor table reproduction", criterion_anchor_table());
    report(2, "uncertainty bands", criterion_bands());
    report(3, "complete-split fixture consistency", criterion_complete_split());
    report(4, "cost-engine identities", criterion_cost_identities());
    report(5, "sensitivity determinism and containment", criterion_sensitivity());
    report(6, "simulator conservation and throughput", criterion_simulator());
    report(7, "disclosure lint and review checklists", criterion_lint());
    report(8, "serialization round trip and exit codes", criterion_io(cli));

    if (failures > 0) {
        std::cout << failures << " criterion(s) failed\n";
        return 1;
    }
    std::cout << "all criteria passed\n";
    return 0;
}
