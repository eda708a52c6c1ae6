#include "bugonomics/campaign_io.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

namespace bugonomics {

using nlohmann::json;

// ---- generic helpers ----------------------------------------------------

std::string read_file(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw io_error("cannot read file: " + path.string());
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

namespace {

// Translate a byte offset into line:column for parse diagnostics.
std::pair<std::size_t, std::size_t> line_col(std::string_view text, std::size_t byte)
{
    std::size_t line = 1;
    std::size_t col = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return {line, col};
}

[[noreturn]] void fail_parse(std::string_view origin, const std::string& what)
{
    throw parse_error(std::string(origin) + ": " + what);
}

std::int64_t get_int(const json& v, const std::string& key, std::string_view origin)
{
    if (!v.is_number_integer()) {
        fail_parse(origin, "field '" + key + "' must be an integer");
    }
    return v.get<std::int64_t>();
}

double get_number(const json& v, const std::string& key, std::string_view origin)
{
    if (!v.is_number()) {
        fail_parse(origin, "field '" + key + "' must be a number");
    }
    return v.get<double>();
}

Money get_money(const json& v, const std::string& key, std::string_view origin)
{
    try {
        if (v.is_string()) {
            return Money::from_usd(v.get<std::string>());
        }
        if (v.is_number_integer()) {
            return Money::from_dollars(v.get<std::int64_t>());
        }
    } catch (const std::exception& e) {
        fail_parse(origin, "field '" + key + "': " + e.what());
    }
    fail_parse(origin, "field '" + key +
                           "' must be a decimal string or integer dollar amount");
}

Rational get_hours(const json& v, const std::string& key, std::string_view origin)
{
    try {
        if (v.is_string()) {
            return rational_from_decimal(v.get<std::string>());
        }
        if (v.is_number_integer()) {
            return Rational::from_int(v.get<std::int64_t>());
        }
        if (v.is_object() && v.contains("num") && v.contains("den")) {
            return Rational(v.at("num").get<std::int64_t>(),
                            v.at("den").get<std::int64_t>());
        }
        if (v.is_number_float()) {
            // Snapped to micro-hours so the stored value is exact.
            double micro = v.get<double>() * 1e6;
            return Rational(static_cast<std::int64_t>(std::llround(micro)), 1'000'000);
        }
    } catch (const std::exception& e) {
        fail_parse(origin, "field '" + key + "': " + e.what());
    }
    fail_parse(origin, "field '" + key + "' must be a decimal amount of hours");
}

Interval get_interval(const json& v, const std::string& key, Unit unit,
                      std::string_view origin)
{
    if (!v.is_object() || !v.contains("lo") || !v.contains("hi")) {
        fail_parse(origin, "field '" + key + "' must be an object with lo and hi");
    }
    try {
        return Interval::make(get_number(v.at("lo"), key + ".lo", origin),
                              get_number(v.at("hi"), key + ".hi", origin), unit);
    } catch (const domain_error& e) {
        fail_parse(origin, "field '" + key + "': " + e.what());
    }
}

json interval_to_json(const Interval& iv)
{
    return json{{"lo", iv.lo}, {"hi", iv.hi}};
}

json hours_to_json(const Rational& r)
{
    if (auto dec = rational_to_decimal(r)) {
        return *dec;
    }
    return json{{"num", r.num()}, {"den", r.den()}};
}

} // namespace

json parse_json(std::string_view text, std::string_view origin)
{
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        auto [line, col] = line_col(text, e.byte > 0 ? e.byte - 1 : 0);
        throw parse_error(std::string(origin) + ":" + std::to_string(line) + ":" +
                          std::to_string(col) + ": " + e.what());
    }
}

// ---- campaign documents -------------------------------------------------

CampaignReport parse_campaign(std::string_view text, std::string_view origin)
{
    json doc = parse_json(text, origin);
    if (!doc.is_object()) {
        fail_parse(origin, "campaign document must be a JSON object");
    }
    if (!doc.contains("schema_version")) {
        fail_parse(origin, "missing schema_version");
    }
    std::string version = doc.at("schema_version").is_string()
                              ? doc.at("schema_version").get<std::string>()
                              : doc.at("schema_version").dump();
    if (version != campaign_schema_version) {
        fail_parse(origin, "unsupported schema_version '" + version + "'");
    }

    CampaignReport r;
    r.schema_version = version;
    std::set<std::string> seen = {"schema_version"};
    auto take = [&](const char* key) -> const json* {
        seen.insert(key);
        auto it = doc.find(key);
        return it == doc.end() || it->is_null() ? nullptr : &*it;
    };

    if (const json* v = take("campaign_id")) {
        if (!v->is_string()) {
            fail_parse(origin, "campaign_id must be a string");
        }
        r.campaign_id = v->get<std::string>();
    }

    auto take_int = [&](const char* key, std::optional<std::int64_t>& out) {
        if (const json* v = take(key)) {
            std::int64_t n = get_int(*v, key, origin);
            if (n < 0) {
                fail_parse(origin, std::string("field '") + key + "' is negative");
            }
            out = n;
        }
    };
    auto take_hours = [&](const char* key, std::optional<Rational>& out) {
        if (const json* v = take(key)) {
            Rational h = get_hours(*v, key, origin);
            if (h.is_negative()) {
                fail_parse(origin, std::string("field '") + key + "' is negative");
            }
            out = h;
        }
    };

    take_int("raw_candidates", r.raw_candidates);
    take_int("deduplicated_candidates", r.deduplicated_candidates);
    take_int("submitted_reports", r.submitted_reports);
    take_int("accepted_findings", r.accepted_findings);
    take_int("exploitable_count", r.exploitable_count);
    take_int("run_count", r.run_count);
    take_int("files_scanned", r.files_scanned);
    take_int("total_fixes_all_sources", r.total_fixes_all_sources);

    if (const json* v = take("findings_estimate")) {
        r.findings_estimate = get_interval(*v, "findings_estimate", Unit::count, origin);
    }

    if (const json* v = take("severity")) {
        if (!v->is_object()) {
            fail_parse(origin, "severity must be an object");
        }
        SeveritySplit s;
        for (auto& [key, val] : v->items()) {
            if (key == "high") s.high = get_int(val, "severity.high", origin);
            else if (key == "moderate") s.moderate = get_int(val, "severity.moderate", origin);
            else if (key == "low") s.low = get_int(val, "severity.low", origin);
            else if (key == "exhaustive") s.exhaustive = val.get<bool>();
            else fail_parse(origin, "unknown severity bucket '" + key + "'");
        }
        r.severity = s;
    }

    if (const json* v = take("grounding_evidence")) {
        if (!v->is_object()) {
            fail_parse(origin, "grounding_evidence must be an object");
        }
        GroundingEvidence g;
        g.reproducer = v->value("reproducer", false);
        g.trace = v->value("trace", false);
        g.path_constraints = v->value("path_constraints", false);
        g.attacker_control = v->value("attacker_control", false);
        g.affected_configs = v->value("affected_configs", false);
        r.grounding_evidence = g;
    }

    take_hours("validation_hours", r.validation_hours);
    take_hours("impact_hours", r.impact_hours);
    take_hours("maintainer_review_hours", r.maintainer_review_hours);
    take_hours("time_to_first_useful_finding_hours", r.time_to_first_useful_finding_hours);
    take_hours("scaffold_effort_hours", r.scaffold_effort_hours);

    if (const json* v = take("patch_status")) {
        if (!v->is_object()) {
            fail_parse(origin, "patch_status must be an object");
        }
        PatchStatus p;
        p.patched = v->contains("patched") ? get_int(v->at("patched"), "patched", origin) : 0;
        p.tested = v->contains("tested") ? get_int(v->at("tested"), "tested", origin) : 0;
        p.pending = v->contains("pending") ? get_int(v->at("pending"), "pending", origin) : 0;
        r.patch_status = p;
    }

    if (const json* v = take("failed_run_cost")) {
        r.failed_run_cost = get_money(*v, "failed_run_cost", origin);
    }

    if (const json* v = take("total_expenditure")) {
        Expenditure e;
        if (v->is_object() && v->contains("lo")) {
            e.range = get_interval(*v, "total_expenditure", Unit::money, origin);
            e.upper_bound_only = v->value("upper_bound_only", false);
        } else {
            e.point = get_money(*v, "total_expenditure", origin);
        }
        r.total_expenditure = e;
    }

    if (const json* v = take("declared_precision")) {
        r.declared_precision = get_number(*v, "declared_precision", origin);
    }

    for (auto& [key, val] : doc.items()) {
        (void)val;
        if (!seen.count(key)) {
            r.unknown_fields.push_back(key);
        }
    }

    try {
        r.check_funnel();
    } catch (const domain_error&) {
        // Inverted counts are a lint finding, not a parse failure; the
        // linter reports them as fatal.
    }
    return r;
}

CampaignReport load_campaign(const std::filesystem::path& path)
{
    return parse_campaign(read_file(path), path.string());
}

json campaign_to_json(const CampaignReport& r)
{
    json doc;
    doc["schema_version"] = r.schema_version;
    doc["campaign_id"] = r.campaign_id;

    auto put_int = [&](const char* key, const std::optional<std::int64_t>& v) {
        if (v) doc[key] = *v;
    };
    auto put_hours = [&](const char* key, const std::optional<Rational>& v) {
        if (v) doc[key] = hours_to_json(*v);
    };

    put_int("raw_candidates", r.raw_candidates);
    put_int("deduplicated_candidates", r.deduplicated_candidates);
    put_int("submitted_reports", r.submitted_reports);
    put_int("accepted_findings", r.accepted_findings);
    if (r.findings_estimate) {
        doc["findings_estimate"] = interval_to_json(*r.findings_estimate);
    }
    if (r.severity) {
        json s = json::object();
        if (r.severity->high) s["high"] = *r.severity->high;
        if (r.severity->moderate) s["moderate"] = *r.severity->moderate;
        if (r.severity->low) s["low"] = *r.severity->low;
        if (r.severity->exhaustive) s["exhaustive"] = true;
        doc["severity"] = s;
    }
    put_int("exploitable_count", r.exploitable_count);
    if (r.grounding_evidence) {
        const GroundingEvidence& g = *r.grounding_evidence;
        doc["grounding_evidence"] = {
            {"reproducer", g.reproducer},
            {"trace", g.trace},
            {"path_constraints", g.path_constraints},
            {"attacker_control", g.attacker_control},
            {"affected_configs", g.affected_configs},
        };
    }
    put_hours("validation_hours", r.validation_hours);
    put_hours("impact_hours", r.impact_hours);
    put_hours("maintainer_review_hours", r.maintainer_review_hours);
    if (r.patch_status) {
        doc["patch_status"] = {
            {"patched", r.patch_status->patched},
            {"tested", r.patch_status->tested},
            {"pending", r.patch_status->pending},
        };
    }
    put_hours("time_to_first_useful_finding_hours", r.time_to_first_useful_finding_hours);
    put_int("run_count", r.run_count);
    if (r.failed_run_cost) {
        doc["failed_run_cost"] = r.failed_run_cost->to_decimal_string();
    }
    put_hours("scaffold_effort_hours", r.scaffold_effort_hours);
    if (r.total_expenditure) {
        const Expenditure& e = *r.total_expenditure;
        if (e.range) {
            json v = interval_to_json(*e.range);
            if (e.upper_bound_only) {
                v["upper_bound_only"] = true;
            }
            doc["total_expenditure"] = v;
        } else if (e.point) {
            doc["total_expenditure"] = e.point->to_decimal_string();
        }
    }
    if (r.declared_precision) {
        doc["declared_precision"] = *r.declared_precision;
    }
    put_int("files_scanned", r.files_scanned);
    put_int("total_fixes_all_sources", r.total_fixes_all_sources);
    return doc;
}

CampaignReport load_campaign_or_fixture(const std::string& arg)
{
    if (std::filesystem::exists(arg)) {
        return load_campaign(arg);
    }
    if (is_fixture(arg)) {
        return fixture_report(arg);
    }
    throw io_error("no such file or built-in campaign: '" + arg + "'");
}

// ---- simulator scenarios ------------------------------------------------

namespace {

ServiceSpec parse_service(const json& v, const std::string& key, std::string_view origin)
{
    if (v.is_object() && v.contains("lo")) {
        ServiceSpec s;
        s.stochastic = true;
        s.interval = get_interval(v, key, Unit::hours, origin);
        std::string dist = v.value("dist", "uniform");
        if (dist == "uniform") {
            s.dist = Distribution::uniform;
        } else if (dist == "triangular") {
            s.dist = Distribution::triangular;
            if (!v.contains("mode")) {
                fail_parse(origin, "triangular service in '" + key + "' needs a mode");
            }
            s.mode = get_number(v.at("mode"), key + ".mode", origin);
        } else if (dist == "point") {
            s.dist = Distribution::point;
        } else {
            fail_parse(origin, "unknown distribution '" + dist + "' in '" + key + "'");
        }
        return s;
    }
    return ServiceSpec::fixed(get_hours(v, key, origin));
}

} // namespace

PipelineConfig parse_scenario(std::string_view text, std::string_view origin)
{
    json doc = parse_json(text, origin);
    if (!doc.is_object()) {
        fail_parse(origin, "scenario must be a JSON object");
    }
    PipelineConfig cfg;
    if (!doc.contains("horizon_weeks")) {
        fail_parse(origin, "missing horizon_weeks");
    }
    cfg.horizon_weeks = get_int(doc.at("horizon_weeks"), "horizon_weeks", origin);
    cfg.seed = doc.value("seed", std::uint64_t{0});

    if (!doc.contains("arrivals")) {
        fail_parse(origin, "missing arrivals");
    }
    const json& arr = doc.at("arrivals");
    std::string kind = arr.value("kind", "deterministic");
    if (kind == "deterministic") {
        cfg.arrival_kind = ArrivalKind::deterministic;
    } else if (kind == "poisson") {
        cfg.arrival_kind = ArrivalKind::poisson;
    } else {
        fail_parse(origin, "unknown arrival kind '" + kind + "'");
    }
    cfg.arrival_rate_per_week =
        get_number(arr.at("rate_per_week"), "arrivals.rate_per_week", origin);

    if (doc.contains("acceptance")) {
        const json& acc = doc.at("acceptance");
        cfg.pi_s = acc.value("pi_s", 1.0);
        cfg.pi_e = acc.value("pi_e", 1.0);
    }

    std::string disc = doc.value("queue_discipline", "fifo");
    if (disc == "fifo") {
        cfg.discipline = QueueDiscipline::fifo;
    } else if (disc == "severity_priority") {
        cfg.discipline = QueueDiscipline::severity_priority;
    } else {
        fail_parse(origin, "unknown queue discipline '" + disc + "'");
    }
    if (doc.contains("severity_probs")) {
        const json& p = doc.at("severity_probs");
        cfg.severity_probs = {p.value("high", 0.0), p.value("moderate", 0.0),
                              p.value("low", 0.0)};
    }

    if (!doc.contains("stages")) {
        fail_parse(origin, "missing stages");
    }
    const json& stages = doc.at("stages");
    const char* names[] = {"validation", "impact", "remediation", "triage"};
    for (std::size_t i = 0; i < 4; ++i) {
        if (!stages.contains(names[i])) {
            fail_parse(origin, std::string("missing stage '") + names[i] + "'");
        }
        const json& sj = stages.at(names[i]);
        StageConfig sc;
        if (sj.contains("service_hours")) {
            sc.service = parse_service(sj.at("service_hours"),
                                       std::string(names[i]) + ".service_hours", origin);
        }
        if (sj.contains("weekly_capacity_hours") &&
            !(sj.at("weekly_capacity_hours").is_string() &&
              sj.at("weekly_capacity_hours").get<std::string>() == "unbounded")) {
            sc.weekly_capacity_hours = get_number(
                sj.at("weekly_capacity_hours"),
                std::string(names[i]) + ".weekly_capacity_hours", origin);
        }
        if (sj.contains("hourly_rate")) {
            sc.hourly_rate = get_money(sj.at("hourly_rate"),
                                       std::string(names[i]) + ".hourly_rate", origin);
        }
        cfg.stages[i] = sc;
    }

    if (doc.contains("generation_cost_per_item")) {
        cfg.generation_cost_per_item =
            get_money(doc.at("generation_cost_per_item"), "generation_cost_per_item",
                      origin);
    }
    cfg.validate();
    return cfg;
}

PipelineConfig load_scenario(const std::filesystem::path& path)
{
    return parse_scenario(read_file(path), path.string());
}

// ---- sensitivity specs --------------------------------------------------

SensitivitySpec parse_sensitivity_spec(std::string_view text, std::string_view origin)
{
    json doc = parse_json(text, origin);
    if (!doc.is_object() || !doc.contains("target") || !doc.contains("params")) {
        fail_parse(origin, "sensitivity spec needs 'target' and 'params'");
    }
    SensitivitySpec spec;
    spec.target = formula_from_string(doc.at("target").get<std::string>());
    spec.samples = doc.value("samples", default_mc_samples);
    spec.seed = doc.value("seed", std::uint64_t{0});

    const json& params = doc.at("params");
    if (!params.is_object()) {
        fail_parse(origin, "'params' must be an object");
    }
    for (auto& [name, v] : params.items()) {
        Unit unit = formula_param_unit(spec.target, name);
        UncertainParam p;
        p.name = name;
        if (v.is_number()) {
            p.dist = Distribution::point;
            p.interval = Interval::point(get_number(v, name, origin), unit);
            p.mode = p.interval.lo;
        } else if (v.is_object()) {
            p.interval = get_interval(v, name, unit, origin);
            std::string dist = v.value("dist", "uniform");
            if (dist == "uniform") {
                p.dist = Distribution::uniform;
            } else if (dist == "triangular") {
                p.dist = Distribution::triangular;
                if (!v.contains("mode")) {
                    fail_parse(origin, "triangular parameter '" + name + "' needs a mode");
                }
                p.mode = get_number(v.at("mode"), name + ".mode", origin);
            } else if (dist == "point") {
                p.dist = Distribution::point;
                p.mode = p.interval.lo;
            } else {
                fail_parse(origin, "unknown distribution '" + dist + "' for '" + name + "'");
            }
        } else {
            fail_parse(origin, "parameter '" + name + "' must be a number or interval");
        }
        p.validate();
        spec.params.push_back(p);
    }
    return spec;
}

SensitivitySpec load_sensitivity_spec(const std::filesystem::path& path)
{
    return parse_sensitivity_spec(read_file(path), path.string());
}

// ---- cost scenarios -----------------------------------------------------

CostScenario parse_cost_scenario(std::string_view text, std::string_view origin)
{
    json doc = parse_json(text, origin);
    if (!doc.is_object()) {
        fail_parse(origin, "cost scenario must be a JSON object");
    }
    CostScenario sc;
    if (doc.contains("generation")) {
        const json& g = doc.at("generation");
        GenerationProfile p;
        p.runs = get_int(g.at("runs"), "generation.runs", origin);
        p.input_tokens_per_run =
            get_int(g.at("input_tokens"), "generation.input_tokens", origin);
        p.output_tokens_per_run =
            get_int(g.at("output_tokens"), "generation.output_tokens", origin);
        if (g.contains("tools_cost")) {
            p.tools_cost = get_money(g.at("tools_cost"), "generation.tools_cost", origin);
        }
        p.validate();
        sc.generation = p;
    }
    if (doc.contains("pricing")) {
        const json& p = doc.at("pricing");
        TokenPricing tp;
        tp.model_name = p.value("model", "");
        tp.input_per_mtok = get_money(p.at("input_per_mtok"), "pricing.input_per_mtok", origin);
        tp.output_per_mtok =
            get_money(p.at("output_per_mtok"), "pricing.output_per_mtok", origin);
        sc.pricing = tp;
    }
    if (doc.contains("counts")) {
        const json& c = doc.at("counts");
        auto opt = [&](const char* key) -> std::optional<std::int64_t> {
            if (!c.contains(key)) return std::nullopt;
            return get_int(c.at(key), key, origin);
        };
        sc.submitted = opt("submitted");
        sc.accepted = opt("accepted");
        sc.high_severity = opt("high");
        sc.exploitable = opt("exploitable");
    }
    if (doc.contains("efforts")) {
        const json& eff = doc.at("efforts");
        const std::pair<const char*, Stage> stages[] = {
            {"validation", Stage::validation},
            {"impact", Stage::impact},
            {"remediation", Stage::remediation},
            {"triage", Stage::triage},
        };
        for (auto& [name, stage] : stages) {
            if (!eff.contains(name)) {
                continue;
            }
            const json& e = eff.at(name);
            StageEffort se;
            se.stage = stage;
            se.hours_per_item = get_hours(e.at("hours_per_item"),
                                          std::string(name) + ".hours_per_item", origin);
            se.rate.per_hour =
                get_money(e.at("rate"), std::string(name) + ".rate", origin);
            se.validate();
            sc.efforts[stage] = se;
        }
    }
    return sc;
}

CostScenario load_cost_scenario(const std::filesystem::path& path)
{
    return parse_cost_scenario(read_file(path), path.string());
}

// ---- review packages and policies --------------------------------------

ReviewPackage parse_review_package(std::string_view text, std::string_view origin)
{
    json doc = parse_json(text, origin);
    if (!doc.is_object() || !doc.contains("ownership_model")) {
        fail_parse(origin, "review package needs 'ownership_model'");
    }
    ReviewPackage pkg;
    pkg.model = ownership_from_string(doc.at("ownership_model").get<std::string>());
    if (doc.contains("artifacts")) {
        const json& a = doc.at("artifacts");
        const auto& known = known_review_artifacts();
        auto check_known = [&](const std::string& name) {
            if (std::find(known.begin(), known.end(), name) == known.end()) {
                fail_parse(origin, "unknown review artifact '" + name + "'");
            }
        };
        if (a.is_array()) {
            for (const json& v : a) {
                std::string name = v.get<std::string>();
                check_known(name);
                pkg.artifacts.insert(name);
            }
        } else if (a.is_object()) {
            // true or an evidence-pointer string marks the artifact present.
            for (auto& [name, v] : a.items()) {
                check_known(name);
                if ((v.is_boolean() && v.get<bool>()) || v.is_string()) {
                    pkg.artifacts.insert(name);
                }
            }
        } else {
            fail_parse(origin, "'artifacts' must be an array or object");
        }
    }
    return pkg;
}

ReviewPackage load_review_package(const std::filesystem::path& path)
{
    return parse_review_package(read_file(path), path.string());
}

ReviewPolicy parse_review_policy(std::string_view text, std::string_view origin)
{
    json doc = parse_json(text, origin);
    if (!doc.is_object()) {
        fail_parse(origin, "review policy must be a JSON object");
    }
    ReviewPolicy policy = default_review_policy();
    for (auto& [model_name, list] : doc.items()) {
        OwnershipModel model = ownership_from_string(model_name);
        if (!list.is_array()) {
            fail_parse(origin, "policy entry '" + model_name + "' must be an array");
        }
        std::vector<std::string> required;
        const auto& known = known_review_artifacts();
        for (const json& v : list) {
            std::string name = v.get<std::string>();
            if (std::find(known.begin(), known.end(), name) == known.end()) {
                fail_parse(origin, "unknown review artifact '" + name + "'");
            }
            required.push_back(name);
        }
        policy[model] = required;
    }
    return policy;
}

ReviewPolicy load_review_policy(const std::filesystem::path& path)
{
    return parse_review_policy(read_file(path), path.string());
}

} // namespace bugonomics
