#include "bugonomics/sensitivity.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace bugonomics {

namespace {

void require_same_unit(const Interval& a, const Interval& b, const char* op)
{
    if (a.unit != b.unit) {
        throw domain_error(std::string("unit mismatch in interval ") + op + ": " +
                           unit_name(a.unit) + " vs " + unit_name(b.unit));
    }
}

void require_non_negative(const Interval& iv, const char* op)
{
    if (iv.lo < 0) {
        throw domain_error(std::string("negative endpoint in interval ") + op);
    }
}

bool dimensionless(Unit u) { return u == Unit::count || u == Unit::fraction; }

Unit mul_unit(Unit a, Unit b)
{
    if (a == Unit::fraction && b == Unit::fraction) return Unit::fraction;
    if (dimensionless(a) && dimensionless(b)) return Unit::count;
    if (dimensionless(a)) return b;
    if (dimensionless(b)) return a;
    if ((a == Unit::hours && b == Unit::rate) || (a == Unit::rate && b == Unit::hours)) {
        return Unit::money;
    }
    throw domain_error(std::string("dimensionally inconsistent product: ") +
                       unit_name(a) + " * " + unit_name(b));
}

Unit div_unit(Unit a, Unit b)
{
    if (dimensionless(b)) return a;
    if (a == b) return Unit::fraction;
    if (a == Unit::money && b == Unit::hours) return Unit::rate;
    if (a == Unit::money && b == Unit::rate) return Unit::hours;
    throw domain_error(std::string("dimensionally inconsistent quotient: ") +
                       unit_name(a) + " / " + unit_name(b));
}

} // namespace

Interval interval_add(const Interval& a, const Interval& b)
{
    require_same_unit(a, b, "addition");
    return Interval::make(a.lo + b.lo, a.hi + b.hi, a.unit);
}

Interval interval_mul(const Interval& a, const Interval& b)
{
    require_non_negative(a, "product");
    require_non_negative(b, "product");
    // Endpoint-wise is exact for non-negative operands.
    return Interval::make(a.lo * b.lo, a.hi * b.hi, mul_unit(a.unit, b.unit));
}

Interval interval_div(const Interval& a, const Interval& b)
{
    require_non_negative(a, "quotient");
    if (b.lo <= 0) {
        throw computation_error("division by interval containing zero");
    }
    return Interval::make(a.lo / b.hi, a.hi / b.lo, div_unit(a.unit, b.unit));
}

void UncertainParam::validate() const
{
    switch (dist) {
    case Distribution::uniform:
        break;
    case Distribution::triangular:
        if (mode < interval.lo || mode > interval.hi) {
            throw domain_error("triangular mode outside interval for '" + name + "'");
        }
        break;
    case Distribution::point:
        if (!interval.is_point()) {
            throw domain_error("point distribution requires lo == hi for '" + name + "'");
        }
        break;
    }
}

// ---- formulas -----------------------------------------------------------

namespace {

struct FormulaInfo {
    const char* name;
    std::vector<std::string> params;
    // Parameters the formula is decreasing in (denominator terms).
    std::vector<std::string> decreasing;
    std::map<std::string, Unit> units;
};

const FormulaInfo& info(FormulaKind kind)
{
    static const std::map<FormulaKind, FormulaInfo> table = {
        {FormulaKind::generation_cost,
         {"generation_cost",
          {"q", "t_in", "t_out", "r_in", "r_out", "c_tools"},
          {},
          {{"q", Unit::count}, {"t_in", Unit::count}, {"t_out", Unit::count},
           {"r_in", Unit::rate}, {"r_out", Unit::rate}, {"c_tools", Unit::money}}}},
        {FormulaKind::stage_cost,
         {"stage_cost",
          {"item_count", "hours_per_item", "rate"},
          {},
          {{"item_count", Unit::count}, {"hours_per_item", Unit::hours},
           {"rate", Unit::rate}}}},
        {FormulaKind::total_cost,
         {"total_cost",
          {"c_g", "c_v", "c_i", "c_r", "c_t"},
          {},
          {{"c_g", Unit::money}, {"c_v", Unit::money}, {"c_i", Unit::money},
           {"c_r", Unit::money}, {"c_t", Unit::money}}}},
        {FormulaKind::per_validated,
         {"per_validated",
          {"c_g", "c_v", "n_c", "pi_s"},
          {"n_c", "pi_s"},
          {{"c_g", Unit::money}, {"c_v", Unit::money}, {"n_c", Unit::count},
           {"pi_s", Unit::fraction}}}},
        {FormulaKind::per_impact,
         {"per_impact",
          {"c_g", "c_v", "c_i", "n_c", "pi_s", "pi_e"},
          {"n_c", "pi_s", "pi_e"},
          {{"c_g", Unit::money}, {"c_v", Unit::money}, {"c_i", Unit::money},
           {"n_c", Unit::count}, {"pi_s", Unit::fraction}, {"pi_e", Unit::fraction}}}},
        {FormulaKind::per_accepted,
         {"per_accepted",
          {"c_g", "c_v", "c_r", "c_t", "n_c", "pi_s"},
          {"n_c", "pi_s"},
          {{"c_g", Unit::money}, {"c_v", Unit::money}, {"c_r", Unit::money},
           {"c_t", Unit::money}, {"n_c", Unit::count}, {"pi_s", Unit::fraction}}}},
    };
    return table.at(kind);
}

double get(const std::map<std::string, double>& m, const char* k)
{
    return m.at(k);
}

} // namespace

FormulaKind formula_from_string(const std::string& name)
{
    for (FormulaKind k : {FormulaKind::generation_cost, FormulaKind::stage_cost,
                          FormulaKind::total_cost, FormulaKind::per_validated,
                          FormulaKind::per_impact, FormulaKind::per_accepted}) {
        if (name == info(k).name) {
            return k;
        }
    }
    throw parse_error("unknown formula target: '" + name + "'");
}

const char* formula_name(FormulaKind kind) { return info(kind).name; }

const std::vector<std::string>& formula_params(FormulaKind kind)
{
    return info(kind).params;
}

Unit formula_param_unit(FormulaKind kind, const std::string& param)
{
    const FormulaInfo& fi = info(kind);
    auto it = fi.units.find(param);
    if (it == fi.units.end()) {
        throw domain_error("no parameter '" + param + "' in " + std::string(fi.name));
    }
    return it->second;
}

double eval_formula(FormulaKind kind, const std::map<std::string, double>& p)
{
    switch (kind) {
    case FormulaKind::generation_cost:
        return get(p, "q") * (get(p, "t_in") * get(p, "r_in") +
                              get(p, "t_out") * get(p, "r_out")) /
                   1e6 +
               get(p, "c_tools");
    case FormulaKind::stage_cost:
        return get(p, "item_count") * get(p, "hours_per_item") * get(p, "rate");
    case FormulaKind::total_cost:
        return get(p, "c_g") + get(p, "c_v") + get(p, "c_i") + get(p, "c_r") +
               get(p, "c_t");
    case FormulaKind::per_validated: {
        double denom = get(p, "n_c") * get(p, "pi_s");
        if (denom <= 0) {
            throw computation_error("unit cost undefined: no validated findings");
        }
        return (get(p, "c_g") + get(p, "c_v")) / denom;
    }
    case FormulaKind::per_impact: {
        double denom = get(p, "n_c") * get(p, "pi_s") * get(p, "pi_e");
        if (denom <= 0) {
            throw computation_error("unit cost undefined: no impact-backed findings");
        }
        return (get(p, "c_g") + get(p, "c_v") + get(p, "c_i")) / denom;
    }
    case FormulaKind::per_accepted: {
        double denom = get(p, "n_c") * get(p, "pi_s");
        if (denom <= 0) {
            throw computation_error("unit cost undefined: no accepted findings");
        }
        return (get(p, "c_g") + get(p, "c_v") + get(p, "c_r") + get(p, "c_t")) / denom;
    }
    }
    throw domain_error("unknown formula");
}

Interval lift_cost_model(FormulaKind kind, const std::map<std::string, Interval>& params)
{
    const FormulaInfo& fi = info(kind);
    if (params.size() != fi.params.size()) {
        throw domain_error("wrong parameter set for " + std::string(fi.name));
    }
    std::map<std::string, double> at_lo, at_hi;
    for (const std::string& name : fi.params) {
        auto it = params.find(name);
        if (it == params.end()) {
            throw domain_error("missing parameter '" + name + "' for " +
                               std::string(fi.name));
        }
        const Interval& iv = it->second;
        if (iv.unit != fi.units.at(name)) {
            throw domain_error("parameter '" + name + "' has unit " +
                               unit_name(iv.unit) + ", expected " +
                               unit_name(fi.units.at(name)));
        }
        if (iv.lo < 0) {
            throw domain_error("negative endpoint in parameter '" + name + "'");
        }
        bool decreasing = std::find(fi.decreasing.begin(), fi.decreasing.end(), name) !=
                          fi.decreasing.end();
        // Every formula is monotone per argument: the result's lower
        // endpoint takes numerator lows and denominator highs.
        at_lo[name] = decreasing ? iv.hi : iv.lo;
        at_hi[name] = decreasing ? iv.lo : iv.hi;
    }
    double lo = eval_formula(kind, at_lo);
    double hi = eval_formula(kind, at_hi);
    return Interval::make(lo, hi, Unit::money);
}

// ---- seeded sampling ----------------------------------------------------

namespace {

std::uint64_t splitmix64(std::uint64_t x)
{
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

} // namespace

double counter_uniform01(std::uint64_t seed, std::uint64_t stream, std::uint64_t index)
{
    std::uint64_t h = splitmix64(seed ^ (stream * 0xD2B74407B1CE6E93ULL));
    std::uint64_t v = splitmix64(h + index * 0x9E3779B97F4A7C15ULL);
    return static_cast<double>(v >> 11) * 0x1.0p-53;
}

double sample_value(const UncertainParam& p, double u)
{
    const double lo = p.interval.lo;
    const double hi = p.interval.hi;
    switch (p.dist) {
    case Distribution::point:
        return lo;
    case Distribution::uniform:
        return lo + u * (hi - lo);
    case Distribution::triangular: {
        if (hi == lo) {
            return lo;
        }
        const double c = (p.mode - lo) / (hi - lo);
        if (u < c) {
            return lo + std::sqrt(u * (hi - lo) * (p.mode - lo));
        }
        return hi - std::sqrt((1 - u) * (hi - lo) * (hi - p.mode));
    }
    }
    throw domain_error("invalid distribution");
}

McSummary monte_carlo(FormulaKind kind, const std::vector<UncertainParam>& params,
                      std::int64_t n_samples, std::uint64_t seed)
{
    if (n_samples < 1) {
        throw domain_error("sample count must be at least 1");
    }
    const FormulaInfo& fi = info(kind);
    // Parameters keyed by canonical formula order so the draw stream is
    // independent of spec-file ordering.
    std::vector<const UncertainParam*> ordered;
    for (const std::string& name : fi.params) {
        auto it = std::find_if(params.begin(), params.end(),
                               [&](const UncertainParam& p) { return p.name == name; });
        if (it == params.end()) {
            throw domain_error("missing parameter '" + name + "' for " +
                               std::string(fi.name));
        }
        it->validate();
        ordered.push_back(&*it);
    }
    if (params.size() != fi.params.size()) {
        throw domain_error("wrong parameter set for " + std::string(fi.name));
    }

    std::vector<double> values(static_cast<std::size_t>(n_samples));
    std::map<std::string, double> point;
    for (std::int64_t i = 0; i < n_samples; ++i) {
        for (std::size_t j = 0; j < ordered.size(); ++j) {
            double u = counter_uniform01(seed, j, static_cast<std::uint64_t>(i));
            point[ordered[j]->name] = sample_value(*ordered[j], u);
        }
        values[static_cast<std::size_t>(i)] = eval_formula(kind, point);
    }

    McSummary s;
    s.sample_count = n_samples;
    s.seed = seed;
    double sum = 0;
    for (double v : values) {
        sum += v;
    }
    s.mean = sum / static_cast<double>(n_samples);
    double sq = 0;
    for (double v : values) {
        sq += (v - s.mean) * (v - s.mean);
    }
    s.std_dev = n_samples > 1 ? std::sqrt(sq / static_cast<double>(n_samples - 1)) : 0.0;

    std::sort(values.begin(), values.end());
    s.min = values.front();
    s.max = values.back();
    auto quantile = [&](double p) {
        double pos = p * static_cast<double>(n_samples - 1);
        std::size_t lo = static_cast<std::size_t>(pos);
        std::size_t hi = std::min(lo + 1, values.size() - 1);
        double frac = pos - static_cast<double>(lo);
        return values[lo] + frac * (values[hi] - values[lo]);
    };
    s.p05 = quantile(0.05);
    s.p50 = quantile(0.50);
    s.p95 = quantile(0.95);
    return s;
}

} // namespace bugonomics
