#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "bugonomics/core.hpp"

namespace bugonomics {

// ---- interval arithmetic ------------------------------------------------
//
// All quantities in this model are non-negative, so endpoint-wise
// products and the [lo/hi, hi/lo] quotient are exact ranges.

Interval interval_add(const Interval& a, const Interval& b);
Interval interval_mul(const Interval& a, const Interval& b);
Interval interval_div(const Interval& a, const Interval& b);

// ---- uncertain parameters ----------------------------------------------

enum class Distribution { uniform, triangular, point };

struct UncertainParam {
    std::string name;
    Interval interval;
    Distribution dist = Distribution::uniform;
    double mode = 0; // triangular only; must lie inside the interval

    void validate() const;

    static UncertainParam point_value(std::string name, double v, Unit unit)
    {
        return UncertainParam{std::move(name), Interval::point(v, unit),
                              Distribution::point, v};
    }

    static UncertainParam uniform(std::string name, double lo, double hi, Unit unit)
    {
        return UncertainParam{std::move(name), Interval::make(lo, hi, unit),
                              Distribution::uniform, 0};
    }
};

// The cost formulas the lifting and sampling machinery can target.
// Parameter names per target:
//   generation_cost: q, t_in, t_out, r_in, r_out, c_tools
//   stage_cost:      item_count, hours_per_item, rate
//   total_cost:      c_g, c_v, c_i, c_r, c_t
//   per_validated:   c_g, c_v, n_c, pi_s
//   per_impact:      c_g, c_v, c_i, n_c, pi_s, pi_e
//   per_accepted:    c_g, c_v, c_r, c_t, n_c, pi_s
enum class FormulaKind {
    generation_cost,
    stage_cost,
    total_cost,
    per_validated,
    per_impact,
    per_accepted,
};

FormulaKind formula_from_string(const std::string& name);
const char* formula_name(FormulaKind kind);
const std::vector<std::string>& formula_params(FormulaKind kind);
Unit formula_param_unit(FormulaKind kind, const std::string& param);

// Evaluates the target formula over intervals; exact endpoint-wise
// range because every formula is monotone in each non-negative argument.
Interval lift_cost_model(FormulaKind kind, const std::map<std::string, Interval>& params);

// Scalar evaluation in doubles (the Monte Carlo path).
double eval_formula(FormulaKind kind, const std::map<std::string, double>& params);

struct McSummary {
    std::int64_t sample_count = 0;
    std::uint64_t seed = 0;
    double mean = 0;
    double std_dev = 0;
    double p05 = 0;
    double p50 = 0;
    double p95 = 0;
    double min = 0;
    double max = 0;
};

inline constexpr std::int64_t default_mc_samples = 10'000;

// Counter-based sampling: sample i's draws derive from (seed, i, param
// index), so results are independent of evaluation order and worker
// count. Identical inputs give bit-identical summaries.
McSummary monte_carlo(FormulaKind kind, const std::vector<UncertainParam>& params,
                      std::int64_t n_samples, std::uint64_t seed);

// Exposed for the simulator and tests: the shared counter-based
// uniform draw in [0, 1).
double counter_uniform01(std::uint64_t seed, std::uint64_t stream, std::uint64_t index);

double sample_value(const UncertainParam& p, double u01);

} // namespace bugonomics
