#include <doctest.h>

#include <cmath>
#include <map>
#include <random>

#include "bugonomics/render.hpp"
#include "bugonomics/sensitivity.hpp"

using namespace bugonomics;

namespace {

Interval money_iv(double lo, double hi) { return Interval::make(lo, hi, Unit::money); }

} // namespace

TEST_CASE("interval products and quotients are endpoint-wise")
{
    Interval count = Interval::point(112, Unit::count);
    Interval hours = Interval::make(0.5, 2, Unit::hours);
    Interval rate = Interval::make(100, 250, Unit::rate);

    Interval band = interval_mul(interval_mul(count, hours), rate);
    CHECK(band.unit == Unit::money);
    CHECK(band.lo == doctest::Approx(5600.0));
    CHECK(band.hi == doctest::Approx(56000.0));

    Interval per_accepted = interval_div(band, Interval::point(22, Unit::count));
    CHECK(per_accepted.lo == doctest::Approx(254.5454545).epsilon(1e-8));
    CHECK(per_accepted.hi == doctest::Approx(2545.4545454).epsilon(1e-8));
    CHECK(format_dollars(per_accepted.lo) == "$255");
    CHECK(format_dollars(per_accepted.hi) == "$2,545");

    Interval spend = interval_div(money_iv(20000, 20000),
                                  Interval::make(24, 48, Unit::count));
    CHECK(spend.lo == doctest::Approx(416.6666667).epsilon(1e-8));
    CHECK(spend.hi == doctest::Approx(833.3333333).epsilon(1e-8));
}

TEST_CASE("interval division needs a strictly positive divisor")
{
    CHECK_THROWS_AS(interval_div(money_iv(1, 2), Interval::make(0, 5, Unit::count)),
                    computation_error);
    CHECK_THROWS_AS(interval_mul(Interval{-1, 2, Unit::count},
                                 Interval::make(1, 2, Unit::count)),
                    domain_error);
}

TEST_CASE("interval units follow dimensional rules")
{
    Interval h = Interval::make(1, 2, Unit::hours);
    Interval r = Interval::make(10, 20, Unit::rate);
    CHECK(interval_mul(h, r).unit == Unit::money);
    CHECK(interval_div(money_iv(10, 20), h).unit == Unit::rate);
    CHECK(interval_div(h, h).unit == Unit::fraction);
    CHECK_THROWS_AS(interval_add(h, r), domain_error);
    CHECK_THROWS_AS(interval_mul(h, h), domain_error);
}

TEST_CASE("lifted validation-cost band matches the hand calculation")
{
    std::map<std::string, Interval> params = {
        {"item_count", Interval::point(112, Unit::count)},
        {"hours_per_item", Interval::make(0.5, 2, Unit::hours)},
        {"rate", Interval::make(100, 250, Unit::rate)},
    };
    Interval band = lift_cost_model(FormulaKind::stage_cost, params);
    CHECK(band.lo == doctest::Approx(5600.0));
    CHECK(band.hi == doctest::Approx(56000.0));
}

TEST_CASE("lifted unit-cost band handles the decreasing parameters")
{
    // Generation spend of $5,000-$20,000 amortized over exactly 22
    // accepted findings: [227.27, 909.09].
    std::map<std::string, Interval> params = {
        {"c_g", money_iv(5000, 20000)},
        {"c_v", money_iv(0, 0)},
        {"n_c", Interval::point(112, Unit::count)},
        {"pi_s", Interval::point(22.0 / 112, Unit::fraction)},
    };
    Interval band = lift_cost_model(FormulaKind::per_validated, params);
    CHECK(band.lo == doctest::Approx(5000.0 / 22).epsilon(1e-9));
    CHECK(band.hi == doctest::Approx(20000.0 / 22).epsilon(1e-9));
    CHECK(format_dollars(band.lo) == "$227");
    CHECK(format_dollars(band.hi) == "$909");

    // Widening pi_s must widen the band at the top (lower pi_s, higher
    // cost) while the bottom uses the best precision.
    params["pi_s"] = Interval::make(11.0 / 112, 22.0 / 112, Unit::fraction);
    Interval wide = lift_cost_model(FormulaKind::per_validated, params);
    CHECK(wide.lo == doctest::Approx(5000.0 / 22).epsilon(1e-9));
    CHECK(wide.hi == doctest::Approx(20000.0 / 11).epsilon(1e-9));
}

TEST_CASE("lifting rejects missing and unknown parameters")
{
    std::map<std::string, Interval> params = {
        {"item_count", Interval::point(1, Unit::count)},
    };
    CHECK_THROWS_AS(lift_cost_model(FormulaKind::stage_cost, params), domain_error);
    params["hours_per_item"] = Interval::point(1, Unit::hours);
    params["rate"] = Interval::point(1, Unit::rate);
    params["bogus"] = Interval::point(1, Unit::count);
    CHECK_THROWS_AS(lift_cost_model(FormulaKind::stage_cost, params), domain_error);
}

TEST_CASE("scalar evaluation agrees with the exact engine on point inputs")
{
    std::map<std::string, double> p = {{"c_g", 5000},
                                       {"c_v", 5600},
                                       {"n_c", 112},
                                       {"pi_s", 22.0 / 112}};
    CHECK(eval_formula(FormulaKind::per_validated, p) ==
          doctest::Approx(10600.0 / 22).epsilon(1e-12));
}

TEST_CASE("counter-based draws are deterministic and well distributed")
{
    CHECK(counter_uniform01(42, 1, 0) == counter_uniform01(42, 1, 0));
    CHECK(counter_uniform01(42, 1, 0) != counter_uniform01(42, 1, 1));
    CHECK(counter_uniform01(42, 1, 0) != counter_uniform01(42, 2, 0));
    CHECK(counter_uniform01(42, 1, 0) != counter_uniform01(43, 1, 0));

    double sum = 0;
    for (int i = 0; i < 100'000; ++i) {
        double u = counter_uniform01(7, 3, static_cast<std::uint64_t>(i));
        CHECK(u >= 0.0);
        CHECK(u < 1.0);
        sum += u;
    }
    CHECK(sum / 100'000 == doctest::Approx(0.5).epsilon(0.01));
}

TEST_CASE("inverse-CDF sampling respects each distribution")
{
    auto uni = UncertainParam::uniform("x", 10, 20, Unit::hours);
    CHECK(sample_value(uni, 0.0) == doctest::Approx(10.0));
    CHECK(sample_value(uni, 0.5) == doctest::Approx(15.0));

    UncertainParam tri{"y", Interval::make(0, 10, Unit::hours),
                       Distribution::triangular, 5};
    CHECK(sample_value(tri, 0.5) == doctest::Approx(5.0));
    CHECK(sample_value(tri, 0.125) == doctest::Approx(2.5));
    CHECK(sample_value(tri, 0.875) == doctest::Approx(7.5));

    auto pt = UncertainParam::point_value("z", 3.5, Unit::rate);
    CHECK(sample_value(pt, 0.0) == 3.5);
    CHECK(sample_value(pt, 0.999) == 3.5);

    UncertainParam bad{"w", Interval::make(0, 10, Unit::hours),
                       Distribution::triangular, 12};
    CHECK_THROWS_AS(bad.validate(), domain_error);
}

TEST_CASE("validation-cost Monte Carlo mean matches the analytic product")
{
    std::vector<UncertainParam> params = {
        UncertainParam::point_value("item_count", 112, Unit::count),
        UncertainParam::uniform("hours_per_item", 0.5, 2, Unit::hours),
        UncertainParam::uniform("rate", 100, 250, Unit::rate),
    };
    McSummary s = monte_carlo(FormulaKind::stage_cost, params, 100'000, 20260824);
    // Independent uniforms: E = 112 * 1.25 * 175 = 24,500.
    CHECK(std::abs(s.mean - 24500.0) / 24500.0 < 0.01);
    CHECK(s.min >= 5600.0);
    CHECK(s.max <= 56000.0);
    CHECK(s.p05 < s.p50);
    CHECK(s.p50 < s.p95);
    CHECK(s.std_dev > 0);
}

TEST_CASE("every sample stays inside the lifted interval")
{
    std::mt19937_64 rng(2026);
    for (int trial = 0; trial < 20; ++trial) {
        double lo_h = 0.1 + (rng() % 100) / 100.0;
        double hi_h = lo_h + (rng() % 100) / 50.0;
        double lo_r = 50 + static_cast<double>(rng() % 100);
        double hi_r = lo_r + static_cast<double>(rng() % 200);
        std::vector<UncertainParam> params = {
            UncertainParam::point_value("item_count",
                                        static_cast<double>(1 + rng() % 500),
                                        Unit::count),
            UncertainParam::uniform("hours_per_item", lo_h, hi_h, Unit::hours),
            UncertainParam::uniform("rate", lo_r, hi_r, Unit::rate),
        };
        std::map<std::string, Interval> ivs;
        for (const auto& p : params) {
            ivs[p.name] = p.interval;
        }
        Interval band = lift_cost_model(FormulaKind::stage_cost, ivs);
        McSummary s = monte_carlo(FormulaKind::stage_cost, params, 2000, rng());
        CHECK(s.min >= band.lo - 1e-9);
        CHECK(s.max <= band.hi + 1e-9);
        CHECK(s.mean >= band.lo);
        CHECK(s.mean <= band.hi);
    }
}

TEST_CASE("Monte Carlo reruns are bit-identical for a fixed seed")
{
    std::vector<UncertainParam> params = {
        UncertainParam::uniform("c_g", 5000, 20000, Unit::money),
        UncertainParam::point_value("c_v", 0, Unit::money),
        UncertainParam::point_value("n_c", 112, Unit::count),
        UncertainParam::uniform("pi_s", 0.1, 0.3, Unit::fraction),
    };
    McSummary a = monte_carlo(FormulaKind::per_validated, params, 5000, 99);
    McSummary b = monte_carlo(FormulaKind::per_validated, params, 5000, 99);
    CHECK(a.mean == b.mean);
    CHECK(a.std_dev == b.std_dev);
    CHECK(a.p05 == b.p05);
    CHECK(a.p50 == b.p50);
    CHECK(a.p95 == b.p95);
    CHECK(a.min == b.min);
    CHECK(a.max == b.max);

    // Parameter order must not matter either: draws key off canonical
    // parameter positions, not the order given.
    std::vector<UncertainParam> shuffled = {params[3], params[1], params[0],
                                            params[2]};
    McSummary c = monte_carlo(FormulaKind::per_validated, shuffled, 5000, 99);
    CHECK(a.mean == c.mean);
    CHECK(a.max == c.max);

    McSummary other = monte_carlo(FormulaKind::per_validated, params, 5000, 100);
    CHECK(a.mean != other.mean);
}

TEST_CASE("all-point parameters collapse the summary to a single value")
{
    std::vector<UncertainParam> params = {
        UncertainParam::point_value("item_count", 112, Unit::count),
        UncertainParam::point_value("hours_per_item", 0.5, Unit::hours),
        UncertainParam::point_value("rate", 100, Unit::rate),
    };
    McSummary s = monte_carlo(FormulaKind::stage_cost, params, 1000, 1);
    CHECK(s.mean == doctest::Approx(5600.0));
    CHECK(s.std_dev == 0.0);
    CHECK(s.min == s.max);
    CHECK(s.p05 == s.p95);
}

TEST_CASE("formula names round-trip")
{
    for (FormulaKind k :
         {FormulaKind::generation_cost, FormulaKind::stage_cost,
          FormulaKind::total_cost, FormulaKind::per_validated,
          FormulaKind::per_impact, FormulaKind::per_accepted}) {
        CHECK(formula_from_string(formula_name(k)) == k);
    }
    CHECK_THROWS_AS(formula_from_string("nope"), parse_error);
}
