#include "bugonomics/throughput_sim.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>

#include "bugonomics/cost_engine.hpp"

namespace bugonomics {

namespace {

constexpr double kEps = 1e-9;

// Draw streams, keyed so every random decision about an item is a pure
// function of (seed, stream, item id): execution order never matters.
enum Stream : std::uint64_t {
    stream_arrivals = 1,
    stream_severity = 2,
    stream_service_base = 10, // + stage index
    stream_thin_validation = 20,
    stream_thin_impact = 21,
};

struct Item {
    std::int64_t id = 0;
    ItemSeverity severity = ItemSeverity::low;
    double remaining = 0; // hours left at the current stage
    bool started = false;
};

double service_hours(const PipelineConfig& cfg, std::size_t stage, std::int64_t item_id)
{
    const ServiceSpec& spec = cfg.stages[stage].service;
    if (!spec.stochastic) {
        return spec.point_hours.to_double();
    }
    UncertainParam p{"service", spec.interval, spec.dist, spec.mode};
    double u = counter_uniform01(cfg.seed, stream_service_base + stage,
                                 static_cast<std::uint64_t>(item_id));
    return sample_value(p, u);
}

ItemSeverity draw_severity(const PipelineConfig& cfg, std::int64_t item_id)
{
    double u = counter_uniform01(cfg.seed, stream_severity,
                                 static_cast<std::uint64_t>(item_id));
    if (u < cfg.severity_probs[0]) {
        return ItemSeverity::high;
    }
    if (u < cfg.severity_probs[0] + cfg.severity_probs[1]) {
        return ItemSeverity::moderate;
    }
    return ItemSeverity::low;
}

bool survives_thinning(const PipelineConfig& cfg, std::size_t stage, std::int64_t item_id)
{
    if (stage == 0) { // validation exit
        return counter_uniform01(cfg.seed, stream_thin_validation,
                                 static_cast<std::uint64_t>(item_id)) < cfg.pi_s;
    }
    if (stage == 1) { // impact exit
        return counter_uniform01(cfg.seed, stream_thin_impact,
                                 static_cast<std::uint64_t>(item_id)) < cfg.pi_e;
    }
    return true;
}

// Arrival counts per week over the horizon.
std::vector<std::int64_t> weekly_arrivals(const PipelineConfig& cfg)
{
    std::vector<std::int64_t> weeks(static_cast<std::size_t>(cfg.horizon_weeks), 0);
    if (cfg.arrival_rate_per_week <= 0) {
        return weeks;
    }
    if (cfg.arrival_kind == ArrivalKind::deterministic) {
        // Evenly spaced; fractional rates carry across weeks.
        double acc = 0;
        std::int64_t emitted = 0;
        for (std::size_t w = 0; w < weeks.size(); ++w) {
            acc += cfg.arrival_rate_per_week;
            std::int64_t upto = static_cast<std::int64_t>(std::floor(acc + kEps));
            weeks[w] = upto - emitted;
            emitted = upto;
        }
        return weeks;
    }
    // Poisson: exponential inter-arrival times in week units.
    double t = 0;
    std::uint64_t k = 0;
    const double horizon = static_cast<double>(cfg.horizon_weeks);
    while (true) {
        double u = counter_uniform01(cfg.seed, stream_arrivals, k++);
        t += -std::log1p(-u) / cfg.arrival_rate_per_week;
        if (t >= horizon) {
            break;
        }
        weeks[static_cast<std::size_t>(t)]++;
    }
    return weeks;
}

Money stage_money(const PipelineConfig& cfg, std::size_t stage,
                  std::int64_t completed, double busy_hours)
{
    const StageConfig& sc = cfg.stages[stage];
    if (!sc.service.stochastic) {
        StageEffort effort{static_cast<Stage>(stage), sc.service.point_hours,
                           HourlyRate{sc.hourly_rate}};
        return stage_cost(completed, effort);
    }
    // Stochastic service has no exact per-item figure; price the busy
    // hours and round to micro-dollars.
    double micro = busy_hours * static_cast<double>(sc.hourly_rate.micro());
    return Money::from_micro(static_cast<std::int64_t>(std::llround(micro)));
}

} // namespace

void PipelineConfig::validate() const
{
    if (horizon_weeks <= 0) {
        throw domain_error("simulation horizon must be at least one week");
    }
    if (arrival_rate_per_week < 0) {
        throw domain_error("arrival rate must be non-negative");
    }
    if (pi_s < 0 || pi_s > 1 || pi_e < 0 || pi_e > 1) {
        throw domain_error("acceptance fractions must lie in [0, 1]");
    }
    for (const StageConfig& sc : stages) {
        if (sc.weekly_capacity_hours && *sc.weekly_capacity_hours < 0) {
            throw domain_error("stage capacity must be non-negative");
        }
        if (!sc.service.stochastic && sc.service.point_hours.is_negative()) {
            throw domain_error("service hours must be non-negative");
        }
        if (sc.service.stochastic && sc.service.interval.lo < 0) {
            throw domain_error("service hours must be non-negative");
        }
    }
    double psum = 0;
    for (double p : severity_probs) {
        if (p < 0 || p > 1) {
            throw domain_error("severity probabilities must lie in [0, 1]");
        }
        psum += p;
    }
    if (discipline == QueueDiscipline::severity_priority && psum > 1 + 1e-9) {
        throw domain_error("severity probabilities sum above 1");
    }
}

bool SimResult::operator==(const SimResult& o) const
{
    auto stats_eq = [](const StageStats& a, const StageStats& b) {
        return a.items_in == b.items_in && a.items_out == b.items_out &&
               a.items_dropped == b.items_dropped && a.end_backlog == b.end_backlog &&
               a.busy_hours == b.busy_hours && a.utilization == b.utilization;
    };
    for (std::size_t i = 0; i < stages.size(); ++i) {
        if (!stats_eq(stages[i], o.stages[i])) {
            return false;
        }
    }
    return arrivals == o.arrivals &&
           accepted_fixes_shipped == o.accepted_fixes_shipped &&
           fixes_per_maintainer_hour == o.fixes_per_maintainer_hour &&
           total_cost.generation == o.total_cost.generation &&
           total_cost.validation == o.total_cost.validation &&
           total_cost.impact == o.total_cost.impact &&
           total_cost.remediation == o.total_cost.remediation &&
           total_cost.triage == o.total_cost.triage;
}

SimResult simulate(const PipelineConfig& cfg)
{
    cfg.validate();

    SimResult res;
    std::array<std::deque<Item>, 4> queues;
    std::array<std::int64_t, 4> completed{};

    std::vector<std::int64_t> arrivals = weekly_arrivals(cfg);
    std::int64_t next_id = 0;

    auto select_next = [&](std::deque<Item>& q) -> std::deque<Item>::iterator {
        // Non-preemptive: a started item keeps the server.
        auto started = std::find_if(q.begin(), q.end(),
                                    [](const Item& it) { return it.started; });
        if (started != q.end()) {
            return started;
        }
        if (cfg.discipline == QueueDiscipline::fifo) {
            return q.begin();
        }
        return std::min_element(q.begin(), q.end(), [](const Item& a, const Item& b) {
            if (a.severity != b.severity) {
                return static_cast<int>(a.severity) < static_cast<int>(b.severity);
            }
            return a.id < b.id;
        });
    };

    for (std::int64_t week = 0; week < cfg.horizon_weeks; ++week) {
        std::int64_t n = arrivals[static_cast<std::size_t>(week)];
        for (std::int64_t k = 0; k < n; ++k) {
            Item item;
            item.id = next_id++;
            item.severity = draw_severity(cfg, item.id);
            item.remaining = service_hours(cfg, 0, item.id);
            queues[0].push_back(item);
            res.stages[0].items_in++;
        }
        res.arrivals += n;

        // Stages processed in pipeline order, so an item finishing one
        // stage can be served downstream within the same week.
        for (std::size_t s = 0; s < 4; ++s) {
            StageStats& st = res.stages[s];
            double budget = cfg.stages[s].weekly_capacity_hours
                                ? *cfg.stages[s].weekly_capacity_hours
                                : std::numeric_limits<double>::infinity();
            while (!queues[s].empty()) {
                auto it = select_next(queues[s]);
                if (it->remaining <= kEps) {
                    Item done = *it;
                    queues[s].erase(it);
                    completed[s]++;
                    if (!survives_thinning(cfg, s, done.id)) {
                        st.items_dropped++;
                        continue;
                    }
                    st.items_out++;
                    if (s + 1 < 4) {
                        done.remaining = service_hours(cfg, s + 1, done.id);
                        done.started = false;
                        queues[s + 1].push_back(done);
                        res.stages[s + 1].items_in++;
                    } else {
                        res.accepted_fixes_shipped++;
                    }
                    continue;
                }
                if (budget <= kEps) {
                    break;
                }
                double work = std::min(it->remaining, budget);
                it->remaining -= work;
                it->started = true;
                budget -= work;
                st.busy_hours += work;
            }
        }
    }

    for (std::size_t s = 0; s < 4; ++s) {
        StageStats& st = res.stages[s];
        st.end_backlog = static_cast<std::int64_t>(queues[s].size());
        if (cfg.stages[s].weekly_capacity_hours &&
            *cfg.stages[s].weekly_capacity_hours > 0) {
            double avail = *cfg.stages[s].weekly_capacity_hours *
                           static_cast<double>(cfg.horizon_weeks);
            st.utilization = std::clamp(st.busy_hours / avail, 0.0, 1.0);
        }
    }

    res.total_cost.generation = cfg.generation_cost_per_item.times(res.arrivals);
    res.total_cost.validation = stage_money(cfg, 0, completed[0], res.stages[0].busy_hours);
    res.total_cost.impact = stage_money(cfg, 1, completed[1], res.stages[1].busy_hours);
    res.total_cost.remediation = stage_money(cfg, 2, completed[2], res.stages[2].busy_hours);
    res.total_cost.triage = stage_money(cfg, 3, completed[3], res.stages[3].busy_hours);

    if (res.stages[3].busy_hours > 0) {
        res.fixes_per_maintainer_hour =
            static_cast<double>(res.accepted_fixes_shipped) / res.stages[3].busy_hours;
    }
    return res;
}

BottleneckReport bottleneck_report(const SimResult& result, const PipelineConfig& cfg)
{
    SimResult replay = simulate(cfg);
    if (!(replay == result)) {
        throw domain_error("simulation result does not match the given config");
    }

    BottleneckReport report;
    for (std::size_t s = 0; s < 4; ++s) {
        const StageStats& st = result.stages[s];
        if (!cfg.stages[s].weekly_capacity_hours && st.end_backlog == 0) {
            continue; // unbounded and keeping up: not a candidate
        }
        BottleneckEntry e;
        e.stage = static_cast<Stage>(s);
        e.backlog_growth_per_week = static_cast<double>(st.end_backlog) /
                                    static_cast<double>(cfg.horizon_weeks);
        e.utilization = st.utilization;
        report.ranking.push_back(e);
    }
    std::stable_sort(report.ranking.begin(), report.ranking.end(),
                     [](const BottleneckEntry& a, const BottleneckEntry& b) {
                         if (a.backlog_growth_per_week != b.backlog_growth_per_week) {
                             return a.backlog_growth_per_week > b.backlog_growth_per_week;
                         }
                         if (a.utilization != b.utilization) {
                             return a.utilization > b.utilization;
                         }
                         return static_cast<int>(a.stage) < static_cast<int>(b.stage);
                     });

    if (!report.ranking.empty() && report.ranking.front().backlog_growth_per_week > 0) {
        Stage top = report.ranking.front().stage;
        report.bottleneck = top;
        std::size_t idx = static_cast<std::size_t>(top);
        if (cfg.stages[idx].weekly_capacity_hours) {
            PipelineConfig widened = cfg;
            *widened.stages[idx].weekly_capacity_hours += 1.0;
            SimResult more = simulate(widened);
            report.marginal_fixes_per_capacity_hour =
                more.accepted_fixes_shipped - result.accepted_fixes_shipped;
        }
    }
    return report;
}

} // namespace bugonomics
