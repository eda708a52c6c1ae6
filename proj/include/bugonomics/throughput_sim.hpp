#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "bugonomics/core.hpp"
#include "bugonomics/sensitivity.hpp"

namespace bugonomics {

enum class ArrivalKind { deterministic, poisson };
enum class QueueDiscipline { fifo, severity_priority };
enum class ItemSeverity { high, moderate, low };

// Per-item service requirement at one stage: a fixed figure or a draw
// from a distribution over an interval.
struct ServiceSpec {
    bool stochastic = false;
    Rational point_hours;        // when !stochastic
    Interval interval;           // when stochastic
    Distribution dist = Distribution::uniform;
    double mode = 0;

    static ServiceSpec fixed(const Rational& hours)
    {
        ServiceSpec s;
        s.point_hours = hours;
        return s;
    }
};

struct StageConfig {
    ServiceSpec service;
    // Weekly budget of service hours; nullopt means unbounded.
    std::optional<double> weekly_capacity_hours;
    Money hourly_rate;
};

// Candidate generation feeds validation -> impact -> remediation ->
// triage. Acceptance thins the stream at validation exit (pi_s) and
// impact exit (pi_e); thinned items still consumed service time.
struct PipelineConfig {
    std::int64_t horizon_weeks = 0;
    std::uint64_t seed = 0;
    ArrivalKind arrival_kind = ArrivalKind::deterministic;
    double arrival_rate_per_week = 0;
    double pi_s = 1.0;
    double pi_e = 1.0;
    QueueDiscipline discipline = QueueDiscipline::fifo;
    // Used by severity_priority to assign severity at generation time.
    std::array<double, 3> severity_probs = {0.0, 0.0, 1.0}; // high, moderate, low
    std::array<StageConfig, 4> stages; // validation, impact, remediation, triage
    Money generation_cost_per_item;

    void validate() const;
};

struct StageStats {
    std::int64_t items_in = 0;
    std::int64_t items_out = 0;             // survivors passed downstream
    std::int64_t items_dropped = 0;         // thinned after service
    std::int64_t end_backlog = 0;           // queued or partially served at horizon
    double busy_hours = 0;
    double utilization = 0;                 // busy / (capacity * weeks); 0 if unbounded
};

struct SimResult {
    std::int64_t arrivals = 0;
    std::array<StageStats, 4> stages;
    std::int64_t accepted_fixes_shipped = 0;
    std::optional<double> fixes_per_maintainer_hour;
    // Busy-work tally priced through the scalar cost engine. For fixed
    // service specs this is stage_cost over completed items, exactly.
    CostBreakdown total_cost;

    bool operator==(const SimResult& o) const;
};

SimResult simulate(const PipelineConfig& config);

struct BottleneckEntry {
    Stage stage = Stage::validation;
    double backlog_growth_per_week = 0;
    double utilization = 0;
};

struct BottleneckReport {
    // Capacity-constrained (or backlogged) stages, worst first: ranked
    // by backlog growth rate, ties by utilization, then pipeline order.
    std::vector<BottleneckEntry> ranking;
    std::optional<Stage> bottleneck; // top of ranking when its backlog grows
    // Extra accepted fixes from one added weekly capacity-hour at the
    // bottleneck (re-simulation); 0 when no bottleneck.
    std::int64_t marginal_fixes_per_capacity_hour = 0;
};

// result must come from simulate(config); verified by re-simulation.
BottleneckReport bottleneck_report(const SimResult& result, const PipelineConfig& config);

} // namespace bugonomics
