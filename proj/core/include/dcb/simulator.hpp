#pragma once

#include "dcb/borrowing.hpp"
#include "dcb/erlang.hpp"
#include "dcb/topology.hpp"

#include <cstdint>
#include <vector>

namespace dcb {

// Per-cell Poisson arrival rates (calls/s) plus the shared mean holding time.
struct TrafficProfile {
    std::vector<double> arrival_rates;
    double mean_holding_s = 90.0;

    double arrival_rate(int cell) const;
};

struct Scenario {
    ClusterLayout layout;
    TrafficProfile traffic;
    int channels_per_cell = 100;
    int threshold = 70;
    bool borrowing_enabled = false;
    double duration_s = 1e6;
    double warmup_s = 1e4;
    std::uint64_t seed = 1;
};

struct CellStats {
    std::int64_t offered = 0;
    std::int64_t admitted = 0;
    std::int64_t blocked = 0;
    double empirical_blocking = 0.0; // 0 with zero_samples set when offered == 0
    bool zero_samples = false;
};

struct MetricsReport {
    std::vector<CellStats> cells; // index 0 = cell 1
    double overall_blocking_paper = 0.0;
    bool overall_paper_in_range = true;
    double overall_blocking_weighted = 0.0;
    bool zero_traffic = false;
    double utilization = 0.0;      // time-averaged busy fraction of all owned channels
    std::int64_t borrow_events = 0;
    double mean_borrowed = 0.0;    // time-averaged systemwide borrowed channels
};

// Exact-event simulation: per-cell exponential interarrivals and holding
// times from per-cell deterministic streams, admissions through the ledger
// state machine, statistics over [warmup, duration). Identical seed gives an
// identical report.
MetricsReport run_scenario(const Scenario& scenario);

struct SweepPoint {
    double lambda_ref = 0.0; // calls/s offered to the reference cell
    MetricsReport without_borrowing;
    MetricsReport with_borrowing;
};

// Paired runs (common random numbers) over reference-cell arrival rates;
// background cells keep the base scenario's rates.
std::vector<SweepPoint> sweep(const Scenario& base, const std::vector<double>& lambda_ref_list);

// Time-weighted occupancy histogram of one cell, normalized to 1. Requires
// borrowing disabled so the cell is a clean M/M/N/N chain.
StateDistribution empirical_state_distribution(const Scenario& scenario, int cell);

} // namespace dcb
