#include "dcb/simulator.hpp"

#include "dcb/errors.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <queue>
#include <random>
#include <string>

namespace dcb {

namespace {

// splitmix64, used to decorrelate per-cell stream seeds.
std::uint64_t mix(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Exponential variate from an explicit inverse transform so results do not
// depend on the standard library's distribution implementation.
class ExpStream {
public:
    explicit ExpStream(std::uint64_t seed) : rng_(seed) {}

    double draw(double mean) {
        // u in (0, 1]; 2^-64 granularity
        const double u = (static_cast<double>(rng_()) + 1.0) * 0x1p-64;
        return -mean * std::log(u);
    }

private:
    std::mt19937_64 rng_;
};

struct Event {
    double time;
    std::uint64_t sequence;
    enum class Kind { Arrival, Departure } kind;
    int cell;                     // arrival: where the call arrives
    ChannelAssignment assignment; // departure: what to release
};

struct EventAfter {
    bool operator()(const Event& a, const Event& b) const {
        if (a.time != b.time)
            return a.time > b.time;
        return a.sequence > b.sequence;
    }
};

struct OccupancyTracker {
    int cell = 0;
    std::vector<double> time_in_state;
    std::int64_t events = 0;
};

MetricsReport run_impl(const Scenario& scenario, OccupancyTracker* occupancy) {
    const int num_cells = static_cast<int>(scenario.layout.cells().size());
    if (static_cast<int>(scenario.traffic.arrival_rates.size()) != num_cells)
        throw ConfigError("traffic profile must list one arrival rate per cell");
    if (!(scenario.traffic.mean_holding_s > 0.0))
        throw ConfigError("mean holding time must be positive");
    if (!(scenario.duration_s > scenario.warmup_s) || scenario.warmup_s < 0.0)
        throw ConfigError("need duration > warmup >= 0");

    LedgerBook book(scenario.layout, scenario.channels_per_cell, scenario.threshold);

    std::vector<ExpStream> streams;
    streams.reserve(num_cells);
    for (int c = 0; c < num_cells; ++c)
        streams.emplace_back(mix(scenario.seed ^ mix(static_cast<std::uint64_t>(c) + 1)));

    std::priority_queue<Event, std::vector<Event>, EventAfter> queue;
    std::uint64_t next_seq = 0;

    // Each arrival event pre-draws its holding time so the per-cell random
    // streams advance identically whether or not the call is later admitted
    // (common random numbers across borrowing on/off runs).
    std::vector<double> pending_holding(num_cells, 0.0);
    auto schedule_arrival = [&](int cell_idx, double now) {
        const double rate = scenario.traffic.arrival_rates[cell_idx];
        if (rate <= 0.0)
            return;
        const double t = now + streams[cell_idx].draw(1.0 / rate);
        if (t >= scenario.duration_s)
            return;
        queue.push({t, next_seq++, Event::Kind::Arrival, cell_idx + 1, {}});
    };
    for (int c = 0; c < num_cells; ++c)
        schedule_arrival(c, 0.0);

    MetricsReport report;
    report.cells.resize(num_cells);

    const double window = scenario.duration_s - scenario.warmup_s;
    double busy_integral = 0.0;
    double borrowed_integral = 0.0;
    double last_time = 0.0;
    double last_event_checked = 0.0;

    auto accumulate = [&](double now) {
        const double lo = std::max(last_time, scenario.warmup_s);
        const double hi = std::min(now, scenario.duration_s);
        if (hi > lo) {
            busy_integral += static_cast<double>(book.busy_total()) * (hi - lo);
            borrowed_integral += static_cast<double>(book.borrowed_total()) * (hi - lo);
            if (occupancy) {
                const ChannelLedger& l = book.ledger(occupancy->cell);
                const int state = l.busy_own + l.busy_borrowed();
                occupancy->time_in_state[static_cast<size_t>(state)] += hi - lo;
            }
        }
        last_time = now;
    };

    while (!queue.empty()) {
        const Event ev = queue.top();
        queue.pop();
        if (ev.time < last_time)
            throw StateError("event time moved backwards");
        accumulate(ev.time);

        const bool in_window = ev.time >= scenario.warmup_s && ev.time < scenario.duration_s;
        if (ev.kind == Event::Kind::Arrival) {
            const int idx = ev.cell - 1;
            const double holding = streams[idx].draw(scenario.traffic.mean_holding_s);
            schedule_arrival(idx, ev.time);

            const int borrowed_before = book.borrowed_total();
            const AdmissionResult result = book.admit_call(ev.cell, scenario.borrowing_enabled);
            if (in_window) {
                ++report.cells[idx].offered;
                if (occupancy && occupancy->cell == ev.cell)
                    ++occupancy->events;
            }
            if (result.admitted) {
                if (in_window) {
                    ++report.cells[idx].admitted;
                    if (book.borrowed_total() > borrowed_before)
                        ++report.borrow_events;
                }
                queue.push({ev.time + holding, next_seq++, Event::Kind::Departure, ev.cell,
                            result.assignment});
            } else if (in_window) {
                ++report.cells[idx].blocked;
            }
        } else {
            book.release_call(ev.assignment);
        }

#ifndef NDEBUG
        book.check_invariants();
#else
        // Full invariant sweep is too costly per event in release; sample it.
        if (ev.time - last_event_checked > scenario.duration_s / 256.0) {
            book.check_invariants();
            last_event_checked = ev.time;
        }
#endif
    }
    accumulate(scenario.duration_s);

    book.check_invariants();
    if (!book.pristine())
        throw StateError("ledgers not pristine after draining all calls");

    // Per-cell empirical blocking and the two overall metrics.
    std::vector<double> lambdas, blocking, capacities;
    double total_rate = 0.0;
    for (int c = 0; c < num_cells; ++c) {
        CellStats& s = report.cells[c];
        if (s.offered > 0) {
            s.empirical_blocking = static_cast<double>(s.blocked) / static_cast<double>(s.offered);
        } else {
            s.zero_samples = true;
        }
        lambdas.push_back(scenario.traffic.arrival_rates[c]);
        blocking.push_back(s.empirical_blocking);
        capacities.push_back(static_cast<double>(scenario.channels_per_cell));
        total_rate += scenario.traffic.arrival_rates[c];
    }
    const OverallBlocking paper = overall_blocking_paper(lambdas, blocking, capacities);
    report.overall_blocking_paper = paper.value;
    report.overall_paper_in_range = paper.in_unit_range;
    if (total_rate > 0.0) {
        report.overall_blocking_weighted = overall_blocking_weighted(lambdas, blocking);
    } else {
        report.overall_blocking_weighted = 0.0;
        report.zero_traffic = true;
    }
    const double owned_total = static_cast<double>(scenario.channels_per_cell) * num_cells;
    report.utilization = owned_total > 0.0 ? busy_integral / (window * owned_total) : 0.0;
    report.mean_borrowed = borrowed_integral / window;
    return report;
}

} // namespace

double TrafficProfile::arrival_rate(int cell) const {
    if (cell < 1 || cell > static_cast<int>(arrival_rates.size()))
        throw DomainError("no arrival rate for cell " + std::to_string(cell));
    return arrival_rates[static_cast<size_t>(cell) - 1];
}

MetricsReport run_scenario(const Scenario& scenario) {
    return run_impl(scenario, nullptr);
}

std::vector<SweepPoint> sweep(const Scenario& base, const std::vector<double>& lambda_ref_list) {
    if (lambda_ref_list.empty())
        throw DomainError("sweep needs at least one arrival rate");
    if (!std::is_sorted(lambda_ref_list.begin(), lambda_ref_list.end()))
        throw DomainError("sweep arrival rates must be increasing");

    std::vector<SweepPoint> out;
    for (double lambda : lambda_ref_list) {
        Scenario scenario = base;
        scenario.traffic.arrival_rates[0] = lambda;
        SweepPoint point;
        point.lambda_ref = lambda;
        scenario.borrowing_enabled = false;
        point.without_borrowing = run_scenario(scenario);
        scenario.borrowing_enabled = true;
        point.with_borrowing = run_scenario(scenario);
        out.push_back(std::move(point));
    }
    return out;
}

StateDistribution empirical_state_distribution(const Scenario& scenario, int cell) {
    if (scenario.borrowing_enabled)
        throw ConfigError("state distribution measurement requires borrowing disabled");

    OccupancyTracker tracker;
    tracker.cell = cell;
    tracker.time_in_state.assign(static_cast<size_t>(scenario.channels_per_cell) + 1, 0.0);
    run_impl(scenario, &tracker);

    if (tracker.events < 1000 && scenario.traffic.arrival_rate(cell) > 0.0)
        throw InsufficientDataError("fewer than 1000 post-warmup arrivals in cell " +
                                    std::to_string(cell));

    double total = 0.0;
    for (double t : tracker.time_in_state)
        total += t;
    StateDistribution dist;
    dist.probabilities.resize(tracker.time_in_state.size());
    if (total > 0.0) {
        for (size_t i = 0; i < dist.probabilities.size(); ++i)
            dist.probabilities[i] = tracker.time_in_state[i] / total;
    } else {
        dist.probabilities[0] = 1.0;
    }
    return dist;
}

} // namespace dcb
