#pragma once

#include <span>
#include <vector>

namespace dcb {

// Offered traffic of one cell: Poisson arrivals at `arrival_rate` calls/s,
// exponential holding with release rate `service_rate` per second.
struct OfferedLoad {
    double arrival_rate = 0.0; // lambda, calls/s
    double service_rate = 1.0; // mu, 1/s

    double erlangs() const { return arrival_rate / service_rate; }
    static OfferedLoad from_erlangs(double a) { return {a, 1.0}; }
};

// Steady-state occupancy of an M/M/N/N loss system. probabilities[i] is the
// probability of i channels busy; sums to 1.
struct StateDistribution {
    std::vector<double> probabilities;
    int capacity() const { return static_cast<int>(probabilities.size()) - 1; }
};

StateDistribution state_distribution(const OfferedLoad& load, int capacity);

// Blocking probability of the M/M/N/N system, i.e. P(N) of the steady state.
// Computed by incremental normalization; stable for large N and load.
double erlang_b(const OfferedLoad& load, int capacity);
double erlang_b(double erlangs, int capacity);

// Classic one-pass recursion B(k) = a*B(k-1) / (k + a*B(k-1)). Kept as an
// independent route for cross-checking the closed form.
double erlang_b_recursive(double erlangs, int capacity);

// System-level blocking metric combining per-cell arrival rates, blocking and
// channel counts: 1 - sum(lambda_m*(1-P_Bm)) / (M * sum(N_m)). The formula is
// unit-sensitive and can leave [0,1]; `in_unit_range` flags that.
struct OverallBlocking {
    double value = 0.0;
    bool in_unit_range = true;
};

OverallBlocking overall_blocking_paper(std::span<const double> arrival_rates,
                                       std::span<const double> blocking,
                                       std::span<const double> capacities);

// Arrival-weighted mean blocking, always in [0,1].
double overall_blocking_weighted(std::span<const double> arrival_rates,
                                 std::span<const double> blocking);

struct ChannelTransfer {
    int donor = 0;    // 1-based cell index into the capacity vector
    int borrower = 0;
    int count = 0;
};

// Applies borrow transfers to per-cell capacities; conserves the total.
std::vector<int> adjusted_capacities(std::vector<int> base,
                                     const std::vector<ChannelTransfer>& transfers);

} // namespace dcb
