#include "dcb/erlang.hpp"

#include "dcb/errors.hpp"

#include <cmath>
#include <numeric>
#include <string>

namespace dcb {

namespace {

void check_load(const OfferedLoad& load) {
    if (!(load.service_rate > 0.0))
        throw DomainError("service rate must be positive");
    if (load.arrival_rate < 0.0)
        throw DomainError("arrival rate must be nonnegative");
}

} // namespace

StateDistribution state_distribution(const OfferedLoad& load, int capacity) {
    check_load(load);
    if (capacity < 0)
        throw DomainError("capacity must be nonnegative");

    const double a = load.erlangs();
    // Unnormalized weights w(i) = a^i/i! built by the recurrence
    // w(i) = w(i-1)*a/i; renormalize on the fly so no term overflows.
    std::vector<double> w(static_cast<size_t>(capacity) + 1);
    w[0] = 1.0;
    double sum = 1.0;
    for (int i = 1; i <= capacity; ++i) {
        w[i] = w[i - 1] * a / i;
        sum += w[i];
        if (sum > 1e300) {
            for (int k = 0; k <= i; ++k)
                w[k] /= sum;
            sum = 1.0;
        }
    }
    StateDistribution dist;
    dist.probabilities.resize(w.size());
    for (size_t i = 0; i < w.size(); ++i)
        dist.probabilities[i] = w[i] / sum;
    return dist;
}

double erlang_b(const OfferedLoad& load, int capacity) {
    const StateDistribution dist = state_distribution(load, capacity);
    return dist.probabilities.back();
}

double erlang_b(double erlangs, int capacity) {
    return erlang_b(OfferedLoad::from_erlangs(erlangs), capacity);
}

double erlang_b_recursive(double erlangs, int capacity) {
    if (erlangs < 0.0)
        throw DomainError("offered load must be nonnegative");
    if (capacity < 0)
        throw DomainError("capacity must be nonnegative");
    double b = 1.0;
    for (int k = 1; k <= capacity; ++k)
        b = erlangs * b / (k + erlangs * b);
    return b;
}

OverallBlocking overall_blocking_paper(std::span<const double> arrival_rates,
                                       std::span<const double> blocking,
                                       std::span<const double> capacities) {
    const size_t m = arrival_rates.size();
    if (m == 0)
        throw DomainError("overall blocking needs at least one cell");
    if (blocking.size() != m || capacities.size() != m)
        throw DomainError("per-cell input lengths differ");

    double carried = 0.0;
    double total_capacity = 0.0;
    for (size_t i = 0; i < m; ++i) {
        if (arrival_rates[i] < 0.0 || capacities[i] < 0.0)
            throw DomainError("arrival rates and capacities must be nonnegative");
        if (blocking[i] < 0.0 || blocking[i] > 1.0)
            throw DomainError("blocking probabilities must lie in [0,1]");
        carried += arrival_rates[i] * (1.0 - blocking[i]);
        total_capacity += capacities[i];
    }
    if (!(total_capacity > 0.0))
        throw DomainError("total capacity must be positive");

    OverallBlocking out;
    out.value = 1.0 - carried / (static_cast<double>(m) * total_capacity);
    out.in_unit_range = out.value >= 0.0 && out.value <= 1.0;
    return out;
}

double overall_blocking_weighted(std::span<const double> arrival_rates,
                                 std::span<const double> blocking) {
    if (arrival_rates.size() != blocking.size())
        throw DomainError("per-cell input lengths differ");
    double num = 0.0;
    double den = 0.0;
    for (size_t i = 0; i < arrival_rates.size(); ++i) {
        if (arrival_rates[i] < 0.0)
            throw DomainError("arrival rates must be nonnegative");
        if (blocking[i] < 0.0 || blocking[i] > 1.0)
            throw DomainError("blocking probabilities must lie in [0,1]");
        num += arrival_rates[i] * blocking[i];
        den += arrival_rates[i];
    }
    if (!(den > 0.0))
        throw DomainError("total arrival rate must be positive");
    return num / den;
}

std::vector<int> adjusted_capacities(std::vector<int> base,
                                     const std::vector<ChannelTransfer>& transfers) {
    auto at = [&base](int cell) -> int& {
        if (cell < 1 || cell > static_cast<int>(base.size()))
            throw DomainError("cell index " + std::to_string(cell) + " out of range");
        return base[static_cast<size_t>(cell) - 1];
    };
    for (const ChannelTransfer& t : transfers) {
        if (t.count < 0)
            throw DomainError("transfer count must be nonnegative");
        int& donor = at(t.donor);
        if (donor < t.count)
            throw StateError("donor cell " + std::to_string(t.donor) + " has only " +
                             std::to_string(donor) + " channels, cannot lend " +
                             std::to_string(t.count));
        donor -= t.count;
        at(t.borrower) += t.count;
    }
    return base;
}

} // namespace dcb
