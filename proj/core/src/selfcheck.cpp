#include "dcb/selfcheck.hpp"

#include "dcb/borrowing.hpp"
#include "dcb/errors.hpp"
#include "dcb/erlang.hpp"
#include "dcb/propagation.hpp"

#include <cmath>
#include <random>
#include <vector>

namespace dcb {

namespace {

CheckResult check_erlang_routes() {
    CheckResult r;
    r.name = "erlang_b closed form vs recursion";
    r.tolerance = 1e-10;
    double worst = 0.0;
    for (int n = 1; n <= 200; ++n) {
        for (double a = 0.5; a <= 200.0; a += 0.5) {
            const double diff = std::abs(erlang_b(a, n) - erlang_b_recursive(a, n));
            worst = std::max(worst, diff);
        }
    }
    r.measured = worst;
    r.passed = worst <= r.tolerance;
    return r;
}

CheckResult check_path_loss(const Config& cfg) {
    CheckResult r;
    r.name = "path loss golden value and slope";
    r.tolerance = 0.01;
    RadioEnvironment env = cfg.make_environment();
    env.carrier_mhz = 1800.0;
    env.bs_height_m = 100.0;
    env.ms_height_m = 1.5;
    env.standard_correction = false;
    const double l1 = path_loss_db(env, 1.0);
    const double slope = path_loss_db(env, 10.0) - l1;
    const double dev = std::max(std::abs(l1 - 127.13), std::abs(slope - 31.8));
    r.measured = dev;
    r.passed = dev <= r.tolerance;
    return r;
}

CheckResult check_conservation(const Config& cfg) {
    CheckResult r;
    r.name = "ledger conservation fuzz";
    r.tolerance = 0.0;

    const ClusterLayout layout = cfg.make_layout();
    LedgerBook book(layout, cfg.channels_per_cell, cfg.threshold);
    std::mt19937_64 rng(12345);
    std::uniform_int_distribution<int> cell_pick(1, static_cast<int>(layout.cells().size()));
    std::vector<ChannelAssignment> held;
    int violations = 0;

    for (int step = 0; step < 20000; ++step) {
        const bool release = !held.empty() && (rng() & 1);
        if (release) {
            std::uniform_int_distribution<size_t> pick(0, held.size() - 1);
            const size_t i = pick(rng);
            book.release_call(held[i]);
            held[i] = held.back();
            held.pop_back();
        } else {
            const AdmissionResult res = book.admit_call(cell_pick(rng), true);
            if (res.admitted)
                held.push_back(res.assignment);
        }
        try {
            book.check_invariants();
        } catch (const StateError&) {
            ++violations;
        }
    }
    for (const ChannelAssignment& a : held)
        book.release_call(a);
    if (!book.pristine())
        ++violations;

    r.measured = violations;
    r.passed = violations == 0;
    return r;
}

} // namespace

std::vector<CheckResult> run_selfcheck(const Config& cfg) {
    std::vector<CheckResult> out;
    out.push_back(check_erlang_routes());
    out.push_back(check_path_loss(cfg));
    out.push_back(check_conservation(cfg));
    return out;
}

} // namespace dcb
