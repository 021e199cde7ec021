// Acceptance suite: exercises the full stack end to end and prints one
// PASS/FAIL line per criterion. Expects the CLI binary path as argv[1]
// (used by the byte-determinism criterion; that criterion fails if the
// path is missing).

#include "dcb/borrowing.hpp"
#include "dcb/erlang.hpp"
#include "dcb/propagation.hpp"
#include "dcb/simulator.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace dcb;

namespace {

int failures = 0;

void report(int criterion, const std::string& name, bool ok, const std::string& detail) {
    std::printf("%s  criterion %2d: %s (%s)\n", ok ? "PASS" : "FAIL", criterion, name.c_str(),
                detail.c_str());
    if (!ok)
        ++failures;
}

double erlang_b_oracle(double a, int n) {
    double b = 1.0;
    for (int k = 1; k <= n; ++k)
        b = a * b / (k + a * b);
    return b;
}

std::string fmt(double v) {
    std::ostringstream os;
    os.precision(6);
    os << v;
    return os.str();
}

// 1. Closed form vs recursion over the full grid within 1e-10, under 1 s.
void criterion_1() {
    const auto t0 = std::chrono::steady_clock::now();
    double worst = 0.0;
    for (int n = 1; n <= 200; ++n)
        for (double a = 0.5; a <= 200.0; a += 0.5)
            worst = std::max(worst, std::abs(erlang_b(a, n) - erlang_b_oracle(a, n)));
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    report(1, "Erlang-B closed form vs recursion", worst <= 1e-10 && secs < 1.0,
           "worst diff " + fmt(worst) + ", " + fmt(secs) + " s");
}

// 2. Single-cell simulation vs the recursion oracle at a = N = 100.
void criterion_2() {
    Scenario s;
    s.layout = ClusterLayout::build(7, 3, 1000.0);
    s.traffic.arrival_rates.assign(7, 0.0);
    s.traffic.arrival_rates[0] = 100.0 / 90.0;
    s.traffic.mean_holding_s = 90.0;
    s.channels_per_cell = 100;
    s.threshold = 70;
    s.borrowing_enabled = false;
    s.duration_s = 9.5e5;
    s.warmup_s = 1e4;
    s.seed = 2024;

    const MetricsReport r = run_scenario(s);
    const double target = erlang_b_oracle(100.0, 100); // 0.0757004527...
    const double err = std::abs(r.cells[0].empirical_blocking - target);
    report(2, "simulation vs Erlang-B oracle",
           r.cells[0].offered >= 1000000 && err <= 0.005,
           std::to_string(r.cells[0].offered) + " arrivals, |err| " + fmt(err));
}

// 3. Time-weighted occupancy vs the analytic M/M/5/5 distribution.
void criterion_3() {
    Scenario s;
    s.layout = ClusterLayout::build(7, 3, 1000.0);
    s.traffic.arrival_rates.assign(7, 0.0);
    s.traffic.arrival_rates[0] = 2.0;
    s.traffic.mean_holding_s = 1.0; // a = 2 E
    s.channels_per_cell = 5;
    s.threshold = 3;
    s.borrowing_enabled = false;
    s.duration_s = 1e5;
    s.warmup_s = 100.0;
    s.seed = 3;

    const StateDistribution emp = empirical_state_distribution(s, 1);
    const StateDistribution ana = state_distribution(OfferedLoad::from_erlangs(2.0), 5);
    double tv = 0.0;
    for (size_t i = 0; i < emp.probabilities.size(); ++i)
        tv += std::abs(emp.probabilities[i] - ana.probabilities[i]);
    tv /= 2.0;
    report(3, "empirical state distribution", tv <= 0.01, "TV distance " + fmt(tv));
}

// 4 and 5. The borrowing sweep: blocking never worse, strictly better once
// the reference cell is overloaded; utilization never worse.
void criteria_4_5() {
    Scenario base;
    base.layout = ClusterLayout::build(7, 3, 1000.0);
    base.traffic.arrival_rates.assign(7, 40.0 / 90.0); // background a = 40 E
    base.traffic.mean_holding_s = 90.0;
    base.channels_per_cell = 100;
    base.threshold = 70;
    base.duration_s = 3e5;
    base.warmup_s = 1e4;
    base.seed = 7;

    std::vector<double> lambdas;
    for (double a = 60.0; a <= 160.0 + 1e-9; a += 20.0)
        lambdas.push_back(a / 90.0);
    const auto points = sweep(base, lambdas);

    bool blocking_ok = true, strict_ok = true, util_ok = true;
    std::string worst;
    for (size_t i = 0; i < points.size(); ++i) {
        const SweepPoint& p = points[i];
        const double before = p.without_borrowing.overall_blocking_weighted;
        const double after = p.with_borrowing.overall_blocking_weighted;
        if (after > before + 0.01)
            blocking_ok = false;
        const double a_ref = p.lambda_ref * 90.0;
        if (a_ref >= 100.0 - 1e-9 && !(after < before))
            strict_ok = false;
        if (p.with_borrowing.utilization < p.without_borrowing.utilization - 0.01)
            util_ok = false;
        worst += (i ? " " : "") + fmt(before) + "->" + fmt(after);
    }
    report(4, "sweep blocking trend", blocking_ok && strict_ok, worst);

    std::string util;
    for (size_t i = 0; i < points.size(); ++i)
        util += (i ? " " : "") + fmt(points[i].without_borrowing.utilization) + "->" +
                fmt(points[i].with_borrowing.utilization);
    report(5, "sweep utilization trend", util_ok, util);
}

// 6. Path-loss golden value and distance slope.
void criterion_6() {
    RadioEnvironment env;
    const double l1 = path_loss_db(env, 1.0);
    const double slope = path_loss_db(env, 10.0) - l1;
    const bool ok = std::abs(l1 - 127.13) <= 0.01 && std::abs(slope - 31.8) <= 1e-9;
    report(6, "path-loss golden value", ok,
           "L(1km) " + fmt(l1) + " dB, slope " + fmt(slope) + " dB/decade");
}

// 7. SINR profile monotonicity and the management gain.
void criterion_7() {
    RadioEnvironment env;
    const ClusterLayout layout = ClusterLayout::build(7, 3, 1000.0);
    bool decreasing = true, gain = true;
    double prev = 1e18;
    for (double r = 50.0; r <= 1000.0 + 1e-9; r += 50.0) {
        const auto off = sinr_db(env, layout, r, 1, Group::B, Management::Off);
        if (!(off.sinr_db < prev))
            decreasing = false;
        prev = off.sinr_db;
        if (r <= env.inner_radius_m()) {
            const auto on = sinr_db(env, layout, r, 1, Group::B, Management::On);
            // donor interference is always nonzero here, so strictly greater
            if (!(on.sinr_db > off.sinr_db))
                gain = false;
        }
    }
    report(7, "SINR profile trend", decreasing && gain,
           std::string("no-mgmt strictly decreasing: ") + (decreasing ? "yes" : "no") +
               ", mgmt gain strict: " + (gain ? "yes" : "no"));
}

// 8. Conservation fuzz over the whole cluster with borrowing on.
void criterion_8() {
    const auto t0 = std::chrono::steady_clock::now();
    const ClusterLayout layout = ClusterLayout::build(7, 3, 1000.0);
    LedgerBook book(layout, 40, 28);
    std::mt19937_64 rng(4242);
    std::uniform_int_distribution<int> cell_pick(1, 7);
    std::vector<ChannelAssignment> held;
    int violations = 0;
    const int initial_owned_total = 7 * 40;

    for (int step = 0; step < 100000; ++step) {
        if (!held.empty() && (rng() % 2 == 0)) {
            std::uniform_int_distribution<size_t> pick(0, held.size() - 1);
            const size_t i = pick(rng);
            book.release_call(held[i]);
            held[i] = held.back();
            held.pop_back();
        } else {
            const auto r = book.admit_call(cell_pick(rng), true);
            if (r.admitted)
                held.push_back(r.assignment);
        }
        try {
            book.check_invariants();
        } catch (const std::exception&) {
            ++violations;
        }
        int owned = 0, lent = 0, borrowed = 0;
        for (const ChannelLedger& l : book.ledgers()) {
            owned += l.owned;
            lent += l.total_lent();
            borrowed += l.total_borrowed();
            if (l.lendable() < 0)
                ++violations;
        }
        if (owned != initial_owned_total || lent != borrowed)
            ++violations;
    }
    for (const auto& a : held)
        book.release_call(a);
    const bool pristine = book.pristine();
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    report(8, "conservation fuzz", violations == 0 && pristine && secs < 30.0,
           std::to_string(violations) + " violations, pristine " + (pristine ? "yes" : "no") +
               ", " + fmt(secs) + " s");
}

// 9. Byte-identical CLI output under a fixed config and seed.
void criterion_9(const char* cli_path) {
    if (cli_path == nullptr) {
        report(9, "CLI byte determinism", false, "CLI path not provided on the command line");
        return;
    }
    const std::string cli = cli_path;
    const std::string cfg_path = "acceptance_sweep.cfg";
    {
        std::ofstream cfg(cfg_path);
        cfg << "duration_s = 2000\nwarmup_s = 100\nseed = 11\n";
    }
    auto run = [&](const std::string& args, const std::string& out) {
        const std::string cmd = "\"" + cli + "\" " + args + " --out " + out;
        return std::system(cmd.c_str()) == 0;
    };
    auto slurp = [](const std::string& path) {
        std::ifstream f(path, std::ios::binary);
        std::ostringstream os;
        os << f.rdbuf();
        return os.str();
    };

    bool ok = true;
    std::string detail;
    const std::vector<std::pair<std::string, std::string>> cases = {
        {"analytic --loads 1:20:1 --channels 50,100", "acc_analytic"},
        {"sinr --r-list 50:1000:50", "acc_sinr"},
        {"sweep --config " + cfg_path + " --lambda-list 0.5,1.0", "acc_sweep"},
    };
    for (const auto& [args, stem] : cases) {
        const bool r1 = run(args, stem + "_1.csv");
        const bool r2 = run(args, stem + "_2.csv");
        const std::string a = slurp(stem + "_1.csv");
        const std::string b = slurp(stem + "_2.csv");
        if (!r1 || !r2 || a.empty() || a != b) {
            ok = false;
            detail += stem + " differs; ";
        }
    }
    report(9, "CLI byte determinism", ok, ok ? "3 commands, identical bytes" : detail);
}

// 10. The system blocking formula reproduced on hand-substituted cases.
void criterion_10() {
    const double l[] = {50.0, 50.0};
    const double p[] = {0.1, 0.3};
    const double n[] = {100.0, 100.0};
    const auto two_cell = overall_blocking_paper(l, p, n);

    const double lz[] = {0.0, 0.0};
    const double pz[] = {0.0, 0.0};
    const auto zero_traffic = overall_blocking_paper(lz, pz, n);

    const bool ok = std::abs(two_cell.value - 0.8) < 1e-12 &&
                    std::abs(zero_traffic.value - 1.0) < 1e-12;
    report(10, "verbatim system blocking formula", ok,
           "two-cell " + fmt(two_cell.value) + ", zero-traffic " + fmt(zero_traffic.value));
}

} // namespace

int main(int argc, char** argv) {
    criterion_1();
    criterion_2();
    criterion_3();
    criteria_4_5();
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9(argc > 1 ? argv[1] : nullptr);
    criterion_10();
    if (failures)
        std::printf("%d criterion(s) FAILED\n", failures);
    else
        std::printf("all criteria passed\n");
    return failures == 0 ? 0 : 1;
}
