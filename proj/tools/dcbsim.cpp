// dcbsim: analytic tables, borrowing sweeps and SINR profiles for the
// 7-cell dynamic channel borrowing cluster. Emits CSV for plotting.

#include "dcb/config.hpp"
#include "dcb/csv.hpp"
#include "dcb/erlang.hpp"
#include "dcb/errors.hpp"
#include "dcb/propagation.hpp"
#include "dcb/selfcheck.hpp"
#include "dcb/simulator.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitValidation = 3;
constexpr int kExitRuntime = 4;

// "1,2,5" or "1:10:1" (inclusive range), mixes allowed: "0.5,1:3:1".
std::vector<double> parse_list(const std::string& text) {
    std::vector<double> out;
    size_t pos = 0;
    while (pos <= text.size()) {
        const size_t comma = text.find(',', pos);
        const std::string item = text.substr(pos, comma == std::string::npos ? std::string::npos
                                                                             : comma - pos);
        if (item.empty())
            throw dcb::ConfigError("empty element in list '" + text + "'");
        const size_t c1 = item.find(':');
        if (c1 == std::string::npos) {
            out.push_back(std::stod(item));
        } else {
            const size_t c2 = item.find(':', c1 + 1);
            if (c2 == std::string::npos)
                throw dcb::ConfigError("range needs start:stop:step, got '" + item + "'");
            const double start = std::stod(item.substr(0, c1));
            const double stop = std::stod(item.substr(c1 + 1, c2 - c1 - 1));
            const double step = std::stod(item.substr(c2 + 1));
            if (!(step > 0.0) || stop < start)
                throw dcb::ConfigError("bad range '" + item + "'");
            for (double v = start; v <= stop + step * 1e-9; v += step)
                out.push_back(v);
        }
        if (comma == std::string::npos)
            break;
        pos = comma + 1;
    }
    if (out.empty())
        throw dcb::ConfigError("empty list");
    return out;
}

void emit(const std::string& csv, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << csv;
        return;
    }
    std::ofstream f(out_path, std::ios::binary);
    if (!f)
        throw dcb::ConfigError("cannot open output file '" + out_path + "'");
    f << csv;
}

struct CommonOpts {
    std::string config_path;
    std::string out_path;
    std::optional<std::uint64_t> seed;
    int precision = 6;
};

dcb::Config load(const CommonOpts& opts) {
    dcb::Config cfg = opts.config_path.empty() ? dcb::Config{} : dcb::load_config(opts.config_path);
    if (opts.seed)
        cfg.seed = *opts.seed;
    cfg.validate();
    return cfg;
}

int cmd_analytic(const CommonOpts& opts, const std::string& loads_text,
                 const std::string& ns_text) {
    const dcb::Config cfg = load(opts);
    const std::vector<double> loads = parse_list(loads_text);
    const std::vector<double> ns = parse_list(ns_text);

    dcb::CsvWriter csv({"load_erlangs", "N", "erlang_b", "overall_paper", "overall_weighted"},
                       opts.precision);
    for (double a : loads) {
        for (double n_raw : ns) {
            const int n = static_cast<int>(n_raw);
            const double pb = dcb::erlang_b(a, n);
            const double lambda = a / cfg.mean_holding_s;
            const double lambdas[] = {lambda};
            const double blocking[] = {pb};
            const double caps[] = {static_cast<double>(n)};
            const auto paper = dcb::overall_blocking_paper(lambdas, blocking, caps);
            const double weighted = lambda > 0.0 ? dcb::overall_blocking_weighted(lambdas, blocking)
                                                 : 0.0;
            csv.begin_row();
            csv.add(a);
            csv.add(static_cast<double>(n));
            csv.add(pb);
            csv.add(paper.value);
            csv.add(weighted);
            csv.end_row();
        }
    }
    emit(csv.str(), opts.out_path);
    return kExitOk;
}

int cmd_sweep(const CommonOpts& opts, const std::string& lambdas_text) {
    const dcb::Config cfg = load(opts);
    const std::vector<double> lambdas = parse_list(lambdas_text);

    const dcb::Scenario base = cfg.make_scenario(false);
    const auto points = dcb::sweep(base, lambdas);

    dcb::CsvWriter csv({"lambda_ref", "pblock_paper_before", "pblock_paper_after",
                        "pblock_weighted_before", "pblock_weighted_after", "utilization_before",
                        "utilization_after", "mean_borrowed"},
                       opts.precision);
    for (const dcb::SweepPoint& p : points) {
        csv.begin_row();
        csv.add(p.lambda_ref);
        csv.add(p.without_borrowing.overall_blocking_paper);
        csv.add(p.with_borrowing.overall_blocking_paper);
        csv.add(p.without_borrowing.overall_blocking_weighted);
        csv.add(p.with_borrowing.overall_blocking_weighted);
        csv.add(p.without_borrowing.utilization);
        csv.add(p.with_borrowing.utilization);
        csv.add(p.with_borrowing.mean_borrowed);
        csv.end_row();
    }
    emit(csv.str(), opts.out_path);
    return kExitOk;
}

int cmd_sinr(const CommonOpts& opts, const std::string& rs_text) {
    const dcb::Config cfg = load(opts);
    const std::vector<double> rs = parse_list(rs_text);

    const dcb::ClusterLayout layout = cfg.make_layout();
    const dcb::RadioEnvironment env = cfg.make_environment();
    for (double r : rs) {
        if (!(r > 0.0) || r > env.cell_radius_m)
            throw dcb::DomainError("r = " + std::to_string(r) +
                                   " m outside (0, cell radius]");
    }

    // Profile of cell 1 serving on a channel borrowed from group B: without
    // management the donor still counts as an interferer; with management it
    // is silenced and service is limited to the inner region.
    dcb::CsvWriter csv({"r_m", "sinr_no_mgmt_db", "sinr_mgmt_db"}, opts.precision);
    for (double r : rs) {
        const auto off = dcb::sinr_db(env, layout, r, 1, dcb::Group::B, dcb::Management::Off);
        csv.begin_row();
        csv.add(r);
        csv.add(off.sinr_db);
        if (r <= env.inner_radius_m()) {
            const auto on = dcb::sinr_db(env, layout, r, 1, dcb::Group::B, dcb::Management::On);
            csv.add(on.sinr_db);
        } else {
            csv.add_empty();
        }
        csv.end_row();
    }
    emit(csv.str(), opts.out_path);
    return kExitOk;
}

int cmd_validate(const CommonOpts& opts) {
    const dcb::Config cfg = load(opts);
    const auto results = dcb::run_selfcheck(cfg);
    bool all_ok = true;
    for (const dcb::CheckResult& r : results) {
        all_ok = all_ok && r.passed;
        std::printf("%s  %-40s measured=%.3g tolerance=%.3g\n", r.passed ? "PASS" : "FAIL",
                    r.name.c_str(), r.measured, r.tolerance);
    }
    return all_ok ? kExitOk : kExitValidation;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"dynamic channel borrowing simulator"};
    app.require_subcommand(1);

    CommonOpts opts;
    std::string loads_text = "20:200:20";
    std::string ns_text = "100";
    std::string lambdas_text;
    std::string rs_text = "50:1000:50";
    std::uint64_t seed_flag = 0;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--config", opts.config_path, "flat key=value config file");
        sub->add_option("--out", opts.out_path, "output path (default stdout)");
        sub->add_option("--precision", opts.precision, "CSV significant digits")
            ->check(CLI::Range(1, 17));
        sub->add_option("--seed", seed_flag, "override the config seed")
            ->each([&](const std::string&) { opts.seed = seed_flag; });
    };

    CLI::App* analytic = app.add_subcommand("analytic", "Erlang-B and overall blocking tables");
    add_common(analytic);
    analytic->add_option("--loads", loads_text, "offered loads in Erlangs (list or a:b:step)");
    analytic->add_option("--channels", ns_text, "channel counts N (list or a:b:step)");

    CLI::App* sweep_cmd = app.add_subcommand("sweep", "paired borrowing on/off simulation sweep");
    add_common(sweep_cmd);
    sweep_cmd->add_option("--lambda-list", lambdas_text,
                          "reference-cell arrival rates in calls/s (increasing)")
        ->required();

    CLI::App* sinr_cmd = app.add_subcommand("sinr", "downlink SINR profile of the reference cell");
    add_common(sinr_cmd);
    sinr_cmd->add_option("--r-list", rs_text, "user distances in meters");

    CLI::App* validate_cmd = app.add_subcommand("validate", "run the fast invariant suite");
    add_common(validate_cmd);

    CLI11_PARSE(app, argc, argv);

    try {
        if (analytic->parsed())
            return cmd_analytic(opts, loads_text, ns_text);
        if (sweep_cmd->parsed())
            return cmd_sweep(opts, lambdas_text);
        if (sinr_cmd->parsed())
            return cmd_sinr(opts, rs_text);
        return cmd_validate(opts);
    } catch (const dcb::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const dcb::DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const std::exception& e) {
        std::cerr << "runtime error: " << e.what() << "\n";
        return kExitRuntime;
    }
}
