#include "dcb/config.hpp"

#include "dcb/errors.hpp"

#include <fstream>
#include <sstream>
#include <string>

namespace dcb {

namespace {

std::string trim(const std::string& s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string::npos)
        return "";
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

double parse_double(const std::string& value, const std::string& key, int line) {
    size_t pos = 0;
    double v = 0.0;
    try {
        v = std::stod(value, &pos);
    } catch (const std::exception&) {
        pos = 0;
    }
    if (pos != value.size())
        throw ConfigError("line " + std::to_string(line) + ": key '" + key +
                          "' has non-numeric value '" + value + "'");
    return v;
}

std::uint64_t parse_u64(const std::string& value, const std::string& key, int line) {
    size_t pos = 0;
    std::uint64_t v = 0;
    try {
        v = std::stoull(value, &pos);
    } catch (const std::exception&) {
        pos = 0;
    }
    if (pos != value.size())
        throw ConfigError("line " + std::to_string(line) + ": key '" + key +
                          "' has non-integer value '" + value + "'");
    return v;
}

} // namespace

void Config::validate() const {
    auto fail = [](const std::string& msg) { throw ConfigError("config: " + msg); };
    if (cells != 7)
        fail("cells must be 7");
    if (reuse != 3)
        fail("reuse must be 3");
    if (channels_per_cell < 0)
        fail("channels_per_cell must be nonnegative");
    if (threshold < 0 || threshold > channels_per_cell)
        fail("threshold must lie in [0, channels_per_cell]");
    if (lambda_ref < 0.0 || lambda_background < 0.0)
        fail("arrival rates must be nonnegative");
    if (!(mean_holding_s > 0.0))
        fail("mean_holding_s must be positive");
    if (!(carrier_mhz > 0.0))
        fail("carrier_mhz must be positive");
    if (!(bs_height_m > 0.0) || !(ms_height_m > 0.0))
        fail("antenna heights must be positive");
    if (!(tx_power_kw > 0.0))
        fail("tx_power_kw must be positive");
    if (!(cell_radius_km > 0.0))
        fail("cell_radius_km must be positive");
    if (!(inner_radius_fraction > 0.0) || !(inner_radius_fraction < 1.0))
        fail("inner_radius_fraction must lie in (0,1)");
    if (warmup_s < 0.0 || !(duration_s > warmup_s))
        fail("need duration_s > warmup_s >= 0");
}

ClusterLayout Config::make_layout() const {
    return ClusterLayout::build(cells, reuse, cell_radius_km * 1000.0);
}

RadioEnvironment Config::make_environment() const {
    RadioEnvironment env;
    env.carrier_mhz = carrier_mhz;
    env.bs_height_m = bs_height_m;
    env.ms_height_m = ms_height_m;
    env.tx_power_w = tx_power_kw * 1000.0;
    env.noise_dbm = noise_dbm;
    env.cell_radius_m = cell_radius_km * 1000.0;
    env.inner_radius_fraction = inner_radius_fraction;
    return env;
}

Scenario Config::make_scenario(bool borrowing_enabled) const {
    Scenario s;
    s.layout = make_layout();
    s.traffic.arrival_rates.assign(static_cast<size_t>(cells), lambda_background);
    s.traffic.arrival_rates[0] = lambda_ref;
    s.traffic.mean_holding_s = mean_holding_s;
    s.channels_per_cell = channels_per_cell;
    s.threshold = threshold;
    s.borrowing_enabled = borrowing_enabled;
    s.duration_s = duration_s;
    s.warmup_s = warmup_s;
    s.seed = seed;
    return s;
}

Config parse_config(std::istream& in) {
    Config cfg;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto hash = line.find('#');
        if (hash != std::string::npos)
            line = line.substr(0, hash);
        line = trim(line);
        if (line.empty())
            continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError("line " + std::to_string(line_no) + ": expected key = value");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (value.empty())
            throw ConfigError("line " + std::to_string(line_no) + ": key '" + key +
                              "' has no value");

        auto num = [&] { return parse_double(value, key, line_no); };
        if (key == "cells")
            cfg.cells = static_cast<int>(num());
        else if (key == "channels_per_cell")
            cfg.channels_per_cell = static_cast<int>(num());
        else if (key == "reuse")
            cfg.reuse = static_cast<int>(num());
        else if (key == "threshold")
            cfg.threshold = static_cast<int>(num());
        else if (key == "lambda_ref")
            cfg.lambda_ref = num();
        else if (key == "lambda_background")
            cfg.lambda_background = num();
        else if (key == "mean_holding_s")
            cfg.mean_holding_s = num();
        else if (key == "carrier_mhz")
            cfg.carrier_mhz = num();
        else if (key == "bs_height_m")
            cfg.bs_height_m = num();
        else if (key == "ms_height_m")
            cfg.ms_height_m = num();
        else if (key == "tx_power_kw")
            cfg.tx_power_kw = num();
        else if (key == "noise_dbm")
            cfg.noise_dbm = num();
        else if (key == "cell_radius_km")
            cfg.cell_radius_km = num();
        else if (key == "inner_radius_fraction")
            cfg.inner_radius_fraction = num();
        else if (key == "duration_s")
            cfg.duration_s = num();
        else if (key == "warmup_s")
            cfg.warmup_s = num();
        else if (key == "seed")
            cfg.seed = parse_u64(value, key, line_no);
        else
            throw ConfigError("line " + std::to_string(line_no) + ": unknown key '" + key + "'");
    }
    return cfg;
}

Config load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw ConfigError("cannot open config file '" + path + "'");
    return parse_config(in);
}

} // namespace dcb
