#pragma once

#include "dcb/propagation.hpp"
#include "dcb/simulator.hpp"

#include <cstdint>
#include <iosfwd>
#include <string>

namespace dcb {

// Flat key = value scenario configuration. Every key is optional; defaults
// are the standard 7-cell / 100-channel / reuse-3 setup.
struct Config {
    int cells = 7;
    int channels_per_cell = 100;
    int reuse = 3;
    int threshold = 70;
    double lambda_ref = 100.0 / 90.0;      // calls/s (a = 100 E at 90 s holding)
    double lambda_background = 40.0 / 90.0; // calls/s (a = 40 E)
    double mean_holding_s = 90.0;
    double carrier_mhz = 1800.0;
    double bs_height_m = 100.0;
    double ms_height_m = 1.5;
    double tx_power_kw = 1.5;
    double noise_dbm = -104.0;
    double cell_radius_km = 1.0;
    double inner_radius_fraction = 0.7071;
    double duration_s = 1e6;
    double warmup_s = 1e4;
    std::uint64_t seed = 1;

    // Throws ConfigError naming the offending key when a value is out of range.
    void validate() const;

    ClusterLayout make_layout() const;
    RadioEnvironment make_environment() const;
    Scenario make_scenario(bool borrowing_enabled) const;
};

// Parses `key = value` lines; '#' starts a comment, blank lines ignored.
// Unknown keys and malformed lines raise ConfigError with the line number.
Config parse_config(std::istream& in);
Config load_config(const std::string& path);

} // namespace dcb
