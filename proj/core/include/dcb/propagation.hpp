#pragma once

#include "dcb/topology.hpp"

namespace dcb {

// Downlink radio parameters. Defaults follow the usual macro-cell setup:
// 1800 MHz carrier, 100 m BS, 1.5 m mobile, 1.5 kW transmit power, -104 dBm
// noise floor, 1 km cells bifurcated at r/R = 1/sqrt(2).
struct RadioEnvironment {
    double carrier_mhz = 1800.0;
    double bs_height_m = 100.0;
    double ms_height_m = 1.5;
    double tx_power_w = 1500.0;
    double noise_dbm = -104.0;
    double cell_radius_m = 1000.0;
    double inner_radius_fraction = 0.70710678118654752;
    // Opt-in: group the mobile antenna correction as
    // (1.1*log10(fc) - 0.7)*hm instead of 1.1*(log10(fc) - 0.7)*hm.
    bool standard_correction = false;

    double inner_radius_m() const { return inner_radius_fraction * cell_radius_m; }
};

// Okumura-Hata mobile antenna height correction a(h_m) in dB.
double mobile_antenna_correction(double carrier_mhz, double ms_height_m,
                                 bool standard_grouping = false);

// Okumura-Hata path loss in dB; d in km, carrier in MHz, heights in m.
double path_loss_db(const RadioEnvironment& env, double d_km);

// Downlink received power at distance d (meters) in dBm.
double received_power_dbm(const RadioEnvironment& env, double d_m);

enum class Management { Off, On };

struct SinrSample {
    double user_distance_m = 0.0;
    double signal_dbm = 0.0;
    double interference_dbm = 0.0; // total co-channel interference
    double sinr_db = 0.0;
    Management management = Management::Off;
};

// Worst-case downlink SINR for a user of `serving_cell` at distance r from
// its BS, served on `group`, with tier-1/2 co-channel interference. The user
// sits on the azimuth toward the nearest interferer. Management removes the
// donor lattice anchor (the donor lent the channel and is silent on it) and
// is only valid inside the inner radius.
SinrSample sinr_db(const RadioEnvironment& env, const ClusterLayout& layout,
                   double r_m, int serving_cell, Group group, Management management);

} // namespace dcb
