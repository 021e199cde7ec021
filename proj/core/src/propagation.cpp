#include "dcb/propagation.hpp"

#include "dcb/errors.hpp"

#include <cmath>
#include <limits>
#include <vector>

namespace dcb {

namespace {
constexpr double kGeomEps = 1e-6; // meters

double dbm_to_mw(double dbm) { return std::pow(10.0, dbm / 10.0); }
double mw_to_dbm(double mw) { return 10.0 * std::log10(mw); }
} // namespace

double mobile_antenna_correction(double carrier_mhz, double ms_height_m,
                                 bool standard_grouping) {
    if (!(carrier_mhz > 0.0) || !(ms_height_m > 0.0))
        throw DomainError("carrier frequency and mobile height must be positive");
    const double lf = std::log10(carrier_mhz);
    const double hm_term = standard_grouping ? (1.1 * lf - 0.7) * ms_height_m
                                             : 1.1 * (lf - 0.7) * ms_height_m;
    return hm_term - (1.56 * lf - 0.8);
}

double path_loss_db(const RadioEnvironment& env, double d_km) {
    if (!(d_km > 0.0))
        throw DomainError("path loss distance must be positive");
    if (!(env.carrier_mhz > 0.0) || !(env.bs_height_m > 0.0))
        throw DomainError("carrier frequency and BS height must be positive");
    const double lf = std::log10(env.carrier_mhz);
    const double lhb = std::log10(env.bs_height_m);
    return 69.55 + 26.16 * lf - 13.82 * lhb -
           mobile_antenna_correction(env.carrier_mhz, env.ms_height_m, env.standard_correction) +
           (44.9 - 6.55 * lhb) * std::log10(d_km);
}

double received_power_dbm(const RadioEnvironment& env, double d_m) {
    if (!(d_m > 0.0))
        throw DomainError("distance must be positive");
    if (!(env.tx_power_w > 0.0))
        throw DomainError("transmit power must be positive");
    const double tx_dbm = 10.0 * std::log10(env.tx_power_w * 1000.0);
    return tx_dbm - path_loss_db(env, d_m / 1000.0);
}

SinrSample sinr_db(const RadioEnvironment& env, const ClusterLayout& layout,
                   double r_m, int serving_cell, Group group, Management management) {
    if (!(r_m > 0.0) || r_m > env.cell_radius_m + kGeomEps)
        throw DomainError("user distance must lie in (0, cell radius]");
    if (management == Management::On && r_m > env.inner_radius_m() + kGeomEps)
        throw DomainError("managed (borrowed) channels serve inner-region users only");

    const Cell& serving = layout.cell(serving_cell);
    const auto interferers = layout.co_channel_interferers(serving_cell, group, 2);

    // Donor lattice anchor, present only when serving on a foreign group.
    Point donor_pos{};
    bool have_donor = false;
    if (group != serving.group) {
        double best = std::numeric_limits<double>::infinity();
        int best_id = -1;
        for (const Cell& c : layout.cells()) {
            if (c.group != group)
                continue;
            const double d = distance(c.center, serving.center);
            if (d < best - kGeomEps || (d < best + kGeomEps && c.id < best_id)) {
                best = d;
                best_id = c.id;
            }
        }
        donor_pos = layout.cell(best_id).center;
        have_donor = true;
    }

    // Worst-case azimuth: toward the nearest interferer; ties resolved toward
    // the donor when there is one, else by angle.
    double min_d = std::numeric_limits<double>::infinity();
    for (const Interferer& it : interferers)
        min_d = std::min(min_d, distance(it.position, serving.center));
    const Interferer* target = nullptr;
    double target_angle = 0.0;
    for (const Interferer& it : interferers) {
        if (distance(it.position, serving.center) > min_d + kGeomEps)
            continue;
        if (have_donor && distance(it.position, donor_pos) < kGeomEps) {
            target = &it;
            break;
        }
        const double angle = std::atan2(it.position.y - serving.center.y,
                                        it.position.x - serving.center.x);
        if (target == nullptr || angle < target_angle) {
            target = &it;
            target_angle = angle;
        }
    }
    const double dx = target->position.x - serving.center.x;
    const double dy = target->position.y - serving.center.y;
    const double norm = std::hypot(dx, dy);
    const Point user{serving.center.x + r_m * dx / norm, serving.center.y + r_m * dy / norm};

    double interference_mw = 0.0;
    for (const Interferer& it : interferers) {
        if (management == Management::On && have_donor &&
            distance(it.position, donor_pos) < kGeomEps)
            continue; // donor lent the channel; it does not transmit on it
        interference_mw += dbm_to_mw(received_power_dbm(env, distance(it.position, user)));
    }

    SinrSample sample;
    sample.user_distance_m = r_m;
    sample.management = management;
    sample.signal_dbm = received_power_dbm(env, r_m);
    sample.interference_dbm = interference_mw > 0.0
                                  ? mw_to_dbm(interference_mw)
                                  : -std::numeric_limits<double>::infinity();
    sample.sinr_db = sample.signal_dbm -
                     mw_to_dbm(interference_mw + dbm_to_mw(env.noise_dbm));
    return sample;
}

} // namespace dcb
